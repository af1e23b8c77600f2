"""JSON instance formats.

Edge set:      {"n": int, "set": [[x1,y1,x2,y2], ...]}
Edge sequence: {"n": int, "seq": [[x1,y1,x2,y2], ...], "kind": "closed"|"open"}
Instance:      {"n": int, "form": "set"|"seq", "blue": {...}, "red": {...},
                "sides": [[x,y],[x,y]], "offset": [dx,dy]}

Validation errors carry the index of the offending edge entry.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Optional, Union

from .errors import FormatError, InvalidInstance
from .grid import (
    CLOSED,
    OPEN,
    DirectedEdge,
    Edge,
    EdgeSequence,
    EdgeSet,
    GridPoint,
    SidePair,
    side_pair,
)


def _parse_quad(entry, index) -> tuple:
    if (not isinstance(entry, (list, tuple)) or len(entry) != 4
            or not all(isinstance(v, int) for v in entry)):
        raise FormatError(f"edge {index}: expected [x1,y1,x2,y2] of ints", edge_index=index)
    return GridPoint(entry[0], entry[1]), GridPoint(entry[2], entry[3])


def edge_set_from_json(obj) -> EdgeSet:
    if not isinstance(obj, dict) or "n" not in obj or "set" not in obj:
        raise FormatError('edge set payload needs keys "n" and "set"')
    n = obj["n"]
    if not isinstance(n, int) or n < 1:
        raise FormatError(f"bad grid parameter: {n!r}")
    edges = set()
    for i, entry in enumerate(obj["set"]):
        p, q = _parse_quad(entry, i)
        try:
            e = Edge.of(p, q)
        except InvalidInstance as exc:
            raise FormatError(f"edge {i}: {exc}", edge_index=i) from None
        if not (0 <= e.a.x <= n and 0 <= e.a.y <= n and 0 <= e.b.x <= n and 0 <= e.b.y <= n):
            raise FormatError(f"edge {i}: endpoint outside grid [0,{n}]^2", edge_index=i)
        if e in edges:
            raise FormatError(f"edge {i}: duplicate edge", edge_index=i)
        edges.add(e)
    return EdgeSet(frozenset(edges), n)


def edge_set_to_json(es: EdgeSet) -> dict:
    return {"n": es.n, "set": [[e.a.x, e.a.y, e.b.x, e.b.y] for e in es.sorted_edges()]}


def edge_sequence_from_json(obj, *, validate: bool = True) -> EdgeSequence:
    """Parse a sequence payload.  ``validate=False`` skips the simplicity
    invariants (the merge diagnostics feed deliberately revisiting chains)."""
    if not isinstance(obj, dict) or "n" not in obj or "seq" not in obj or "kind" not in obj:
        raise FormatError('edge sequence payload needs keys "n", "seq" and "kind"')
    n, kind = obj["n"], obj["kind"]
    if not isinstance(n, int) or n < 1:
        raise FormatError(f"bad grid parameter: {n!r}")
    if kind not in (CLOSED, OPEN):
        raise FormatError(f'kind must be "closed" or "open", got {kind!r}')
    edges = []
    for i, entry in enumerate(obj["seq"]):
        p, q = _parse_quad(entry, i)
        try:
            edges.append(DirectedEdge.of(p, q))
        except InvalidInstance as exc:
            raise FormatError(f"edge {i}: {exc}", edge_index=i) from None
    seq = EdgeSequence(tuple(edges), n, kind)
    if validate:
        try:
            seq.validate()
        except InvalidInstance as exc:
            raise FormatError(str(exc), edge_index=exc.edge_index) from None
    return seq


def edge_sequence_to_json(seq: EdgeSequence) -> dict:
    return {
        "n": seq.n,
        "seq": [[e.src.x, e.src.y, e.dst.x, e.dst.y] for e in seq.edges],
        "kind": seq.kind,
    }


Payload = Union[EdgeSet, EdgeSequence]


@dataclass(frozen=True)
class Instance:
    """CLI-level container: grid metadata plus blue/red payloads and sides."""

    n: int
    form: str  # "set" | "seq"
    blue: Optional[Payload] = None
    red: Optional[Payload] = None
    sides: Optional[SidePair] = None
    offset: tuple = (0, 0)


def instance_from_json(obj) -> Instance:
    if not isinstance(obj, dict) or "n" not in obj or "form" not in obj:
        raise FormatError('instance needs keys "n" and "form"')
    n, form = obj["n"], obj["form"]
    if form not in ("set", "seq"):
        raise FormatError(f'form must be "set" or "seq", got {form!r}')
    loader = edge_set_from_json if form == "set" else edge_sequence_from_json

    def load_payload(key):
        if key not in obj or obj[key] is None:
            return None
        payload = loader(obj[key])
        if payload.n != n:
            raise FormatError(f'"{key}" grid parameter {payload.n} != instance n {n}')
        return payload

    blue = load_payload("blue")
    red = load_payload("red")
    sides = None
    if obj.get("sides") is not None:
        raw = obj["sides"]
        if (not isinstance(raw, list) or len(raw) != 2
                or any(len(p) != 2 for p in raw)):
            raise FormatError('"sides" must be [[x,y],[x,y]]')
        try:
            sides = side_pair(tuple(raw[0]), tuple(raw[1]))
        except InvalidInstance as exc:
            raise FormatError(str(exc)) from None
    offset = tuple(obj.get("offset", (0, 0)))
    if len(offset) != 2 or not all(isinstance(v, int) for v in offset):
        raise FormatError('"offset" must be [dx,dy]')
    return Instance(n=n, form=form, blue=blue, red=red, sides=sides, offset=offset)


def instance_to_json(inst: Instance) -> dict:
    dump = edge_set_to_json if inst.form == "set" else edge_sequence_to_json
    out = {"n": inst.n, "form": inst.form}
    if inst.blue is not None:
        out["blue"] = dump(inst.blue)
    if inst.red is not None:
        out["red"] = dump(inst.red)
    if inst.sides is not None:
        out["sides"] = [[inst.sides.p1.x, inst.sides.p1.y], [inst.sides.p2.x, inst.sides.p2.y]]
    if tuple(inst.offset) != (0, 0):
        out["offset"] = list(inst.offset)
    return out


def load_instance(path) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from None
    return instance_from_json(obj)


def save_instance(inst: Instance, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(instance_to_json(inst), fh, indent=2, sort_keys=True)
        fh.write("\n")
