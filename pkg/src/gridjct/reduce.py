"""Reductions between side-crossing instances and corner-to-corner
st-connectivity instances, in set and sequence forms.

The corner-to-corner direction closes the blue path into a curve around an
enlarged grid and drags the red path to a fresh side pair.  The opposite
direction reflects the four diagonal quarters of a grid centered on the
side-pair midpoint outward, reconnecting the reflected pieces with
axis-parallel connector runs; the sequence version additionally refines the
grid 8N-fold and pads every edge's expansion to exactly 16N^2 output edges
so any output index is resolvable in constant time.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Tuple, Union

from .errors import GridJctError, InvalidInstance, PreconditionViolation
from .grid import (
    CLOSED,
    OPEN,
    DirectedEdge,
    Edge,
    EdgeSequence,
    EdgeSet,
    GridPoint,
    SidePair,
    connects,
    is_curve,
    on_different_sides,
    refine,
    translate,
)

Payload = Union[EdgeSet, EdgeSequence]


def _form_of(obj: Payload) -> str:
    return "set" if isinstance(obj, EdgeSet) else "seq"


@dataclass(frozen=True)
class StConnInstance:
    """Blue joins the upper-left and lower-right corners, red the other two."""

    n: int
    blue: Payload
    red: Payload

    @property
    def form(self) -> str:
        return _form_of(self.blue)

    def corners(self):
        n = self.n
        return (GridPoint(0, n), GridPoint(n, 0), GridPoint(0, 0), GridPoint(n, n))

    def validate(self) -> "StConnInstance":
        ul, lr, ll, ur = self.corners()
        if _form_of(self.blue) != _form_of(self.red):
            raise InvalidInstance("blue and red must share a form")
        if self.blue.n != self.n or self.red.n != self.n:
            raise InvalidInstance("payload grid parameter mismatch")
        if self.form == "set":
            if not connects(self.blue, ul, lr):
                raise InvalidInstance(f"blue does not connect {tuple(ul)} and {tuple(lr)}")
            if not connects(self.red, ll, ur):
                raise InvalidInstance(f"red does not connect {tuple(ll)} and {tuple(ur)}")
        else:
            self.blue.validate()
            self.red.validate()
            if self.blue.kind != OPEN or {self.blue.start, self.blue.end} != {ul, lr}:
                raise InvalidInstance(f"blue path must join {tuple(ul)} and {tuple(lr)}")
            if self.red.kind != OPEN or {self.red.start, self.red.end} != {ll, ur}:
                raise InvalidInstance(f"red path must join {tuple(ll)} and {tuple(ur)}")
        return self


@dataclass(frozen=True)
class JctInstance:
    """Blue curve, red path between two points on different sides of it."""

    n: int
    blue: Payload
    red: Payload
    sides: SidePair
    offset: tuple = (0, 0)

    @property
    def form(self) -> str:
        return _form_of(self.blue)

    def blue_set(self) -> EdgeSet:
        return self.blue if isinstance(self.blue, EdgeSet) else self.blue.to_edge_set()

    def red_set(self) -> EdgeSet:
        return self.red if isinstance(self.red, EdgeSet) else self.red.to_edge_set()

    def validate(self) -> "JctInstance":
        if _form_of(self.blue) != _form_of(self.red):
            raise InvalidInstance("blue and red must share a form")
        if self.blue.n != self.n or self.red.n != self.n:
            raise InvalidInstance("payload grid parameter mismatch")
        p1, p2 = self.sides.p1, self.sides.p2
        if self.form == "seq":
            self.blue.validate()
            self.red.validate()
            if self.blue.kind != CLOSED:
                raise InvalidInstance("blue must be a closed curve")
            if self.red.kind != OPEN or {self.red.start, self.red.end} != {p1, p2}:
                raise InvalidInstance("red path endpoints are not the designated side pair")
        else:
            if not is_curve(self.blue):
                raise InvalidInstance("blue is not a curve")
            if not connects(self.red, p1, p2):
                raise InvalidInstance("red path endpoints are not the designated side pair")
        if not on_different_sides(self.blue_set(), p1, p2):
            raise InvalidInstance("side points are not on different sides of the curve")
        return self


# ---------------------------------------------------------------------------
# st-connectivity -> side crossing: close blue around the top/right boundary,
# drag red around the bottom to a fresh side pair at (n+1, 0)/(n+1, 2).
# ---------------------------------------------------------------------------

def _run_points(a: GridPoint, b: GridPoint) -> List[GridPoint]:
    """Lattice points of the axis-parallel run from a to b inclusive."""
    if a.x == b.x:
        step = 1 if b.y > a.y else -1
        return [GridPoint(a.x, y) for y in range(a.y, b.y + step, step)]
    if a.y == b.y:
        step = 1 if b.x > a.x else -1
        return [GridPoint(x, a.y) for x in range(a.x, b.x + step, step)]
    raise GridJctError("run endpoints not axis aligned")


def _run_edges(a: GridPoint, b: GridPoint) -> List[DirectedEdge]:
    pts = _run_points(a, b)
    return [DirectedEdge(pts[i], pts[i + 1]) for i in range(len(pts) - 1)]


def _added_stconn_blue(n: int) -> List[DirectedEdge]:
    """Closure path from the lower-right to the upper-left corner, after the
    +1 y-shift: two bottom edges, the right column, the top row, one step
    down to the blue start."""
    return (_run_edges(GridPoint(n, 1), GridPoint(n + 2, 1))
            + _run_edges(GridPoint(n + 2, 1), GridPoint(n + 2, n + 2))
            + _run_edges(GridPoint(n + 2, n + 2), GridPoint(0, n + 2))
            + _run_edges(GridPoint(0, n + 2), GridPoint(0, n + 1)))


def _added_stconn_red_prefix(n: int) -> List[DirectedEdge]:
    return (_run_edges(GridPoint(n + 1, 0), GridPoint(0, 0))
            + _run_edges(GridPoint(0, 0), GridPoint(0, 1)))


def _added_stconn_red_suffix(n: int) -> List[DirectedEdge]:
    return (_run_edges(GridPoint(n, n + 1), GridPoint(n + 1, n + 1))
            + _run_edges(GridPoint(n + 1, n + 1), GridPoint(n + 1, 2)))


def _stconn_sides(n: int) -> SidePair:
    return SidePair(GridPoint(n + 1, 0), GridPoint(n + 1, 2), GridPoint(n + 1, 1))


def stconn_to_jct_set(inst: StConnInstance) -> JctInstance:
    """Embed a set-form st-connectivity instance as a side-crossing instance
    on the (n+2) grid; intersection status is preserved point for point."""
    inst.validate()
    if inst.form != "set":
        raise PreconditionViolation("set-form instance")
    n = inst.n
    n_out = n + 2
    blue = set(translate(inst.blue, 0, 1, n_out).edges)
    blue.update(e.undirected() for e in _added_stconn_blue(n))
    red = set(translate(inst.red, 0, 1, n_out).edges)
    red.update(e.undirected() for e in _added_stconn_red_prefix(n))
    red.update(e.undirected() for e in _added_stconn_red_suffix(n))
    out = JctInstance(n=n_out, blue=EdgeSet(frozenset(blue), n_out),
                      red=EdgeSet(frozenset(red), n_out),
                      sides=_stconn_sides(n), offset=(0, 1))
    return out.validate()


class JctSeqReduction:
    """Sequence-form embedding with constant-time access to any output edge."""

    def __init__(self, instance: JctInstance, blue_core: EdgeSequence,
                 red_core: EdgeSequence, n_in: int):
        self.instance = instance
        self._blue_core = blue_core
        self._red_core = red_core
        self._blue_added = _added_stconn_blue(n_in)
        self._red_prefix = _added_stconn_red_prefix(n_in)
        self._red_suffix = _added_stconn_red_suffix(n_in)

    def blue_edge_at(self, j: int) -> DirectedEdge:
        t = len(self._blue_core.edges)
        if 0 <= j < t:
            return self._blue_core.edges[j]
        if j < t + len(self._blue_added):
            return self._blue_added[j - t]
        raise PreconditionViolation("edge index in range", f"blue index {j} out of range")

    def red_edge_at(self, j: int) -> DirectedEdge:
        p, t = len(self._red_prefix), len(self._red_core.edges)
        if 0 <= j < p:
            return self._red_prefix[j]
        if j < p + t:
            return self._red_core.edges[j - p]
        if j < p + t + len(self._red_suffix):
            return self._red_suffix[j - p - t]
        raise PreconditionViolation("edge index in range", f"red index {j} out of range")


def stconn_to_jct_seq(inst: StConnInstance) -> JctSeqReduction:
    """Sequence analogue of :func:`stconn_to_jct_set`: same geometry, with
    ordered output sequences indexable without materialization."""
    inst.validate()
    if inst.form != "seq":
        raise PreconditionViolation("seq-form instance")
    n = inst.n
    n_out = n + 2
    ul, lr, ll, ur = inst.corners()
    blue_in = inst.blue if inst.blue.start == ul else inst.blue.reverse()
    red_in = inst.red if inst.red.start == ll else inst.red.reverse()
    blue_core = translate(blue_in, 0, 1, n_out)
    red_core = translate(red_in, 0, 1, n_out)
    blue_seq = EdgeSequence(tuple(blue_core.edges) + tuple(_added_stconn_blue(n)),
                            n_out, CLOSED)
    red_seq = EdgeSequence(tuple(_added_stconn_red_prefix(n)) + tuple(red_core.edges)
                           + tuple(_added_stconn_red_suffix(n)), n_out, OPEN)
    out = JctInstance(n=n_out, blue=blue_seq, red=red_seq,
                      sides=_stconn_sides(n), offset=(0, 1)).validate()
    return JctSeqReduction(out, blue_core, red_core, n)


# ---------------------------------------------------------------------------
# Side crossing -> st-connectivity: reflect the four diagonal quarters of the
# midpoint-centered grid outward.
# ---------------------------------------------------------------------------

def _centering(inst: JctInstance) -> Tuple[int, int, int]:
    """Big-grid parameters: (N, dx, dy) with the midpoint landing at (N, N)
    of the 2N grid and the input grid inside [N/2, 3N/2]^2."""
    mid, n = inst.sides.mid, inst.n
    half = max(mid.x, mid.y, n - mid.x, n - mid.y)
    big_n = 2 * half
    return big_n, big_n - mid.x, big_n - mid.y


def _reflect(quarter: str, p: GridPoint, big_n: int) -> GridPoint:
    if quarter == "B":
        return GridPoint(p.x, big_n - p.y)
    if quarter == "L":
        return GridPoint(big_n - p.x, p.y)
    if quarter == "T":
        return GridPoint(p.x, 3 * big_n - p.y)
    if quarter == "R":
        return GridPoint(3 * big_n - p.x, p.y)
    raise GridJctError(f"unknown quarter {quarter!r}")


def _strict_quarter(p: GridPoint, big_n: int) -> Optional[str]:
    du, dv = p.x - big_n, p.y - big_n
    if dv < -abs(du):
        return "B"
    if dv > abs(du):
        return "T"
    if du < -abs(dv):
        return "L"
    if du > abs(dv):
        return "R"
    return None  # on a diagonal


def _edge_quarter(a: GridPoint, b: GridPoint, big_n: int) -> str:
    qa, qb = _strict_quarter(a, big_n), _strict_quarter(b, big_n)
    if qa and qb and qa != qb:
        raise GridJctError("edge spans two open quarters (bug)")
    q = qa or qb
    if q is None:
        raise GridJctError("edge with both endpoints on diagonals (impossible)")
    return q


def _connector_runs(im1: GridPoint, im2: GridPoint, big_n: int,
                    quarter_from: str) -> Tuple[Tuple[GridPoint, GridPoint], ...]:
    """Axis-parallel L-route between the two images of a diagonal crossing."""
    corner = _reflect(quarter_from, im2, big_n)
    runs = []
    if im1 != corner:
        runs.append((im1, corner))
    if corner != im2:
        runs.append((corner, im2))
    return tuple(runs)


def _diag_crossings_set(es: EdgeSet, big_n: int, skip: frozenset) -> List[Tuple]:
    """(point, quarterA, quarterB) for every diagonal point whose incident
    edges live in two different quarters."""
    incident: Dict[GridPoint, List[str]] = {}
    for e in es.edges:
        q = _edge_quarter(e.a, e.b, big_n)
        for p in (e.a, e.b):
            if _strict_quarter(p, big_n) is None:
                incident.setdefault(p, []).append(q)
    out = []
    for p, qs in sorted(incident.items()):
        if p in skip:
            continue
        uniq = sorted(set(qs))
        if len(uniq) == 2:
            out.append((p, uniq[0], uniq[1]))
        elif len(uniq) > 2:
            raise GridJctError("diagonal point touched from more than two quarters")
    return out


def _reflect_color_set(es: EdgeSet, big_n: int, skip_center: bool) -> set:
    center = GridPoint(big_n, big_n)
    out = set()
    for e in es.edges:
        q = _edge_quarter(e.a, e.b, big_n)
        out.add(Edge.of(_reflect(q, e.a, big_n), _reflect(q, e.b, big_n)))
    skip = frozenset([center]) if skip_center else frozenset()
    for w, qa, qb in _diag_crossings_set(es, big_n, skip):
        im1, im2 = _reflect(qa, w, big_n), _reflect(qb, w, big_n)
        if im1 == im2:
            continue
        for a, b in _connector_runs(im1, im2, big_n, qa):
            out.update(e.undirected() for e in _run_edges(a, b))
    return out


def _check_red_clear_of_mid(inst: JctInstance):
    if inst.red_set().degree(inst.sides.mid) > 0:
        raise InvalidInstance(
            "red path touches the side-pair midpoint; the reflection "
            "reduction is undefined for this degenerate (already touching) case")


def jct_to_stconn_set(inst: JctInstance) -> StConnInstance:
    """Reflect a set-form side-crossing instance into a corner-to-corner
    instance on the 2N grid (N = centered grid parameter)."""
    inst.validate()
    if inst.form != "set":
        raise PreconditionViolation("set-form instance")
    _check_red_clear_of_mid(inst)
    big_n, dx, dy = _centering(inst)
    n_out = 2 * big_n
    blue_big = translate(inst.blue, dx, dy, n_out)
    red_big = translate(inst.red, dx, dy, n_out)

    blue = _reflect_color_set(blue_big, big_n, skip_center=True)
    blue.update(e.undirected() for e in _run_edges(GridPoint(0, n_out), GridPoint(0, big_n)))
    blue.update(e.undirected() for e in _run_edges(GridPoint(n_out, big_n), GridPoint(n_out, 0)))

    red = _reflect_color_set(red_big, big_n, skip_center=False)
    red.update(e.undirected() for e in _run_edges(GridPoint(0, 0), GridPoint(big_n, 0)))
    red.add(Edge.of(GridPoint(big_n, 0), GridPoint(big_n, 1)))
    red.add(Edge.of(GridPoint(big_n, n_out - 1), GridPoint(big_n, n_out)))
    red.update(e.undirected() for e in _run_edges(GridPoint(big_n, n_out), GridPoint(n_out, n_out)))

    out = StConnInstance(n=n_out, blue=EdgeSet(frozenset(blue), n_out),
                         red=EdgeSet(frozenset(red), n_out))
    return out.validate()


def jct_witness_to_stconn(inst: JctInstance, w, *, scale: int = 1) -> GridPoint:
    """Map a shared input point to a shared output point of the reflection
    reduction (optionally scaled, for the refined sequence form)."""
    w = GridPoint(*w)
    big_n, dx, dy = _centering(inst)
    wb = GridPoint(w.x + dx, w.y + dy)

    def quarters_at(es: EdgeSet) -> set:
        out = set()
        for e in es.edges:
            ea = GridPoint(e.a.x + dx, e.a.y + dy)
            eb = GridPoint(e.b.x + dx, e.b.y + dy)
            if wb in (ea, eb):
                out.add(_edge_quarter(ea, eb, big_n))
        return out

    bq = quarters_at(inst.blue_set())
    rq = quarters_at(inst.red_set())
    if not bq or not rq:
        raise PreconditionViolation("shared point", f"{tuple(w)} is not shared")
    common = sorted(bq & rq)
    if common:
        img = _reflect(common[0], wb, big_n)
    elif len(bq) == 2 and len(rq) == 2:
        qa, qb = sorted(bq)
        img = _reflect(qb, _reflect(qa, wb, big_n), big_n)  # shared connector corner
    else:
        raise InvalidInstance(
            "witness not transportable: the colors touch this diagonal point "
            "from different single quarters")
    return GridPoint(img.x * scale, img.y * scale)


# --- sequence form with the 16N^2 expansion --------------------------------

@dataclass(frozen=True)
class ExpansionBlock:
    """Expansion of one input edge: its reflected image plus any connector
    runs that follow it, padded by right-side excursions to 16N^2 edges."""

    src: GridPoint
    direction: Tuple[int, int]
    detour_len: int  # connector length following the image edge (0 = inward)
    runs: Tuple[Tuple[GridPoint, Tuple[int, int], int], ...]

    @property
    def outward(self) -> bool:
        return self.detour_len > 0

    @property
    def kind(self) -> str:
        """"outward" edges are the ones followed by connector runs."""
        return "outward" if self.outward else "inward"


def _seq_blocks(edges: List[DirectedEdge], big_n: int) -> List[ExpansionBlock]:
    blocks = []
    for i, e in enumerate(edges):
        q = _edge_quarter(e.src, e.dst, big_n)
        img_src = _reflect(q, e.src, big_n)
        img_dst = _reflect(q, e.dst, big_n)
        runs = []
        detour = 0
        if i + 1 < len(edges):
            q2 = _edge_quarter(edges[i + 1].src, edges[i + 1].dst, big_n)
            if q2 != q:
                w = e.dst
                im1, im2 = _reflect(q, w, big_n), _reflect(q2, w, big_n)
                if im1 != im2:
                    for a, b in _connector_runs(im1, im2, big_n, q):
                        d = ((b.x - a.x > 0) - (b.x - a.x < 0),
                             (b.y - a.y > 0) - (b.y - a.y < 0))
                        length = abs(b.x - a.x) + abs(b.y - a.y)
                        runs.append((a, d, length))
                        detour += length
        ell = detour // 2
        if detour % 2 != 0 or (detour and not 1 <= ell < big_n):
            raise GridJctError(
                f"outward run of length {detour + 1} is not of the form 2l+1 "
                f"with 1 <= l < {big_n}")
        blocks.append(ExpansionBlock(src=img_src,
                                     direction=(img_dst.x - img_src.x, img_dst.y - img_src.y),
                                     detour_len=detour, runs=tuple(runs)))
    return blocks


class StConnSeqReduction:
    """Handle over the refined sequence reduction.

    ``edge_at(j)`` resolves the j-th edge of the expanded core (the part
    between the image end points) from ``j // 16N^2`` alone; prefix and
    suffix boundary extensions are plain 8N-fold refinements with closed-form
    lengths.
    """

    def __init__(self, source: JctInstance, big_n: int,
                 red_blocks: List[ExpansionBlock], blue_blocks: List[ExpansionBlock],
                 red_prefix, red_suffix, blue_prefix, blue_suffix):
        self.source = source
        self.n_base = big_n
        self.factor = 8 * big_n
        self.block_size = 16 * big_n * big_n
        self.n_out = 2 * big_n * self.factor
        self._blocks = {"red": red_blocks, "blue": blue_blocks}
        self._prefix = {"red": red_prefix, "blue": blue_prefix}
        self._suffix = {"red": red_suffix, "blue": blue_suffix}

    def core_length(self, color: str = "red") -> int:
        return self.block_size * len(self._blocks[color])

    def edge_at(self, j: int, color: str = "red") -> DirectedEdge:
        blocks = self._blocks[color]
        if not 0 <= j < self.block_size * len(blocks):
            raise PreconditionViolation("edge index within the expanded core",
                                        f"index {j} out of range")
        i, r = divmod(j, self.block_size)
        return self._block_edge(blocks[i], r)

    def _block_edge(self, blk: ExpansionBlock, r: int) -> DirectedEdge:
        n, f = self.n_base, self.factor
        h = 4 * n - 2 * blk.detour_len - 2  # 4N-2 inward, 4N-4l-2 outward
        d = blk.direction
        perp = (d[1], -d[0])  # right of the direction of travel
        sx, sy = blk.src.x * f, blk.src.y * f
        per = 1 + h
        phase1 = 4 * n * per
        if r < phase1:
            rep, o = divmod(r, per)
            alt = h if rep % 2 else 0
            bx, by = sx + rep * d[0] + alt * perp[0], sy + rep * d[1] + alt * perp[1]
            if o == 0:
                return DirectedEdge(GridPoint(bx, by), GridPoint(bx + d[0], by + d[1]))
            bx, by = bx + d[0], by + d[1]
            sgn = 1 if rep % 2 == 0 else -1
            ax = bx + sgn * (o - 1) * perp[0]
            ay = by + sgn * (o - 1) * perp[1]
            return DirectedEdge(GridPoint(ax, ay),
                                GridPoint(ax + sgn * perp[0], ay + sgn * perp[1]))
        r -= phase1
        if r < 4 * n:
            o = 4 * n + r
            ax, ay = sx + o * d[0], sy + o * d[1]
            return DirectedEdge(GridPoint(ax, ay), GridPoint(ax + d[0], ay + d[1]))
        r -= 4 * n
        for start, rd, ln in blk.runs:
            steps = ln * f
            if r < steps:
                ax, ay = start.x * f + r * rd[0], start.y * f + r * rd[1]
                return DirectedEdge(GridPoint(ax, ay), GridPoint(ax + rd[0], ay + rd[1]))
            r -= steps
        raise GridJctError("block index arithmetic out of range (bug)")

    def block_edges(self, i: int, color: str = "red"):
        base = i * self.block_size
        return [self.edge_at(base + r, color) for r in range(self.block_size)]

    def materialize(self, color: str) -> EdgeSequence:
        pre = refine(EdgeSequence(tuple(self._prefix[color]), 2 * self.n_base, OPEN),
                     self.factor)
        suf = refine(EdgeSequence(tuple(self._suffix[color]), 2 * self.n_base, OPEN),
                     self.factor)
        core = []
        for i in range(len(self._blocks[color])):
            core.extend(self.block_edges(i, color))
        return EdgeSequence(tuple(pre.edges) + tuple(core) + tuple(suf.edges),
                            self.n_out, OPEN)

    @cached_property
    def instance(self) -> StConnInstance:
        return StConnInstance(n=self.n_out, blue=self.materialize("blue"),
                              red=self.materialize("red")).validate()

    def to_instance(self) -> StConnInstance:
        return self.instance

    def witness_point(self, w) -> GridPoint:
        return jct_witness_to_stconn(self.source, w, scale=self.factor)


def jct_to_stconn_seq(inst: JctInstance) -> StConnSeqReduction:
    """Reflect a sequence-form side-crossing instance and refine 8N-fold so
    every input edge expands to exactly 16N^2 output edges."""
    inst.validate()
    if inst.form != "seq":
        raise PreconditionViolation("seq-form instance")
    _check_red_clear_of_mid(inst)
    big_n, dx, dy = _centering(inst)
    n_mid = 2 * big_n
    center = GridPoint(big_n, big_n)

    red_in = inst.red if inst.red.start == min(inst.sides.p1, inst.sides.p2,
                                               key=lambda p: p.y) else inst.red.reverse()
    red_big = translate(red_in, dx, dy, n_mid)
    blue_big = translate(inst.blue, dx, dy, n_mid)
    start_idx = next(i for i, e in enumerate(blue_big.edges) if e.src == center)
    blue_big = blue_big.rotate(start_idx)
    if _edge_quarter(blue_big.edges[0].src, blue_big.edges[0].dst, big_n) != "L":
        blue_big = blue_big.reverse()  # reversal keeps the center first, now westward

    red_blocks = _seq_blocks(list(red_big.edges), big_n)
    blue_blocks = _seq_blocks(list(blue_big.edges), big_n)

    red_prefix = (_run_edges(GridPoint(0, 0), GridPoint(big_n, 0))
                  + [DirectedEdge(GridPoint(big_n, 0), GridPoint(big_n, 1))])
    red_suffix = ([DirectedEdge(GridPoint(big_n, n_mid - 1), GridPoint(big_n, n_mid))]
                  + _run_edges(GridPoint(big_n, n_mid), GridPoint(n_mid, n_mid)))
    blue_prefix = _run_edges(GridPoint(0, n_mid), GridPoint(0, big_n))
    blue_suffix = _run_edges(GridPoint(n_mid, big_n), GridPoint(n_mid, 0))

    if red_blocks[0].src != GridPoint(big_n, 1):
        raise GridJctError("red core does not start at the lower image point (bug)")
    if blue_blocks[0].src != GridPoint(0, big_n):
        raise GridJctError("blue core does not start at the left corner image (bug)")
    return StConnSeqReduction(inst, big_n, red_blocks, blue_blocks,
                              red_prefix, red_suffix, blue_prefix, blue_suffix)


def edge_at(reduced: StConnSeqReduction, j: int) -> DirectedEdge:
    """j-th edge of the reduced red path's expanded core, without materializing."""
    return reduced.edge_at(j, "red")
