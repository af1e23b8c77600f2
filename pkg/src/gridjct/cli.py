"""Command-line entry point.

Subcommands: validate, parity, alternation, regions, connect, merge, reduce,
gen, render, fuzz.  Exit codes: 0 success, 1 invalid instance, 2 theorem
violation (always a bug report, never a property of a valid input).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cnf, generate, jordan, parity, reduce as reductions
from .alternation import check_edge_alternation
from .errors import GridJctError, InvalidInstance, LemmaViolation, PreconditionViolation, TheoremViolation
from .grid import EdgeSequence, EdgeSet, GridPoint, side_pair
from .jsonio import (
    Instance,
    edge_sequence_from_json,
    edge_sequence_to_json,
    instance_to_json,
    load_instance,
    save_instance,
)
from .render import RenderSpec, render_svg


def _emit(args, payload: dict, text: str):
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _need(inst: Instance, *fields):
    for f in fields:
        if getattr(inst, f) is None:
            raise InvalidInstance(f'instance is missing "{f}"')


def _as_sets(inst: Instance):
    blue = inst.blue if isinstance(inst.blue, EdgeSet) else inst.blue.to_edge_set()
    red = inst.red if isinstance(inst.red, EdgeSet) else inst.red.to_edge_set()
    return blue, red


def cmd_validate(args) -> int:
    inst = load_instance(args.instance)
    for payload in (inst.blue, inst.red):
        if isinstance(payload, EdgeSequence):
            payload.validate()
    _emit(args, {"valid": True, "n": inst.n, "form": inst.form},
          f"valid instance: n={inst.n} form={inst.form}")
    return 0


def cmd_parity(args) -> int:
    inst = load_instance(args.instance)
    _need(inst, "blue", "red")
    blue, red = _as_sets(inst)
    if args.witness:
        _need(inst, "sides")
        w = parity.find_intersection_set(blue, red, inst.sides)
        payload = {"point": [w.point.x, w.point.y],
                   "blue_degree": w.blue_degree, "red_degree": w.red_degree}
        _emit(args, payload, json.dumps(payload, sort_keys=True))
    else:
        prof = parity.parity_profile(blue, red)
        _emit(args, {"profile": str(prof)}, str(prof))
    return 0


def cmd_alternation(args) -> int:
    inst = load_instance(args.instance)
    _need(inst, "blue")
    if not isinstance(inst.blue, EdgeSequence):
        raise InvalidInstance("alternation needs a sequence-form instance")
    inst.blue.validate()
    ok = check_edge_alternation(inst.blue)
    _emit(args, {"alternates": ok}, "alternates" if ok else "ALTERNATION VIOLATED")
    if not ok:
        raise TheoremViolation("a valid closed curve failed edge alternation")
    return 0


def cmd_regions(args) -> int:
    inst = load_instance(args.instance)
    _need(inst, "blue")
    if not isinstance(inst.blue, EdgeSequence):
        raise InvalidInstance("regions needs a sequence-form instance")
    count = jordan.count_regions(inst.blue)
    _emit(args, {"regions": count}, str(count))
    if count != 2:
        raise TheoremViolation(f"curve produced {count} regions instead of 2")
    return 0


def cmd_connect(args) -> int:
    inst = load_instance(args.instance)
    _need(inst, "blue", "sides")
    if not isinstance(inst.blue, EdgeSequence):
        raise InvalidInstance("connect needs a sequence-form instance")
    x, y = (int(v) for v in args.point.split(","))
    path = jordan.region_connect(inst.blue, GridPoint(x, y), inst.sides)
    payload = edge_sequence_to_json(path)
    _emit(args, payload, json.dumps(payload, sort_keys=True))
    if args.svg:
        refined = Instance(n=path.n, form="seq", blue=None, red=path if path.edges else None)
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(refined))
    return 0


def _load_sequence_file(path) -> EdgeSequence:
    # chain-level validation happens inside merge_paths; revisiting chains are
    # legitimate diagnostic inputs here
    with open(path, "r", encoding="utf-8") as fh:
        return edge_sequence_from_json(json.load(fh), validate=False)


def cmd_merge(args) -> int:
    blue = _load_sequence_file(args.blue)
    red = _load_sequence_file(args.red)
    sides = side_pair(red.edges[0].src, red.edges[-1].dst)
    merged = jordan.merge_paths(blue, red, sides)
    ok = check_edge_alternation(merged)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(Instance(n=merged.n, form="seq", blue=merged)))
    payload = {"merged": edge_sequence_to_json(merged), "alternates": ok}
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(payload["merged"], fh, indent=2, sort_keys=True)
            fh.write("\n")
        _emit(args, {"alternates": ok, "out": args.out},
              f"merged {len(merged)} edges -> {args.out}; alternates: {ok}")
    else:
        _emit(args, payload, json.dumps(payload, sort_keys=True))
    return 0


def cmd_reduce(args) -> int:
    inst = load_instance(args.instance)
    if inst.form != args.form:
        raise InvalidInstance(f"instance form {inst.form!r} does not match --form {args.form}")
    _need(inst, "blue", "red")
    if args.source == "stconn":
        src = reductions.StConnInstance(n=inst.n, blue=inst.blue, red=inst.red)
        if args.form == "set":
            out = reductions.stconn_to_jct_set(src)
        else:
            out = reductions.stconn_to_jct_seq(src).instance
        result = Instance(n=out.n, form=args.form, blue=out.blue, red=out.red,
                          sides=out.sides, offset=out.offset)
    else:
        _need(inst, "sides")
        src = reductions.JctInstance(n=inst.n, blue=inst.blue, red=inst.red, sides=inst.sides)
        if args.form == "set":
            out = reductions.jct_to_stconn_set(src)
            result = Instance(n=out.n, form="set", blue=out.blue, red=out.red)
        else:
            handle = reductions.jct_to_stconn_seq(src)
            if args.edge_at is not None:
                e = reductions.edge_at(handle, args.edge_at)
                payload = {"edge": [e.src.x, e.src.y, e.dst.x, e.dst.y],
                           "block_size": handle.block_size}
                _emit(args, payload, json.dumps(payload, sort_keys=True))
                return 0
            out = handle.instance
            result = Instance(n=out.n, form="seq", blue=out.blue, red=out.red)
    if args.out:
        save_instance(result, args.out)
        _emit(args, {"n": result.n, "out": args.out}, f"wrote n={result.n} instance to {args.out}")
    else:
        print(json.dumps(instance_to_json(result), sort_keys=True))
    return 0


def cmd_gen(args) -> int:
    maker = cnf.gen_stconn if args.family == "stconn" else cnf.gen_stseq
    formula = maker(args.n, intersection_clauses=args.weaken != "no-intersection")
    if args.out:
        cnf.write_dimacs(formula, args.out)
    else:
        sys.stdout.write(cnf.to_dimacs(formula))
    if args.check:
        model = cnf.solve(formula, args.check)
        verdict = "UNSAT" if model is None else "SAT"
        print(f"c check [{args.check}]: {verdict}", file=sys.stderr)
        if model is not None:
            blue, red = cnf.decode_model(formula, model)
            print(f"c model decodes: blue={len(blue)} edges, red={len(red)} edges",
                  file=sys.stderr)
    return 0


def cmd_render(args) -> int:
    inst = load_instance(args.instance)
    with open(args.svg, "w", encoding="utf-8") as fh:
        fh.write(render_svg(inst, RenderSpec()))
    _emit(args, {"svg": args.svg}, f"wrote {args.svg}")
    return 0


def cmd_fuzz(args) -> int:
    checked = 0
    for k in range(args.count):
        seed = args.seed + k
        inst = generate.gen_crossing_instance(args.n, seed)
        w = jordan.find_intersection_seq(inst.blue, inst.red, inst.sides)
        shared = inst.blue.point_set & inst.red.point_set
        if w.point not in shared:
            raise TheoremViolation(f"seed {seed}: witness not actually shared")
        if not check_edge_alternation(inst.blue):
            raise TheoremViolation(f"seed {seed}: curve failed edge alternation")
        if inst.n <= 16 and jordan.count_regions(inst.blue) != 2:
            raise TheoremViolation(f"seed {seed}: wrong region count")
        checked += 1
    _emit(args, {"checked": checked, "seed": args.seed, "n": args.n},
          f"fuzz: {checked} instances checked, no violations")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gridjct",
                                description="Grid-curve crossing toolkit: parity and "
                                            "alternation checks, region labeling, "
                                            "st-connectivity reductions, CNF generators.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **kw):
        sp = sub.add_parser(name, **kw)
        sp.set_defaults(fn=fn)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    sp = add("validate", cmd_validate, help="validate an instance file")
    sp.add_argument("--instance", required=True)

    sp = add("parity", cmd_parity, help="column parity profile or intersection witness")
    sp.add_argument("--instance", required=True)
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--profile", action="store_true", default=True)
    group.add_argument("--witness", action="store_true")

    sp = add("alternation", cmd_alternation, help="check per-column edge alternation")
    sp.add_argument("--instance", required=True)

    sp = add("regions", cmd_regions, help="count regions of the refined grid")
    sp.add_argument("--instance", required=True)

    sp = add("connect", cmd_connect, help="connect a refined point to a side point")
    sp.add_argument("--instance", required=True)
    sp.add_argument("--point", required=True, metavar="X,Y")
    sp.add_argument("--svg")

    sp = add("merge", cmd_merge, help="splice a curve and a path into one closed chain")
    sp.add_argument("--blue", required=True)
    sp.add_argument("--red", required=True)
    sp.add_argument("--out")
    sp.add_argument("--svg")

    sp = add("reduce", cmd_reduce, help="run a reduction in either direction")
    sp.add_argument("--from", dest="source", choices=("jct", "stconn"), required=True)
    sp.add_argument("--form", choices=("set", "seq"), required=True)
    sp.add_argument("--instance", required=True)
    sp.add_argument("--out")
    sp.add_argument("--edge-at", type=int, default=None)

    sp = add("gen", cmd_gen, help="emit a DIMACS CNF family member")
    sp.add_argument("--family", choices=("stconn", "stseq"), required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--out")
    sp.add_argument("--check", choices=(cnf.EXHAUSTIVE, cnf.DPLL))
    sp.add_argument("--weaken", choices=("no-intersection",))

    sp = add("render", cmd_render, help="render an instance to SVG")
    sp.add_argument("--instance", required=True)
    sp.add_argument("--svg", required=True)

    sp = add("fuzz", cmd_fuzz, help="run seeded property sweeps")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--count", type=int, default=20)
    sp.add_argument("--n", type=int, default=12)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (TheoremViolation, LemmaViolation) as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return 2
    except (InvalidInstance, PreconditionViolation, GridJctError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
