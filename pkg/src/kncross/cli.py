"""Command line entry point ``kn``.

Exit codes: 0 success / verified, 1 verification failed or target missed,
2 usage, parse or domain error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import io
from .canonical import canonical_matrix, verify_blocks
from .core import DomainError, PageMatrix, ValidationError, z_value
from .cross_index import crossing_report
from .freeness import check_dprime, find_free_hamiltonian_cycle, verify_theorem_1
from .optimizer import AnnealConfig, exhaustive_min, reroute_witness_search, stochastic_min
from .render import RenderSpec, render_svg
from .rerouted import build_dprime, extended_crossing_report
from .verification import Verification

SCHEMA = 1


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps({"schema": SCHEMA, "command": args.command, **payload}, sort_keys=True))
    else:
        print(text)


def _edge_str(e) -> str:
    return f"({e[0]},{e[1]})"


def _diagram_source(args):
    if getattr(args, "canonical", None) is not None:
        return canonical_matrix(args.canonical)
    if getattr(args, "dprime", None) is not None:
        return build_dprime(args.dprime)
    path = getattr(args, "matrix", None) or getattr(args, "diagram", None)
    return io.load_diagram(path)


def _add_source(p: argparse.ArgumentParser, file_flag: str, dprime: bool = True) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--canonical", type=int, metavar="N", help="the canonical optimal matrix M_N")
    if dprime:
        g.add_argument("--dprime", type=int, metavar="N", help="M_N with chord ((N+1)/2, N) rerouted")
    g.add_argument(f"--{file_flag}", metavar="FILE", help="matrix or diagram file")


def cmd_zvalue(args) -> int:
    z = z_value(args.n)
    _emit(args, {"n": args.n, "z": z}, str(z))
    return 0


def cmd_canonical(args) -> int:
    m = canonical_matrix(args.n)
    if args.out:
        io.save_diagram(m, args.out, args.format)
        _emit(args, {"n": args.n, "out": args.out}, f"wrote {args.out}")
    elif args.json:
        _emit(args, {"matrix": io.matrix_to_json(m)}, "")
    else:
        print(io.dumps(m, args.format), end="")
    return 0


def cmd_cross_index(args) -> int:
    d = _diagram_source(args)
    rep = crossing_report(d) if isinstance(d, PageMatrix) else extended_crossing_report(d)
    if args.json or args.report == "json":
        payload = {"n": d.n, "total": rep.total, "z": z_value(d.n)}
        if args.per_edge:
            payload["per_edge"] = rep.to_json()["per_edge"]
            payload["pairs"] = rep.to_json()["pairs"]
        print(json.dumps({"schema": SCHEMA, "command": args.command, **payload}, sort_keys=True))
        return 0
    lines = [f"n={d.n} epsilon={rep.total} Z(n)={z_value(d.n)}"]
    if args.per_edge:
        lines += [f"{_edge_str(e)} {c}" for e, c in sorted(rep.per_edge.items())]
    print("\n".join(lines))
    return 0


def _verification_out(args, reports: list[Verification]) -> int:
    ok = all(r.passed for r in reports)
    if args.json:
        _emit(args, {"passed": ok, "reports": [r.to_json() for r in reports]}, "")
    else:
        for r in reports:
            print("\n".join(r.lines()))
    return 0 if ok else 1


def _parse_sweep(text: str) -> range:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise DomainError(f"--sweep expects LO..HI, got {text!r}") from None
    return range(lo, hi + 1)


def cmd_verify_blocks(args) -> int:
    ns = list(_parse_sweep(args.sweep)) if args.sweep else [args.n]
    return _verification_out(args, [verify_blocks(n) for n in ns])


def cmd_dprime(args) -> int:
    d = build_dprime(args.n)
    if args.out:
        io.save_diagram(d, args.out)
    if args.check:
        return _verification_out(args, [check_dprime(args.n)])
    if args.out:
        _emit(args, {"n": args.n, "out": args.out}, f"wrote {args.out}")
    elif args.json:
        _emit(args, {"diagram": io.diagram_to_json(d)}, "")
    else:
        print(io.dumps(d), end="")
    return 0


def cmd_free_cycles(args) -> int:
    d = _diagram_source(args)
    cycle = find_free_hamiltonian_cycle(d)
    text = "NONE" if cycle is None else " ".join(map(str, cycle))
    _emit(args, {"n": d.n, "cycle": None if cycle is None else list(cycle)}, text)
    return 0


def cmd_verify_theorem1(args) -> int:
    return _verification_out(args, [verify_theorem_1(args.n)])


def cmd_search(args) -> int:
    if args.mode == "exhaustive":
        res = exhaustive_min(args.n, cap=args.cap, workers=args.workers)
    else:
        cfg = AnnealConfig(restarts=args.restarts, steps=args.steps)
        res = stochastic_min(args.n, seed=args.seed, config=cfg, workers=args.workers)
    z = z_value(args.n)
    stats = {k: v for k, v in res.stats.items() if k != "seconds"}
    payload = {
        "n": args.n, "mode": res.mode, "best_value": res.best_value, "z": z,
        "witness": io.matrix_to_json(res.witness), "stats": stats, "flags": res.flags,
    }
    text = str(res.best_value)
    if res.flags:
        text += "  " + " ".join(res.flags)
    _emit(args, payload, text)
    return 0 if res.best_value == z else 1


def cmd_witness7(args) -> int:
    res = reroute_witness_search(args.n)
    if res is None:
        _emit(args, {"n": args.n, "found": False},
              f"no witness: single-reroute space exhausted at n={args.n}")
        return 1
    d = res.witness
    r = d.reroutes[0]
    stats = {k: v for k, v in res.stats.items() if k != "seconds"}
    payload = {"n": args.n, "found": True, "total": res.best_value,
               "diagram": io.diagram_to_json(d), "stats": stats}
    text = "\n".join([
        f"witness for n={args.n}: total {res.best_value} = Z({args.n})",
        f"rerouted chord {_edge_str(r.chord)} through spine edge {_edge_str(r.gap)}, "
        f"v_{r.north_endpoint} half North",
        "linear tree: " + " ".join(_edge_str(e) for e in res.stats["linear_tree"]),
        io.dumps(d).rstrip(),
    ])
    _emit(args, payload, text)
    return 0


def cmd_render(args) -> int:
    d = _diagram_source(args)
    svg = render_svg(d, RenderSpec(layout=args.layout, size=args.size))
    if args.out:
        Path(args.out).write_text(svg)
        _emit(args, {"out": args.out}, f"wrote {args.out}")
    elif args.json:
        _emit(args, {"svg": svg}, "")
    else:
        print(svg, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kn", description="2-page drawings of complete graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("zvalue", cmd_zvalue, "print Z(n)")
    p.add_argument("--n", type=int, required=True)

    p = add("canonical", cmd_canonical, "print or save M_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = add("cross-index", cmd_cross_index, "cross-index of a drawing")
    _add_source(p, "matrix")
    p.add_argument("--report", choices=["json", "text"], default="text")
    p.add_argument("--per-edge", action="store_true")

    p = add("verify-blocks", cmd_verify_blocks, "check the block decomposition of M_n")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--sweep", metavar="LO..HI")

    p = add("dprime", cmd_dprime, "M_n with chord (m,n) rerouted through spine edge (1,2)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--check", action="store_true")
    p.add_argument("--out")

    p = add("free-cycles", cmd_free_cycles, "find a free Hamiltonian cycle")
    _add_source(p, "diagram")

    p = add("verify-theorem1", cmd_verify_theorem1, "check the rerouted M_n for odd n >= 9")
    p.add_argument("--n", type=int, required=True)

    p = add("search", cmd_search, "minimise the cross-index over page assignments")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=["exhaustive", "anneal"], default="exhaustive")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--steps", type=int, default=AnnealConfig.steps)
    p.add_argument("--restarts", type=int, default=AnnealConfig.restarts)
    p.add_argument("--cap", type=int, default=8, help="largest n for exhaustive mode")
    p.add_argument("--workers", type=int, default=1)

    p = add("witness7", cmd_witness7, "search single reroutes of optimal matrices for a witness")
    p.add_argument("--n", type=int, default=7)

    p = add("render", cmd_render, "SVG picture of a drawing")
    _add_source(p, "diagram")
    p.add_argument("--layout", choices=["circle", "linear"], default="circle")
    p.add_argument("--size", type=int, default=600)
    p.add_argument("--out")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (DomainError, ValidationError, io.ParseError, OSError) as exc:
        print(f"kn {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
