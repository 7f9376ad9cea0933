"""Command-line front end.

Exit codes: 0 success / valid, 1 invalid input or failed check, 2 usage error.
Worker count and node budget default to $TREDOKU_WORKERS and
$TREDOKU_NODE_BUDGET; the flags override them.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import enumeration as en
from .analysis import PREDICATES, check_run_lengths, stats, violations
from .constructions import ConstructionError, ParameterTriple, construct, classify_parameters
from .formats import FormatError, census_csv, dump_pattern, dump_solution, parse_pattern, parse_puzzle
from .lattice import canonical_key
from .puzzle import SolveStatus, count_solutions, solve, verify_solution
from .render import RenderOptions, render_pattern


def _read(path: str) -> str:
    return sys.stdin.read() if path == "-" else Path(path).read_text()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _stats_dict(p) -> dict:
    s = stats(p)
    return {
        "tau": s.tau,
        "rho": s.rho,
        "leaves": s.leaves,
        "run_census": list(s.run_census),
        "type_counts": dict(zip(("top", "left", "right"), s.type_counts)),
    }


def _emit(obj: dict) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_validate(args) -> int:
    p = parse_pattern(_read(args.file))
    variant = "weak" if args.weak else "generalized" if args.generalized else "tredoku"
    ok = PREDICATES[variant](p)
    out = {"valid": ok, "variant": variant}
    if check_run_lengths(p):
        out["stats"] = _stats_dict(p)
    if not ok:
        reasons = violations(p, variant)
        out["reason"] = reasons[0] if reasons else "not valid"
    _emit(out)
    return 0 if ok else 1


def cmd_stats(args) -> int:
    p = parse_pattern(_read(args.file))
    if not check_run_lengths(p):
        _emit({"error": violations(p)[0]})
        return 1
    _emit(_stats_dict(p))
    return 0


def cmd_construct(args) -> int:
    t = ParameterTriple.from_runs(args.tiles, args.runs)
    try:
        p = construct(t)
    except ConstructionError as exc:
        _emit({"error": str(exc), "classification": classify_parameters(t).value})
        return 1
    _write(args.out, dump_pattern(p))
    return 0


def cmd_enumerate(args) -> int:
    q = en.EnumQuery(args.max_tiles, args.variant, rho=args.rho, leaves=args.leaves, hexagon_side=args.hexagon)
    pats, rep = en.enumerate_patterns(q, workers=args.workers, node_budget=args.node_budget)
    text = census_csv(rep.rows())
    if args.census:
        Path(args.census).write_text(text)
    else:
        sys.stdout.write(text)
    if args.patterns:
        Path(args.patterns).write_text(
            "".join(json.dumps([list(k) for k in canonical_key(p.tiles)]) + "\n" for p in pats)
        )
    print(f"# nodes={rep.nodes} complete={rep.complete}", file=sys.stderr)
    return 0 if rep.complete else 1


def cmd_verify(args) -> int:
    w, b = args.workers, args.node_budget
    if args.theorem in ("main", "main-weak"):
        rep = (en.verify_theorem_main if args.theorem == "main" else en.verify_theorem_main_weak)(args.max_tiles, w)
        _emit({
            "theorem": args.theorem,
            "max_tiles": args.max_tiles,
            "disagreements": [list(d[0]) for d in rep.disagreements],
            "triples_found": sorted(list(t) for t in rep.census.triples()),
            "complete": rep.census.complete,
        })
        return 0 if rep.ok else 1
    if args.theorem == "verdant":
        rep = en.enumerate_verdant(args.max_tiles, w)
        found = en.verdant_classes(args.max_tiles, w)
        same = found == en.catalog_classes(args.max_tiles)
        _emit({"theorem": "verdant", "counts": {str(k[0]): v for k, v in rep.counts.items()}, "matches_catalog": same})
        return 0 if same and rep.complete else 1
    res = en.search_zero_leaf(12, pruned=not args.unpruned, workers=w, node_budget=b)
    print(f"{len(res.patterns)} patterns found for (12,8,0)")
    _emit({"theorem": "twelve", "found": len(res.patterns), "nodes": res.nodes, "complete": res.complete})
    return 0 if res.complete and not res.patterns else 1


def cmd_solve(args) -> int:
    p, clues, tiles = parse_puzzle(_read(args.file))
    if args.count_cap:
        n = count_solutions(p, clues, cap=args.count_cap)
        _emit({"solutions": n, "cap": args.count_cap})
        return 0 if n else 1
    res = solve(p, clues, node_cap=args.node_cap)
    if res.status is not SolveStatus.SOLVED:
        _emit({"status": res.status.value, "nodes": res.nodes})
        return 1
    assert verify_solution(p, res.assignment)
    _write(args.out, dump_solution(p, res.assignment, tiles))
    return 0


def cmd_render(args) -> int:
    p = parse_pattern(_read(args.file))
    opts = RenderOptions(format=args.format, shading=not args.no_shading, scale=args.scale)
    _write(args.out, render_pattern(p, opts))
    return 0


def cmd_count_hexagon(args) -> int:
    try:
        h = en.count_hexagon(args.side, args.variant, max_side=args.max_side, workers=args.workers)
    except en.BudgetExceeded as exc:
        _emit({"error": str(exc)})
        return 1
    _emit({"side": h.side, "variant": h.variant, "placed": h.placed, "classes": h.classes})
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tredoku", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def workers(sp):
        sp.add_argument("--workers", type=int, default=None)
        sp.add_argument("--node-budget", type=int, default=None)

    sp = sub.add_parser("validate", help="check a pattern document")
    sp.add_argument("file")
    g = sp.add_mutually_exclusive_group()
    g.add_argument("--weak", action="store_true")
    g.add_argument("--generalized", action="store_true")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("stats", help="print tile, run and leaf counts")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_stats)

    sp = sub.add_parser("construct", help="build a pattern with given tiles and runs")
    sp.add_argument("--tiles", type=int, required=True)
    sp.add_argument("--runs", type=int, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("enumerate", help="census of congruence classes")
    sp.add_argument("--max-tiles", type=int, required=True)
    sp.add_argument("--variant", choices=en.VARIANTS, default="tredoku")
    sp.add_argument("--rho", type=int)
    sp.add_argument("--leaves", type=int)
    sp.add_argument("--hexagon", type=int, help="restrict to the hexagon of this side")
    sp.add_argument("--census", help="write the census CSV here instead of stdout")
    sp.add_argument("--patterns", help="write canonical keys, one JSON line per class")
    workers(sp)
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="check an existence or classification statement by search")
    sp.add_argument("--theorem", choices=("main", "main-weak", "verdant", "twelve"), required=True)
    sp.add_argument("--max-tiles", type=int, default=9)
    sp.add_argument("--unpruned", action="store_true", help="twelve: drop the counting bounds")
    workers(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("solve", help="fill a puzzle document")
    sp.add_argument("file")
    sp.add_argument("--count-cap", type=int, default=0)
    sp.add_argument("--node-cap", type=int, default=200_000)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("render", help="draw a pattern")
    sp.add_argument("file")
    sp.add_argument("--format", choices=("svg", "tikz", "ascii"), default="svg")
    sp.add_argument("--no-shading", action="store_true")
    sp.add_argument("--scale", type=float, default=40.0)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_render)

    sp = sub.add_parser("count-hexagon", help="count patterns inside a hexagon")
    sp.add_argument("--side", type=int, required=True)
    sp.add_argument("--variant", choices=en.VARIANTS, default="tredoku")
    sp.add_argument("--max-side", type=int, default=2)
    sp.add_argument("--workers", type=int, default=None)
    sp.set_defaults(func=cmd_count_hexagon)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, OSError) as exc:
        _emit({"error": str(exc)})
        return 1


if __name__ == "__main__":
    sys.exit(main())
