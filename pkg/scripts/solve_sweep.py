"""Try to fill every constructed pattern and every small enumerated pattern.

    python scripts/solve_sweep.py --max-construct 21 --max-census 8
"""

import argparse
import time

from tredoku.constructions import Existence, classify_parameters, construct, feasible_triples
from tredoku.enumeration import EnumQuery, enumerate_patterns
from tredoku.puzzle import SolveStatus, solve, verify_solution


def sweep(label, patterns, node_cap):
    counts = {s: 0 for s in SolveStatus}
    worst = 0
    t0 = time.perf_counter()
    for p in patterns:
        res = solve(p, node_cap=node_cap)
        if res.status is SolveStatus.SOLVED:
            assert verify_solution(p, res.assignment)
        counts[res.status] += 1
        worst = max(worst, res.nodes)
    summary = " ".join(f"{s.value}={n}" for s, n in counts.items())
    print(f"{label}: {summary} max nodes={worst} {time.perf_counter() - t0:.1f}s")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-construct", type=int, default=21)
    ap.add_argument("--max-census", type=int, default=8)
    ap.add_argument("--node-cap", type=int, default=200_000)
    args = ap.parse_args()
    built = [construct(t) for t in feasible_triples(args.max_construct) if classify_parameters(t) is Existence.EXISTS]
    sweep(f"constructed up to {args.max_construct} tiles ({len(built)})", built, args.node_cap)
    pats, _ = enumerate_patterns(EnumQuery(args.max_census, "tredoku"))
    sweep(f"enumerated up to {args.max_census} tiles ({len(pats)})", pats, args.node_cap)


if __name__ == "__main__":
    main()
