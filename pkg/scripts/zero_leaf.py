"""Zero-leaf searches by size, with and without the counting bounds.

    python scripts/zero_leaf.py --sizes 9 12 15
"""

import argparse
from collections import Counter

from tredoku.analysis import stats
from tredoku.enumeration import search_zero_leaf


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[9, 12, 15])
    ap.add_argument("--unpruned", action="store_true", help="also run without the counting bounds")
    ap.add_argument("--workers", type=int)
    ap.add_argument("--node-budget", type=int)
    args = ap.parse_args()
    modes = [True, False] if args.unpruned else [True]
    for tau in args.sizes:
        for pruned in modes:
            res = search_zero_leaf(tau, pruned=pruned, workers=args.workers, node_budget=args.node_budget)
            types = Counter(tuple(sorted(stats(p).type_counts)) for p in res.patterns)
            print(f"tiles={tau:3d} pruned={pruned!s:5s} classes={len(res.patterns):4d} nodes={res.nodes:9d} "
                  f"complete={res.complete} {res.wall_time:.1f}s type counts={dict(types)}")


if __name__ == "__main__":
    main()
