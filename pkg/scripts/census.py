"""Write the census CSV of congruence classes for each variant up to a size.

    python scripts/census.py --max-tiles 9 --out results/
"""

import argparse
import time
from pathlib import Path

from tredoku.enumeration import VARIANTS, EnumQuery, enumerate_patterns
from tredoku.formats import census_csv


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-tiles", type=int, default=9)
    ap.add_argument("--variants", nargs="+", default=list(VARIANTS), choices=VARIANTS)
    ap.add_argument("--workers", type=int)
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for variant in args.variants:
        t0 = time.perf_counter()
        _, rep = enumerate_patterns(EnumQuery(args.max_tiles, variant), workers=args.workers)
        path = args.out / f"census_{variant}_{args.max_tiles}.csv"
        path.write_text(census_csv(rep.rows()))
        print(f"{variant:12s} classes={sum(rep.counts.values()):6d} nodes={rep.nodes:9d} "
              f"complete={rep.complete} {time.perf_counter() - t0:.1f}s -> {path}")
        for tau, n in rep.by_tau().items():
            print(f"    {tau:3d} tiles: {n}")


if __name__ == "__main__":
    main()
