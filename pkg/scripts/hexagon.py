"""Count patterns inside small hexagons, placed copies and congruence classes.

    python scripts/hexagon.py --max-side 2
"""

import argparse

from tredoku.enumeration import VARIANTS, count_hexagon


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-side", type=int, default=2)
    ap.add_argument("--workers", type=int)
    args = ap.parse_args()
    for m in range(1, args.max_side + 1):
        for variant in VARIANTS:
            h = count_hexagon(m, variant, max_side=args.max_side, workers=args.workers)
            print(f"side={m} {variant:12s} placed={h.placed:6d} classes={h.classes:5d} nodes={h.nodes}")


if __name__ == "__main__":
    main()
