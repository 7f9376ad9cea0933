"""Count verdant patterns by size and compare with the stored catalogue.

    python scripts/verdant.py --max-tiles 11
"""

import argparse

from tredoku.enumeration import catalog_classes, enumerate_verdant, verdant_classes


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-tiles", type=int, default=9)
    ap.add_argument("--workers", type=int)
    args = ap.parse_args()
    rep = enumerate_verdant(args.max_tiles, args.workers)
    for (tau, rho, lf), n in sorted(rep.counts.items()):
        print(f"tiles={tau:3d} runs={rho:3d} leaves={lf:3d} classes={n}")
    same = verdant_classes(args.max_tiles, args.workers) == catalog_classes(args.max_tiles)
    print(f"nodes={rep.nodes} complete={rep.complete} {rep.wall_time:.1f}s matches catalogue: {same}")


if __name__ == "__main__":
    main()
