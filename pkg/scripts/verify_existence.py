"""Compare exhaustive censuses against the predicted existence tables.

    python scripts/verify_existence.py --max-tiles 9
"""

import argparse

from tredoku.enumeration import verify_theorem_main, verify_theorem_main_weak


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-tiles", type=int, default=9)
    ap.add_argument("--workers", type=int)
    args = ap.parse_args()
    for name, check in (("tredoku", verify_theorem_main), ("weak", verify_theorem_main_weak)):
        rep = check(args.max_tiles, args.workers)
        print(f"{name}: complete={rep.census.complete} disagreements={len(rep.disagreements)}")
        for triple, expected, found in rep.disagreements:
            print(f"    {triple}: predicted {'present' if expected else 'absent'}, search says {'present' if found else 'absent'}")
        print("    triples found:", " ".join(str(t) for t in sorted(rep.census.triples())))


if __name__ == "__main__":
    main()
