#!/usr/bin/env python3
"""Print the attainment table: enumerated extremes versus formula bounds.

For every (r, s, m) cell within the vertex cap, shows the enumerated
extremal value of the connectivity sum/product, the formula value, whether
some graph attains it, and which witness family (if any) does.
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from bipcon.verifier import check_theorem


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8)
    parser.add_argument("--jobs", type=int, default=None)
    parser.add_argument("--theorems", nargs="+", default=["T4.1", "T4.2", "T4.3"])
    args = parser.parse_args()

    for theorem in args.theorems:
        report = check_theorem(theorem, max_n=args.max_n, jobs=args.jobs)
        print(f"== {theorem}: graphs={report.graphs_checked} "
              f"violations={len(report.violations)} wall={report.wall_ms} ms")
        print(f"{'r':>2} {'s':>2} {'m':>3}  {'metric':<12} {'bnd':<5} "
              f"{'enum':>4} {'formula':>7}  {'attained':<8} witness")
        for a in report.attainment:
            m = "-" if a.m is None else a.m
            witness = a.witness_family or "-"
            print(f"{a.r:>2} {a.s:>2} {m:>3}  {a.metric:<12} {a.bound:<5} "
                  f"{a.enumerated:>4} {a.formula:>7}  {str(a.attained):<8} {witness}")
        for note in report.notes:
            print(f"note: {note}")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
