#!/usr/bin/env python3
"""Run every claim's verification at desk scale and print one summary line each.

Exit status is 2 as soon as any claim reports a violation, 0 otherwise.
"""

import argparse
import json
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from bipcon.verifier import THEOREM_IDS, check_theorem


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=8, help="vertex cap for exhaustive scans")
    parser.add_argument("--max-r", type=int, default=8, help="modulus cap for Bi-Cayley checks")
    parser.add_argument("--trials", type=int, default=10_000, help="randomized trial count")
    parser.add_argument("--jobs", type=int, default=None, help="worker processes")
    parser.add_argument("--json", type=Path, default=None, help="dump all reports to this file")
    args = parser.parse_args()

    failures = 0
    started = time.perf_counter()
    # Vertex-metric claims go first so their full sweeps serve the
    # edge-only claims from the cache.
    compute_order = sorted(THEOREM_IDS, key=lambda t: t not in ("T3.3", "T4.3"))
    by_id = {
        theorem: check_theorem(
            theorem,
            max_n=args.max_n,
            max_r=args.max_r,
            trials=args.trials,
            jobs=args.jobs,
        )
        for theorem in compute_order
    }
    reports = [by_id[theorem] for theorem in THEOREM_IDS]
    for report in reports:
        theorem = report.theorem
        attained = sum(1 for a in report.attainment if a.attained)
        attain_note = f", attainment {attained}/{len(report.attainment)}" if report.attainment else ""
        status = "ok" if not report.violations else f"{len(report.violations)} VIOLATIONS"
        print(f"{theorem:5s} {status:>14s}  graphs={report.graphs_checked:<7d} "
              f"wall={report.wall_ms} ms{attain_note}")
        failures += len(report.violations)
    print(f"total wall time {time.perf_counter() - started:.1f}s")
    if args.json:
        args.json.write_text(
            json.dumps([r.to_json_dict() for r in reports], indent=2), encoding="utf-8"
        )
        print(f"reports written to {args.json}")
    return 0 if failures == 0 else 2


if __name__ == "__main__":
    sys.exit(main())
