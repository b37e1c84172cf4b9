"""Run the exhaustive theorem checks and print a summary table.

Usage:
    python scripts/run_verification.py [--max-n-4 7] [--max-n-2 9] [--max-n-6 10]
"""

from __future__ import annotations

import argparse
import time

from planecount.cli import verify_theorem2, verify_theorem4, verify_theorem6


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n-4", type=int, default=7)
    p.add_argument("--max-n-2", type=int, default=9)
    p.add_argument("--max-n-6", type=int, default=10)
    args = p.parse_args()

    runs = [
        ("triangle faces < 2f/3", lambda: verify_theorem4(args.max_n_4)),
        ("no 4..11 cycles: peel-colorable", lambda: verify_theorem2(args.max_n_2)),
        ("no 4..8 cycles: 3-colorable", lambda: verify_theorem6(args.max_n_6)),
    ]
    print(f"{'check':36} {'max n':>5} {'graphs':>7} {'instances':>9} {'hyp':>6} {'viol':>5} {'secs':>6}")
    failed = False
    for name, fn in runs:
        t = time.perf_counter()
        s = fn()
        dt = time.perf_counter() - t
        print(f"{name:36} {s['max_n']:>5} {s['graphs']:>7} {s['instances']:>9} "
              f"{s['hypothesis_instances']:>6} {s['violations']:>5} {dt:>6.1f}")
        failed |= bool(s["violations"] or s["budget_exhausted"])
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
