"""Run the randomized identity grid over every ring and size and print a
summary table (cases checked, pass/fail, wall time).

    python scripts/identity_sweep.py --trials 20 --max-n 6
"""

import argparse
import time

from adjfactor.ring import QQ, ZZ, PolyRing, Zmod
from adjfactor.suite import run_verify


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--trials", type=int, default=20)
    parser.add_argument("--max-n", type=int, default=6)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    print(f"{'ring':<16} {'n':>2} {'cases':>7} {'ok':>4} {'secs':>7}")
    failed = 0
    for ring in (ZZ, QQ, Zmod(97), Zmod(6), Zmod(2)):
        for n in range(1, args.max_n + 1):
            start = time.perf_counter()
            report = run_verify(ring, n, args.trials, args.seed)
            cases = sum(c["cases"] for c in report["checks"].values())
            failed += not report["all_passed"]
            print(f"{str(ring):<16} {n:>2} {cases:>7} {str(report['all_passed']):>4} {time.perf_counter() - start:7.2f}")
    for n in (2, 3, 4):
        start = time.perf_counter()
        report = run_verify(PolyRing(n), n, 3, args.seed)
        cases = sum(c["cases"] for c in report["checks"].values())
        failed += not report["all_passed"]
        print(f"{'generic X':<16} {n:>2} {cases:>7} {str(report['all_passed']):>4} {time.perf_counter() - start:7.2f}")
    raise SystemExit(1 if failed else 0)


if __name__ == "__main__":
    main()
