#!/usr/bin/env python3
"""Demonstrate the unbounded growth of the gap gamma1 - gamma(E).

For a fixed twist s the lower bound floor((g-1)/2) - (g-s)/2 + 2 is
constant per parity of g, so growth comes from letting s rise with g along
the admissible family g >= max(4s + 14, 12).  This script sweeps the
admissible cells, prints the running maximum at checkpoints, and builds
full certificates for cells whose gap crosses a list of thresholds.

Usage: python3 scripts/gap_demo.py [--g-max 1000]
"""

import argparse
from fractions import Fraction

from k3cert import build_certificate, gap_lower_bound


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--g-max", type=int, default=1000)
    ap.add_argument("--thresholds", type=int, nargs="*", default=[1, 5, 10, 50])
    args = ap.parse_args()

    checkpoints = sorted({args.g_max // 8, args.g_max // 4, args.g_max // 2, args.g_max})
    best = Fraction(0)
    best_cell = None
    print("running maximum of the gap bound over admissible cells")
    for g in range(12, args.g_max + 1):
        for s in range(-1, (g - 14) // 4 + 1):
            gap = gap_lower_bound(g, s)
            if gap > best:
                best, best_cell = gap, (g, s)
        if g in checkpoints:
            print(f"  g <= {g:5d}: max gap {str(best):>8s} at (g, s) = {best_cell}")

    print("\ncertified cells crossing each threshold (mod-3 family members):")
    for threshold in args.thresholds:
        s = 2 * threshold - 1
        while s % 3 != 1:
            s += 1
        g = 4 * s + 14
        while g % 3 != 1:
            g += 1
        if g > args.g_max:
            print(f"  gap > {threshold}: needs g > {args.g_max}, skipped")
            continue
        cert = build_certificate(g, s)
        print(f"  gap > {threshold:3d}: (g, s) = ({g}, {s}), gap = {cert.gap_lower_bound}, "
              f"conclusion = {cert.conclusion}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
