#!/usr/bin/env python3
"""Reproduce the parameter-plane maps for equal exterior masses as CSV data.

Writes one CSV with per-cell counts and totals over an (m2, b) grid for
masses (1, m2, 1); with --check every off-frontier grid point is also
counted numerically and compared against the closed-form classification.
Plot e2, e1 or total from the CSV with any external tool to render the
region maps.
"""

import argparse
import sys
import time

from eulercc.classifier import grid_scan, grid_to_csv


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m2", nargs=2, type=float, default=(-4.0, 2.0), metavar=("LO", "HI"))
    ap.add_argument("--b", nargs=2, type=float, default=(-4.0, 4.0), metavar=("LO", "HI"))
    ap.add_argument("-n", type=int, default=50, help="grid points per axis")
    ap.add_argument("--check", action="store_true", help="cross-check against the numeric counter")
    ap.add_argument("--margin", type=float, default=0.05)
    ap.add_argument("-o", "--output", default="figure_grid.csv")
    args = ap.parse_args()

    t0 = time.time()
    result = grid_scan(tuple(args.m2), tuple(args.b), (args.n, args.n),
                       cross_check=args.check, margin=args.margin)
    with open(args.output, "w") as fh:
        grid_to_csv(result, fh)
    dt = time.time() - t0
    print(f"wrote {len(result.rows)} rows to {args.output} in {dt:.1f}s")
    if args.check:
        print(f"cross-checked {result.checked} off-frontier points, "
              f"{len(result.mismatches)} mismatches")
        for mm in result.mismatches:
            print(f"  mismatch at m2={mm.m2:.17g} b={mm.b:.17g}: "
                  f"{mm.expected} vs {mm.got}")
        if result.mismatches:
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
