#!/usr/bin/env python3
"""Certify the whole odd-denominator seed grid and summarize the results.

Example:
    python scripts/certify_grid.py --max 40 --out grid_report.json
"""

import argparse
import json
import sys
import time
from fractions import Fraction

from nctorus import DEFAULT_KAPPAS, Kappas, certify, parse_rat, seed_grid


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max", type=int, default=40, help="bound for the seed integers")
    ap.add_argument("--kappa1", default="3/4", help="first slack (rational)")
    ap.add_argument("--kappa2", default="1/2", help="second slack (rational)")
    ap.add_argument("--out", metavar="FILE", help="write the full JSON report")
    args = ap.parse_args()

    kappas = Kappas(parse_rat(args.kappa1), parse_rat(args.kappa2))
    grid = seed_grid(args.max, odd_only=True)
    start = time.perf_counter()
    certs = [certify(seed, kappas) for seed in grid]
    elapsed = time.perf_counter() - start

    failures = [c for c in certs if not c.overall]
    widths = [c.interval.width() for c in certs]
    print(f"seeds certified : {len(certs)}")
    print(f"failures        : {len(failures)}")
    print(f"narrowest window: {min(widths)} (as float {float(min(widths)):.3e})")
    print(f"widest window   : {max(widths)} (as float {float(max(widths)):.3e})")
    print(f"elapsed         : {elapsed:.3f}s")
    for cert in failures:
        print(f"FAIL seed {cert.seed.k}/{cert.seed.m}")
    print(f"grid: {'PASS' if not failures else 'FAIL'}")

    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            json.dump({
                "max": args.max,
                "kappas": kappas.to_json(),
                "elapsed_s": elapsed,
                "certificates": [c.to_json() for c in certs],
            }, handle, indent=2)
            handle.write("\n")
        print(f"report written to {args.out}")
    return 0 if not failures else 1


if __name__ == "__main__":
    sys.exit(main())
