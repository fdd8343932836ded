#!/usr/bin/env python3
"""Sweep the distinct-fixed-point family over a (lambda1, lambda2) grid and
tabulate the stratum of every instance.

Usage:
    python scripts/stratum_sweep.py [-p PRIME] [--emax E]

For lambda1 = p^e1 * u1 and lambda2 = p^e2 * u2 with e in [-emax, emax] and
a couple of unit choices, runs the full consistency verification and prints
one row per instance plus a stratum histogram.  Everything is exact and
deterministic.
"""

import argparse
from collections import Counter
from fractions import Fraction

from quadberk import (
    ConsistencyFailure,
    PrimeCtx,
    QuadberkError,
    distinct_fixed_lift,
    verify_consistency,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("-p", type=int, default=3)
    parser.add_argument("--emax", type=int, default=2)
    args = parser.parse_args()

    ctx = PrimeCtx(args.p)
    p = args.p
    units = [Fraction(1), Fraction(p + 1, p - 1) if p > 2 else Fraction(3)]
    histogram = Counter()
    print(f"p = {p}; lambda_i = p^e * u for e in [-{args.emax}, {args.emax}]")
    for e1 in range(-args.emax, args.emax + 1):
        for e2 in range(-args.emax, args.emax + 1):
            for u1 in units:
                for u2 in units:
                    l1 = Fraction(p) ** e1 * u1
                    l2 = Fraction(p) ** e2 * u2
                    label = f"l1={str(l1):>8}  l2={str(l2):>8}"
                    if l1 * l2 == 1:
                        print(f"{label}  degenerate (l1*l2 = 1)")
                        continue
                    try:
                        report = verify_consistency(distinct_fixed_lift(l1, l2), ctx)
                    except ConsistencyFailure:
                        raise
                    except QuadberkError as exc:
                        print(f"{label}  {type(exc).__name__}")
                        histogram[type(exc).__name__] += 1
                        continue
                    histogram[report.stratum.tag] += 1
                    xi = report.xi
                    print(
                        f"{label}  {str(report.stratum):<22} "
                        f"xi=({xi.center}, {xi.radius_exp})  ordRes(xi)={report.min_ord_res}"
                    )
    print("\nstratum counts:")
    for tag, count in sorted(histogram.items()):
        print(f"  {tag:<28} {count}")


if __name__ == "__main__":
    main()
