#!/usr/bin/env python3
"""Randomized end-to-end consistency experiment.

Draws random instances from the seven normal-form families over several
primes, runs the full verification (closed-form prediction vs sigma
specialization vs residue classification vs exact profile minimization),
and reports per-family statistics.  Any disagreement raises immediately
with a diagnostic dump.

Usage:
    python scripts/consistency_experiment.py [--count N] [--seed S]
"""

import argparse
import random
import sys
import time
from collections import Counter
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from quadberk import PrimeCtx, verify_consistency
from _support import CASES, case_instance

PRIMES = (2, 3, 5, 7, 13)
ODD_PRIMES = (3, 5, 7, 13)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--count", type=int, default=200, help="instances per family")
    parser.add_argument("--seed", type=int, default=2024)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    started = time.time()
    total = 0
    for kind in CASES:
        primes = ODD_PRIMES if kind == "Bi" else PRIMES
        strata = Counter()
        half_integer = 0
        for i in range(args.count):
            p = primes[i % len(primes)]
            ctx = PrimeCtx(p)
            lift = case_instance(kind, rng, p, ctx)
            report = verify_consistency(lift, ctx)
            strata[report.stratum.tag] += 1
            if not report.xi.is_integral:
                half_integer += 1
            total += 1
        summary = ", ".join(f"{tag}: {n}" for tag, n in sorted(strata.items()))
        extra = f", half-integer xi: {half_integer}" if half_integer else ""
        print(f"{kind:<5} {summary}{extra}")
    elapsed = time.time() - started
    print(f"\n{total} instances verified consistent in {elapsed:.1f}s")


if __name__ == "__main__":
    main()
