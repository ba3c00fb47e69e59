"""Convergence of the weighted means toward (2/3) * integral of the weight.

Sweeps n through powers of two and prints, for each registered weight,
the exact mean, its decimal value, and the gap to the limit.  The gap
shrinks like 1/n; the 'inv1px' weight converges to (2/3) ln 2, the one
irrational limit in the family.

Usage: python3 scripts/cesaro_demo.py [--max-exp 14] [--weight x2]
"""

from __future__ import annotations

import argparse
import math

from oddsum.bitcore import format_rational
from oddsum.sums import CESARO_FUNCTIONS, cesaro_limit, cesaro_mean

LIMIT_FLOATS = {
    "const1": 2.0 / 3.0,
    "x": 1.0 / 3.0,
    "x2": 2.0 / 9.0,
    "inv1px": (2.0 / 3.0) * math.log(2.0),
}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--max-exp", type=int, default=14, help="largest exponent: n runs to 2**MAX_EXP"
    )
    parser.add_argument(
        "--weight", choices=CESARO_FUNCTIONS, default=None,
        help="restrict to one weight (default: all four)",
    )
    args = parser.parse_args()

    weights = (args.weight,) if args.weight else CESARO_FUNCTIONS
    for weight in weights:
        exact = cesaro_limit(weight)
        shown = format_rational(exact) if exact is not None else "(2/3) ln 2"
        print(f"weight {weight}: limit {shown} = {LIMIT_FLOATS[weight]:.12f}")
        for exp in range(0, args.max_exp + 1):
            n = 1 << exp
            mean = cesaro_mean(weight, n)
            gap = float(mean) - LIMIT_FLOATS[weight]
            print(f"  n=2^{exp:<2} mean={float(mean):.12f}  gap={gap:+.3e}")
        print()


if __name__ == "__main__":
    main()
