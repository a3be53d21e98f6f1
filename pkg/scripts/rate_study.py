#!/usr/bin/env python3
"""Convergence-rate study for the sum-of-squares quadratic.

For f = x_1^2 + ... + x_n^2 the simplex minimum is 1/n with denominator n and
the maximum is 1, so the normalized grid error rho(r) is exact here.  The
script sweeps r, prints rho(r) and rho(r) * r^2, and checks that the product
never exceeds the minimizer denominator (the quadratic O(1/r^2) rate with its
explicit constant), all in exact rational arithmetic.

Usage: python scripts/rate_study.py [--n 4] [--r-max 40] [--csv]
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from simplex_grid_opt import bound_coefficient, grid_minimize
from simplex_grid_opt.poly import HomogeneousPolynomial
from simplex_grid_opt.rational import decimal_str


def sum_of_squares(n: int) -> HomogeneousPolynomial:
    return HomogeneousPolynomial(n, 2, {tuple(2 * (i == j) for j in range(n)): 1 for i in range(n)})


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=4)
    parser.add_argument("--r-max", type=int, default=40)
    parser.add_argument("--csv", action="store_true", help="machine-readable output")
    args = parser.parse_args()

    n, m = args.n, args.n
    f = sum_of_squares(n)
    fmin, frange = Fraction(1, n), 1 - Fraction(1, n)

    sep = "," if args.csv else "  "
    print(sep.join(["r", "grid_min", "rho", "rho_r2", "denom_bound", "ok"]))
    worst = Fraction(0)
    for r in range(1, args.r_max + 1):
        value = grid_minimize(f, r).value
        rho = (value - fmin) / frange
        scaled = rho * r * r
        bound = bound_coefficient("QUAD_DENOM", d=2, r=r, m=m).coefficient * r * r
        ok = scaled <= bound
        worst = max(worst, scaled)
        print(sep.join([str(r), str(value), str(rho), str(scaled), str(bound), str(ok)]))
        if not ok:
            print(f"violation at r={r}", file=sys.stderr)
            return 1
    print(f"max rho*r^2 over the sweep: {worst} (~{decimal_str(worst, 6)}), "
          f"denominator constant: {m}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
