#!/usr/bin/env python3
"""Measure cancellation in the numeric mode across a (z, c) grid.

The alternating sums lose digits as Re(z) grows and |c| approaches 1; this
prints the condition estimate (sum of term magnitudes over result magnitude)
and the worst relative error against the divisor-sum side, per grid point.
A condition of 10^k costs roughly k digits, which motivates the default
relative tolerance of 1e-9 for double precision.

Usage:
    python scripts/numeric_conditioning.py [n_max]
"""

import sys

from pie.exact import sigma_zc_numeric
from pie.identities import _thm21_lhs_numeric

Z_GRID = (1.5 + 0j, -1 + 0j, -2 + 0j, 0.5 + 0.5j, 2 - 1j, 3.5 + 0j)
C_GRID = (0.4 + 0j, -0.3 + 0j, 0.4 - 0.3j, 0.2 + 0.7j, 0.85 + 0j)


def main() -> int:
    n_max = int(sys.argv[1]) if len(sys.argv) > 1 else 30
    print(f"{'z':>12s} {'c':>12s} {'max cond':>10s} {'max rel err':>12s}")
    for z in Z_GRID:
        for c in C_GRID:
            cond = 0.0
            err = 0.0
            for n in range(1, n_max + 1):
                lhs, abs_sum = _thm21_lhs_numeric(n, z, c)
                rhs = sigma_zc_numeric(z, c, n)
                cond = max(cond, abs_sum / max(1.0, abs(lhs)))
                err = max(err, abs(lhs - rhs) / max(1.0, abs(rhs)))
            print(f"{z!s:>12s} {c!s:>12s} {cond:10.3g} {err:12.3g}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
