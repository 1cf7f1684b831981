"""Pure-Python census kernel: exhaustive scan for x^3 + y^3 = m.

Any solution of x^3 + y^3 = m with m != 0 has |x| <= ceil(sqrt(|m|)).
If x and y have the same sign then |x|^3 <= |x^3 + y^3| = |m|, which is
stronger.  If they have opposite signs then x^2 - x y + y^2 >= x^2 + y^2,
while x + y is a nonzero integer, so

    |m| = |x + y| * (x^2 - x y + y^2) >= x^2.

Scanning x over that bound and cube-testing m - x^3 is therefore exhaustive.
"""

from __future__ import annotations

from math import isqrt

from .numeric import icbrt


def census_scan(m: int) -> list[tuple[int, int]]:
    """All ordered integer pairs (x, y) with x^3 + y^3 = m, ascending x."""
    bound = isqrt(abs(m)) + 1
    pairs = []
    for x in range(-bound, bound + 1):
        y, exact = icbrt(m - x * x * x)
        if exact:
            pairs.append((x, y))
    return pairs
