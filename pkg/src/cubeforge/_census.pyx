# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled census kernel: int64 scan for x^3 + y^3 = m.

Mirrors _census_py.census_scan exactly for |m| <= INT64_SAFE_M, the range
where every intermediate (x^3, m - x^3, and the cube-root fixups) fits in a
signed 64-bit word.  The scan bound isqrt(|m|) + 1 is at most 2 * 10**6
there, so x^3 stays below 2^63 with room for the fixup loops.
"""

from libc.math cimport cbrt, sqrt

INT64_SAFE_M = 4_000_000_000_000


cdef long long _icbrt64(long long t) noexcept nogil:
    cdef long long sign = 1
    cdef long long a = t
    cdef long long r
    if t < 0:
        sign = -1
        a = -t
    r = <long long> cbrt(<double> a)
    while r > 0 and r * r * r > a:
        r -= 1
    while (r + 1) * (r + 1) * (r + 1) <= a:
        r += 1
    return sign * r


def census_scan(long long m):
    """All ordered integer pairs (x, y) with x^3 + y^3 = m, ascending x."""
    if not -INT64_SAFE_M <= m <= INT64_SAFE_M:
        raise OverflowError("census_scan kernel handles |m| <= 4e12 only")
    cdef long long am = m if m >= 0 else -m
    cdef long long bound = <long long> sqrt(<double> am)
    while bound > 0 and bound * bound > am:
        bound -= 1
    while (bound + 1) * (bound + 1) <= am:
        bound += 1
    bound += 1
    cdef long long x, y, t
    pairs = []
    for x in range(-bound, bound + 1):
        t = m - x * x * x
        y = _icbrt64(t)
        if y * y * y == t:
            pairs.append((x, y))
    return pairs
