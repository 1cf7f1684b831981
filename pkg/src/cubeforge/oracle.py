"""Independent brute-force oracle for sum-of-two-cubes counts.

count_reps shares no code with the construction machinery: it scans the
proven bound |x| <= ceil(sqrt(|m|)) and cube-tests the complement, so its
answers can arbitrate any claim a certificate makes about representation
counts.  A compiled int64 kernel handles small |m| when available; the
pure-Python kernel is the reference and the fallback.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from . import _census_py
from .curves import CubicPoint, CurveConfig, smul, to_weierstrass
from .heights import canonical_height
from .numeric import gcd3

try:
    from . import _census
except ImportError:
    _census = None

HAVE_COMPILED_KERNEL = _census is not None
INT64_SAFE_M = 4_000_000_000_000

# torsion on these curves has order dividing a bound this small
_TORSION_ORDER_LIMIT = 12


def backend_name(m: int) -> str:
    if _census is not None and abs(m) <= INT64_SAFE_M:
        return "compiled"
    return "pure"


@dataclass(frozen=True)
class RepCensus:
    """Exhaustive ordered census of x^3 + y^3 = m over the scan bound."""

    m: int
    ordered_count: int
    pairs: tuple[tuple[int, int], ...]
    scan_bound: int

    def unordered_pairs(self) -> tuple[tuple[int, int], ...]:
        """One representative (x, y) with x <= y per unordered solution."""
        return tuple(sorted({(min(x, y), max(x, y)) for x, y in self.pairs}))


def count_reps(m: int) -> RepCensus:
    """Every ordered integer solution of x^3 + y^3 = m, m nonzero."""
    if m == 0:
        raise ValueError(
            "m = 0 has the infinite family (t, -t); census is undefined"
        )
    if _census is not None and abs(m) <= INT64_SAFE_M:
        pairs = _census.census_scan(m)
    else:
        pairs = _census_py.census_scan(m)
    return RepCensus(
        m=m,
        ordered_count=len(pairs),
        pairs=tuple(pairs),
        scan_bound=isqrt(abs(m)) + 1,
    )


def search_points(cfg: CurveConfig, zmax: int) -> list[CubicPoint]:
    """All primitive points on x^3 + y^3 = m0 z^3 with 1 <= z <= zmax.

    Found by running the census on m0 * z^3 for each z, keeping coprime
    triples.  Sorted by (z, x) for determinism.
    """
    if zmax < 1:
        raise ValueError("zmax must be at least 1")
    found = []
    for z in range(1, zmax + 1):
        for x, y in count_reps(cfg.m0 * z**3).pairs:
            if gcd3(x, y, z) == 1:
                found.append(CubicPoint(x, y, z))
    found.sort(key=lambda p: (p.z, p.x))
    return found


def torsion_probe(cfg: CurveConfig, p: CubicPoint, tol: float = 1e-3) -> bool:
    """Double confirmation that a point is torsion.

    True only when the canonical height is at most tol and some multiple
    k * P with k <= 12 is the identity.
    """
    if p.is_identity:
        return True
    w = to_weierstrass(cfg, p)
    height_small = canonical_height(cfg, w, tol).value <= tol
    multiple_vanishes = any(
        smul(cfg, k, w).is_infinity for k in range(1, _TORSION_ORDER_LIMIT + 1)
    )
    return height_small and multiple_vanishes
