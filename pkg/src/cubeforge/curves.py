"""The cubic curve x^3 + y^3 = m0 z^3 and its Weierstrass twin Y^2 = X^3 + b.

For a nonzero integer m0 the projective cubic C: x^3 + y^3 = m0 z^3 is
birationally equivalent to the short Weierstrass curve W: Y^2 = X^3 - 432 m0^2.
The forward map sends a cubic point [x, y, z] with x + y != 0 to

    X = 12 m0 z / (x + y),    Y = 36 m0 (y - x) / (x + y),

the identity [1, -1, 0] to the point at infinity, and the inverse recovers a
projective triple proportional to (36 m0 - Y, 36 m0 + Y, 6 X).  The group law
is computed exactly on W with Fraction coordinates and transported back to C,
where points are kept primitive: gcd(x, y, z) = 1 and z > 0 off the identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .numeric import ApproxReal, gcd3, log_abs, to_primitive


@dataclass(frozen=True)
class CurveConfig:
    """One curve pair, determined by the nonzero integer m0."""

    m0: int

    def __post_init__(self) -> None:
        if self.m0 == 0:
            raise ValueError("m0 must be a nonzero integer")

    @property
    def b(self) -> int:
        return -432 * self.m0 * self.m0

    @cached_property
    def hb(self) -> ApproxReal:
        """Naive height log|b| of the Weierstrass coefficient."""
        return log_abs(self.b)


@dataclass(frozen=True)
class CubicPoint:
    """Primitive integer point [x : y : z] on the cubic model.

    Instances built through from_triple satisfy gcd(x, y, z) = 1 with z > 0,
    except the identity (1, -1, 0).
    """

    x: int
    y: int
    z: int

    @classmethod
    def from_triple(cls, x: int, y: int, z: int) -> "CubicPoint":
        return cls(*to_primitive(x, y, z))

    @property
    def is_identity(self) -> bool:
        return self.z == 0

    def neg(self) -> "CubicPoint":
        """Group inverse: swapping x and y negates a point on the cubic."""
        return CubicPoint(self.y, self.x, self.z)

    def triple(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


CUBIC_IDENTITY = CubicPoint(1, -1, 0)


@dataclass(frozen=True)
class WeierstrassPoint:
    """Affine rational point on Y^2 = X^3 + b, or the point at infinity."""

    x: Fraction | None = None
    y: Fraction | None = None

    @classmethod
    def affine(cls, x, y) -> "WeierstrassPoint":
        return cls(Fraction(x), Fraction(y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None


INFINITY = WeierstrassPoint()


def on_cubic(cfg: CurveConfig, x: int, y: int, z: int) -> bool:
    """Exact membership test for the cubic model, including (1, -1, 0)."""
    return x**3 + y**3 == cfg.m0 * z**3


def on_weierstrass(cfg: CurveConfig, p: WeierstrassPoint) -> bool:
    if p.is_infinity:
        return True
    return p.y * p.y == p.x**3 + cfg.b


def to_weierstrass(cfg: CurveConfig, p: CubicPoint) -> WeierstrassPoint:
    """Forward birational map.  Requires x + y != 0 off the identity."""
    if p.z == 0:
        return INFINITY
    s = p.x + p.y
    if s == 0:
        raise ValueError(
            f"({p.x}, {p.y}, {p.z}) has x + y = 0 and no affine image"
        )
    return WeierstrassPoint(
        Fraction(12 * cfg.m0 * p.z, s), Fraction(36 * cfg.m0 * (p.y - p.x), s)
    )


def from_weierstrass(cfg: CurveConfig, p: WeierstrassPoint) -> CubicPoint:
    """Inverse birational map, returning the primitive integer triple."""
    if p.is_infinity:
        return CUBIC_IDENTITY
    u = 36 * cfg.m0 - p.y
    v = 36 * cfg.m0 + p.y
    w = 6 * p.x
    scale = math.lcm(u.denominator, v.denominator, w.denominator)
    return CubicPoint.from_triple(
        int(u * scale), int(v * scale), int(w * scale)
    )


def neg(p: WeierstrassPoint) -> WeierstrassPoint:
    if p.is_infinity:
        return p
    return WeierstrassPoint(p.x, -p.y)


def add(cfg: CurveConfig, p: WeierstrassPoint, q: WeierstrassPoint) -> WeierstrassPoint:
    """Chord-and-tangent addition, exact in Fraction arithmetic."""
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    if p.x == q.x:
        if p.y == -q.y:
            return INFINITY
        lam = (3 * p.x * p.x) / (2 * p.y)
    else:
        lam = (q.y - p.y) / (q.x - p.x)
    x3 = lam * lam - p.x - q.x
    y3 = lam * (p.x - x3) - p.y
    return WeierstrassPoint(x3, y3)


def smul(cfg: CurveConfig, k: int, p: WeierstrassPoint) -> WeierstrassPoint:
    """Scalar multiple k*P by binary double-and-add."""
    if k < 0:
        return smul(cfg, -k, neg(p))
    acc = INFINITY
    base = p
    while k:
        if k & 1:
            acc = add(cfg, acc, base)
        k >>= 1
        if k:
            base = add(cfg, base, base)
    return acc


def cubic_add(cfg: CurveConfig, p: CubicPoint, q: CubicPoint) -> CubicPoint:
    """Group law on the cubic model, transported through the Weierstrass twin."""
    s = add(cfg, to_weierstrass(cfg, p), to_weierstrass(cfg, q))
    return from_weierstrass(cfg, s)


def cubic_smul(cfg: CurveConfig, k: int, p: CubicPoint) -> CubicPoint:
    return from_weierstrass(cfg, smul(cfg, k, to_weierstrass(cfg, p)))


def is_primitive(p: CubicPoint) -> bool:
    """True when the stored triple is in primitive normal form."""
    if p.is_identity:
        return (p.x, p.y) == (1, -1)
    return p.z > 0 and gcd3(p.x, p.y, p.z) == 1
