"""Integer kernels and the interval type."""

import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubeforge.numeric import (
    ApproxReal,
    gcd3,
    icbrt,
    interval_max,
    log_abs,
    to_primitive,
)


def contains_fraction(a: ApproxReal, q: Fraction) -> bool:
    return Fraction(a.lower()) <= q <= Fraction(a.upper())


class TestGcd3:
    def test_basic(self):
        assert gcd3(6, 10, 15) == 1
        assert gcd3(4, 8, 12) == 4
        assert gcd3(-4, 8, -12) == 4
        assert gcd3(0, 0, 5) == 5

    def test_all_zero_rejected(self):
        with pytest.raises(ValueError):
            gcd3(0, 0, 0)

    @given(st.integers(-10**30, 10**30), st.integers(-10**30, 10**30),
           st.integers(-10**30, 10**30))
    def test_divides_all(self, a, b, c):
        if a == b == c == 0:
            return
        g = gcd3(a, b, c)
        assert g > 0
        assert a % g == 0 and b % g == 0 and c % g == 0


class TestToPrimitive:
    def test_examples(self):
        assert to_primitive(34, 74, 42) == (17, 37, 21)
        assert to_primitive(-17, -37, -21) == (17, 37, 21)
        assert to_primitive(-1, 1, 0) == (1, -1, 0)
        assert to_primitive(5, -5, 0) == (1, -1, 0)

    def test_bad_infinity_rejected(self):
        with pytest.raises(ValueError):
            to_primitive(2, 3, 0)

    @given(st.integers(-10**20, 10**20), st.integers(-10**20, 10**20),
           st.integers(1, 10**20), st.integers(1, 10**6))
    def test_scaling_invariant(self, x, y, z, s):
        p = to_primitive(x, y, z)
        assert to_primitive(x * s, y * s, z * s) == p
        assert to_primitive(*p) == p
        assert gcd3(*p) == 1
        assert p[2] > 0


class TestIcbrt:
    def test_examples(self):
        assert icbrt(27) == (3, True)
        assert icbrt(26) == (2, False)
        assert icbrt(-27) == (-3, True)
        assert icbrt(-26) == (-2, False)
        assert icbrt(0) == (0, True)
        assert icbrt(1) == (1, True)

    def test_huge_cube(self):
        n = (10**40 + 7) ** 3
        assert icbrt(n) == (10**40 + 7, True)
        assert icbrt(n + 1) == (10**40 + 7, False)
        assert icbrt(n - 1) == (10**40 + 7 - 1, False)

    @given(st.integers(0, 10**60))
    def test_floor_property(self, n):
        r, exact = icbrt(n)
        assert r**3 <= n < (r + 1) ** 3
        assert exact == (r**3 == n)

    @given(st.integers(-10**20, 10**20))
    def test_cube_roundtrip(self, r):
        assert icbrt(r**3) == (r, True)


class TestLogAbs:
    def test_exact_one(self):
        assert log_abs(1) == ApproxReal(0.0, 0.0)
        assert log_abs(-1) == ApproxReal(0.0, 0.0)

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            log_abs(0)

    def test_frozen_value(self):
        # independently computed at 60-digit precision
        a = log_abs(16009)
        assert abs(a.value - 9.680906343078094) <= 1e-12
        assert a.radius <= 1e-8

    def test_sign_symmetric(self):
        assert log_abs(-16009) == log_abs(16009)

    @given(st.integers(min_value=2, max_value=10**300))
    @settings(max_examples=200)
    def test_encloses_true_log(self, n):
        a = log_abs(n)
        with mpmath.workdps(120):
            true = mpmath.log(n)
            assert mpmath.mpf(a.lower()) <= true <= mpmath.mpf(a.upper())
        assert a.radius <= 1e-12 * max(1.0, a.value)

    def test_relative_radius_huge(self):
        n = 7**100000
        a = log_abs(n)
        assert a.radius <= 1e-12 * a.value


fractions_st = st.fractions(
    min_value=-1000, max_value=1000, max_denominator=10**6
)


class TestApproxReal:
    def test_validation(self):
        with pytest.raises(ValueError):
            ApproxReal(1.0, -0.5)
        with pytest.raises(ValueError):
            ApproxReal(math.inf, 0.0)

    def test_exact_constructors(self):
        assert ApproxReal.from_int(7) == ApproxReal(7.0, 0.0)
        assert ApproxReal.from_fraction(Fraction(1, 4)) == ApproxReal(0.25, 0.0)
        big = ApproxReal.from_int(10**30)
        assert big.radius > 0
        assert contains_fraction(big, Fraction(10**30))

    def test_from_decimal(self):
        a = ApproxReal.from_decimal("1.48")
        assert contains_fraction(a, Fraction("1.48"))
        assert a.radius <= 1e-15

    @given(fractions_st, fractions_st)
    def test_add_sub_mul_enclose(self, p, q):
        a = ApproxReal.from_fraction(p)
        b = ApproxReal.from_fraction(q)
        assert contains_fraction(a + b, p + q)
        assert contains_fraction(a - b, p - q)
        assert contains_fraction(a * b, p * q)

    @given(fractions_st, fractions_st)
    def test_div_enclose(self, p, q):
        if q == 0:
            return
        a = ApproxReal.from_fraction(p)
        b = ApproxReal.from_fraction(q)
        try:
            c = a / b
        except ZeroDivisionError:
            return
        assert contains_fraction(c, p / q)

    def test_div_through_zero_rejected(self):
        with pytest.raises(ZeroDivisionError):
            ApproxReal(1.0, 0.0) / ApproxReal(0.5, 1.0)

    @given(st.integers(2, 10**12))
    def test_log_exp_roundtrip_enclose(self, n):
        a = ApproxReal.from_int(n)
        assert contains_fraction(a.log().exp(), Fraction(n))

    def test_ldexp_exact(self):
        a = ApproxReal(3.0, 0.5)
        assert a.ldexp(-2) == ApproxReal(0.75, 0.125)

    @given(fractions_st, fractions_st)
    def test_interval_max_encloses(self, p, q):
        a = ApproxReal.from_fraction(p)
        b = ApproxReal.from_fraction(q)
        assert contains_fraction(interval_max(a, b), max(p, q))

    def test_pow_ratio(self):
        # 16 ** (-1/3), checked against a 60-digit computation
        a = ApproxReal.from_int(16).pow_ratio(-1, 3)
        assert contains_fraction(
            a, Fraction("0.39685026299204984457975352882604425362")
        )
        assert a.radius < 1e-12

    def test_radius_accumulates(self):
        a = ApproxReal(1.0, 0.1) + ApproxReal(2.0, 0.2)
        assert a.radius >= 0.3
        b = ApproxReal(3.0, 0.1) * ApproxReal(5.0, 0.2)
        assert b.radius >= 3.0 * 0.2 + 5.0 * 0.1
