"""Exact scalar arithmetic: Gaussian rationals and backend helpers."""

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from specmat.scalars import (
    GaussianRational,
    as_complex,
    backend_tag,
    ensure_finite,
    exact_div,
    is_exact,
    magnitude,
    scalar_pow,
)

small_fractions = st.fractions(
    min_value=-6, max_value=6, max_denominator=6
)


def gauss(re, im):
    return GaussianRational(Fraction(re), Fraction(im))


class TestGaussianRational:
    def test_product(self):
        assert gauss(1, 2) * gauss(3, 4) == gauss(-5, 10)

    def test_quotient(self):
        q = gauss(1, 2) / gauss(3, 4)
        assert q == GaussianRational(Fraction(11, 25), Fraction(2, 25))

    def test_mixed_arithmetic_with_rationals(self):
        z = gauss(1, 1)
        assert z + Fraction(1, 2) == GaussianRational(Fraction(3, 2), 1)
        assert 2 * z == gauss(2, 2)
        assert z - 1 == gauss(0, 1)
        assert Fraction(1) / gauss(0, 1) == gauss(0, -1)

    def test_integer_powers(self):
        i = gauss(0, 1)
        assert i**2 == Fraction(-1) or i**2 == gauss(-1, 0)
        assert gauss(1, 1) ** 4 == gauss(-4, 0)
        assert gauss(1, 1) ** (-2) == gauss(0, Fraction(-1, 2))

    def test_str_form(self):
        assert str(gauss(1, 2)) == "1+2i"

    def test_as_complex(self):
        assert as_complex(gauss(1, -2)) == complex(1, -2)

    def test_zero_division_raises(self):
        with pytest.raises(ZeroDivisionError):
            gauss(1, 1) / gauss(0, 0)

    @given(small_fractions, small_fractions, small_fractions, small_fractions)
    def test_multiplication_follows_ring_law(self, a, b, c, d):
        x, y = GaussianRational(a, b), GaussianRational(c, d)
        assert x * y == GaussianRational(a * c - b * d, a * d + b * c)

    @given(small_fractions, small_fractions)
    def test_nonzero_elements_have_inverses(self, a, b):
        z = GaussianRational(a, b)
        if z != 0:
            assert z * (1 / z) == 1


def test_exact_div_keeps_integers_rational():
    assert exact_div(1, 2) == Fraction(1, 2)
    assert is_exact(exact_div(3, -6))
    assert exact_div(gauss(0, 1), 2) == gauss(0, Fraction(1, 2))


def test_is_exact_classification():
    assert is_exact(3)
    assert is_exact(Fraction(1, 3))
    assert is_exact(gauss(1, 1))
    assert not is_exact(0.5)
    assert not is_exact(1 + 2j)


def test_scalar_pow_negative_exponent():
    assert scalar_pow(2, -2) == Fraction(1, 4)
    assert scalar_pow(Fraction(2, 3), -1) == Fraction(3, 2)


def test_magnitude():
    assert magnitude(gauss(3, 4)) == pytest.approx(5.0)
    assert magnitude(-2) == 2


def test_ensure_finite_rejects_nan_and_inf():
    ensure_finite(1.5, "value")
    with pytest.raises(ValueError):
        ensure_finite(math.inf, "value")
    with pytest.raises(ValueError):
        ensure_finite(complex(0, math.nan), "value")


def test_backend_tag():
    assert backend_tag([Fraction(1), 2]) == "exact-rational"
    assert backend_tag([Fraction(1), gauss(0, 1)]) == "exact-gaussian-rational"
    assert backend_tag([Fraction(1), 0.5]) == "float-complex"
