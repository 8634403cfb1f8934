"""Hypergeometric product symbols, family polynomials, coefficient functions.

Every closed-form value here was computed by hand from the defining
products, then frozen.
"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from specmat.askey import (
    FamilyParams,
    aw_A,
    aw_bracket,
    family_eigenvalue,
    family_eval,
    family_map,
    hypergeometric_terminating,
    monomial_coefficients,
    pochhammer,
    q_shifted_factorial,
    racah_C,
    racah_D,
    racah_eval,
    shifted_factorial,
    wilson_B,
    wilson_eval,
)
from specmat.errors import DenominatorPole, PoleAtArgument
from specmat.linalg import horner
from specmat.scalars import GaussianRational


F = Fraction
WILSON_1111 = FamilyParams("wilson", 1, 1, 1, 1)
WILSON = FamilyParams("wilson", 1, 2, 3, 4)
RACAH = FamilyParams("racah", F(5, 4), F(7, 3), F(9, 5), F(11, 7))
AW = FamilyParams(
    "askey-wilson", F(1, 2), F(1, 3), F(1, 5), F(1, 7), q=F(1, 2)
)


class TestProductSymbols:
    def test_shifted_factorial(self):
        assert shifted_factorial(1, 1, 3) == 6
        assert shifted_factorial(1, 2, 3) == 15
        assert shifted_factorial(F(1, 2), F(1, 2), 2) == F(1, 2)
        assert shifted_factorial(7, 3, 0) == 1

    def test_pochhammer(self):
        assert pochhammer(3, 4) == 360
        assert pochhammer(-2, 3) == 0
        assert pochhammer(F(1, 2), 2) == F(3, 4)

    def test_q_shifted_factorial(self):
        assert q_shifted_factorial(2, 2, 2) == 3
        assert q_shifted_factorial(F(1, 2), F(1, 2), 3) == F(21, 64)
        assert q_shifted_factorial(5, 3, 0) == 1

    def test_aw_bracket(self):
        # s = 1: 1 - 2*alpha*zeta + alpha^2.
        assert aw_bracket(F(1, 2), 1, F(1, 2), 1) == F(1, 4)

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            shifted_factorial(1, 1, -1)
        with pytest.raises(ValueError):
            q_shifted_factorial(1, 2, -1)


class TestTerminatingSeries:
    def test_degree_one(self):
        # F(1, -1; 2; x) = 1 - x/2.
        assert hypergeometric_terminating(1, 1, 2, F(1, 3)) == F(5, 6)

    def test_matches_direct_sum(self):
        a, k, c, x = F(3, 2), 3, F(5, 2), F(2, 7)
        total = Fraction(0)
        for r in range(k + 1):
            term = (
                pochhammer(a, r)
                * pochhammer(-k, r)
                * x**r
                / (pochhammer(1, r) * pochhammer(c, r))
            )
            total += term
        assert hypergeometric_terminating(a, k, c, x) == total

    def test_nonpositive_integer_c_rejected(self):
        with pytest.raises(DenominatorPole):
            hypergeometric_terminating(1, 3, -2, F(1, 2))


class TestFamilyParams:
    def test_unknown_family(self):
        with pytest.raises(ValueError):
            FamilyParams("hahn", 1, 1, 1, 1)

    def test_q_only_for_askey_wilson(self):
        with pytest.raises(ValueError):
            FamilyParams("wilson", 1, 1, 1, 1, q=2)
        with pytest.raises(ValueError):
            FamilyParams("askey-wilson", 1, 1, 1, 1)

    def test_to_float(self):
        pf = AW.to_float()
        assert isinstance(pf.alpha, float)
        assert pf.q == pytest.approx(0.5)

    def test_map_kinds(self):
        assert family_map(WILSON)(2) == -4
        assert family_map(RACAH)(1) == 1 * (1 + RACAH.gamma + RACAH.delta + 1)
        assert family_map(AW)(2) == F(5, 4)


class TestCoefficientFunctions:
    def test_wilson_B_oracles(self):
        i = GaussianRational(0, 1)
        assert wilson_B(WILSON_1111, i) == GaussianRational(
            F(4, 5), F(2, 5)
        )
        assert wilson_B(WILSON_1111, 1) == F(8, 3)

    def test_wilson_B_pole(self):
        with pytest.raises(PoleAtArgument):
            wilson_B(WILSON_1111, 0)
        with pytest.raises(PoleAtArgument):
            wilson_B(WILSON_1111, F(-1, 2))

    def test_racah_coefficients_are_rational(self):
        assert isinstance(racah_C(RACAH, F(1, 2)), Fraction)
        assert isinstance(racah_D(RACAH, F(1, 2)), Fraction)

    def test_racah_D_vanishes_at_zero(self):
        assert racah_D(RACAH, 0) == 0

    def test_aw_A_pole_at_unit_z(self):
        with pytest.raises(PoleAtArgument):
            aw_A(AW, 1)


class TestFamilyEvaluation:
    def test_degree_zero_is_one(self):
        for params in (WILSON, RACAH, AW):
            assert family_eval(params, 0, F(3, 7)) == 1

    def test_degree_one_monomials(self):
        assert monomial_coefficients(WILSON_1111, 1) == (F(1, 2), F(-1, 2))

    @pytest.mark.parametrize("params", [WILSON, RACAH, AW])
    @pytest.mark.parametrize("k", [0, 1, 2, 4])
    def test_eval_matches_monomial_expansion(self, params, k):
        coeffs = monomial_coefficients(params, k)
        for zeta in (F(0), F(2, 3), F(-7, 5)):
            assert family_eval(params, k, zeta) == horner(coeffs, zeta)

    def test_wrapper_guards(self):
        with pytest.raises(ValueError):
            wilson_eval(RACAH, 1, 0)
        with pytest.raises(ValueError):
            racah_eval(WILSON, 1, 0)

    def test_eigenvalues(self):
        # k (k + alpha+beta+gamma+delta - 1) with the sum equal to 10.
        assert family_eigenvalue(WILSON, 2) == 2 * 11
        # k (k + alpha + beta + 1).
        assert family_eigenvalue(RACAH, 3) == 3 * (3 + F(5, 4) + F(7, 3) + 1)
        # (q^-k - 1)(1 - alpha beta gamma delta q^(k-1)).
        q, prod = AW.q, F(1, 2) * F(1, 3) * F(1, 5) * F(1, 7)
        k = 2
        assert family_eigenvalue(AW, k) == (q**-k - 1) * (1 - prod * q ** (k - 1))


three_term_points = st.fractions(
    min_value=-4, max_value=4, max_denominator=7
)


class TestDifferenceEquations:
    """The degree-k member solves its family's second-order equation.

    Checked exactly at rational points, away from coefficient poles.
    """

    @given(three_term_points, st.integers(min_value=0, max_value=5))
    def test_wilson(self, z, k):
        zeta = family_map(WILSON)
        try:
            up, down = wilson_B(WILSON, z), wilson_B(WILSON, -z)
        except PoleAtArgument:
            return
        pc = family_eval(WILSON, k, zeta(z))
        lhs = up * (family_eval(WILSON, k, zeta(z + 1)) - pc) + down * (
            family_eval(WILSON, k, zeta(z - 1)) - pc
        )
        assert lhs == family_eigenvalue(WILSON, k) * pc

    @given(three_term_points, st.integers(min_value=0, max_value=5))
    def test_racah(self, z, k):
        zeta = family_map(RACAH)
        try:
            up, down = racah_C(RACAH, z), racah_D(RACAH, z)
        except PoleAtArgument:
            return
        pc = family_eval(RACAH, k, zeta(z))
        lhs = up * (family_eval(RACAH, k, zeta(z + 1)) - pc) + down * (
            family_eval(RACAH, k, zeta(z - 1)) - pc
        )
        assert lhs == family_eigenvalue(RACAH, k) * pc

    @given(
        three_term_points.filter(lambda z: z != 0),
        st.integers(min_value=0, max_value=5),
    )
    def test_askey_wilson(self, z, k):
        zeta = family_map(AW)
        q = AW.q
        try:
            up, down = aw_A(AW, z), aw_A(AW, 1 / z)
        except PoleAtArgument:
            return
        pc = family_eval(AW, k, zeta(z))
        lhs = up * (family_eval(AW, k, zeta(q * z)) - pc) + down * (
            family_eval(AW, k, zeta(z / q)) - pc
        )
        assert lhs == family_eigenvalue(AW, k) * pc
