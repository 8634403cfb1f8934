"""Structured matrices with closed-form spectra, and their claim checks."""

from fractions import Fraction

import pytest

from specmat.askey import FamilyParams, family_eigenvalue
from specmat.errors import DenominatorPole, PoleAtNode, UnitQ, ZeroNode
from specmat.foundation import make_node_set, racah_map
from specmat.linalg import Matrix
from specmat.serialize import claim_report_to_json
from specmat.spectra import (
    build_F_hat,
    build_K_check,
    build_K_hat,
    build_R_bar,
    build_R_hat,
    build_W_bar,
    build_W_hat,
    build_Y_bar,
    build_Y_check,
    verify_claim,
)
from specmat.suites import (
    DEFAULT_ASKEY_WILSON,
    DEFAULT_RACAH,
    DEFAULT_WILSON,
)
from specmat.zeros import find_zeros

F = Fraction


def entries(m):
    return tuple(tuple(row) for row in m.rows())


class TestIntegerSpectrum:
    def test_two_node_oracle(self):
        ns = make_node_set([0, 1])
        matrix, claim = build_K_hat(ns, 1)
        assert entries(matrix) == ((0, 0), (-1, 1))
        assert claim.proposition == "3.1"
        assert [claim.eigenvalue(k) for k in range(2)] == [0, 1]

    def test_exact_verification_with_char_poly(self):
        ns = make_node_set([F(1, 2), 2, -3, F(7, 3)])
        matrix, claim = build_K_hat(ns, F(2, 5))
        report = verify_claim(matrix, claim)
        assert report.passed
        assert report.char_poly_match is True
        assert report.eigen_residuals == (0.0, 0.0, 0.0, 0.0)

    def test_eigenvector_sampler_shape(self):
        ns = make_node_set([1, 2, 5])
        _, claim = build_K_hat(ns, 1)
        vec = claim.eigenvector(2, ns)
        # (z, 1)_2 = z (z + 1) sampled at the nodes.
        assert vec == [2, 6, 30]

    def test_failure_detected(self):
        ns = make_node_set([0, 1])
        matrix, claim = build_K_hat(ns, 1)
        tampered = Matrix([[0, 0], [-1, 2]])
        assert not verify_claim(tampered, claim).passed


class TestShiftedIntegerSpectrum:
    def test_affine_eigenvalues(self):
        ns = make_node_set([F(1, 3), -1, 2])
        alpha, c = F(2, 3), F(5, 7)
        matrix, claim = build_F_hat(ns, alpha, c)
        assert claim.proposition == "3.2"
        assert claim.eigenvalue(2) == c + 2 * alpha
        report = verify_claim(matrix, claim)
        assert report.passed and report.char_poly_match is True

    def test_nonpositive_integer_c_rejected(self):
        ns = make_node_set([1, 2, 3, 4])
        with pytest.raises(DenominatorPole):
            build_F_hat(ns, 1, -2)


class TestGeometricSpectrum:
    def test_two_node_oracle(self):
        ns = make_node_set([1, 2])
        matrix, claim = build_K_check(ns, 2)
        assert entries(matrix) == ((-1, 1), (-2, 2))
        assert claim.proposition == "3.7"
        assert [claim.eigenvalue(k) for k in range(2)] == [0, 1]

    def test_geometric_sum_eigenvalues(self):
        ns = make_node_set([1, F(1, 2), 3])
        q = F(1, 4)
        matrix, claim = build_K_check(ns, q)
        assert claim.eigenvalue(2) == (1 - q**2) / (1 - q)
        assert verify_claim(matrix, claim).passed

    def test_unit_q_rejected(self):
        with pytest.raises(UnitQ):
            build_K_check(make_node_set([1, 2]), 1)

    def test_zero_node_rejected(self):
        with pytest.raises(ZeroNode):
            build_K_check(make_node_set([0, 1]), 2)


class TestFamilyOperators:
    def test_wilson_operator_verifies_exactly(self):
        ns = make_node_set([F(1, 3), F(5, 4), 2, F(7, 2)])
        params = FamilyParams("wilson", 1, 2, 3, 4)
        matrix, claim = build_W_hat(ns, params)
        assert claim.proposition == "3.3"
        assert claim.eigenvalue(3) == 3 * (3 + 10 - 1)
        report = verify_claim(matrix, claim)
        assert report.passed and report.char_poly_match is True

    def test_racah_operator_verifies_exactly(self):
        ns = make_node_set([F(1, 3), F(5, 4), 2])
        matrix, claim = build_R_hat(ns, DEFAULT_RACAH)
        assert claim.proposition == "3.5"
        assert claim.eigenvalue(2) == family_eigenvalue(DEFAULT_RACAH, 2)
        assert verify_claim(matrix, claim).passed

    def test_askey_wilson_operator_verifies_exactly(self):
        # Nodes must avoid inversion pairs: z and 1/z share a zeta value.
        ns = make_node_set([F(1, 3), F(5, 4), 4])
        matrix, claim = build_Y_check(ns, DEFAULT_ASKEY_WILSON)
        assert claim.proposition == "3.8"
        assert verify_claim(matrix, claim).passed

    def test_pole_node_rejected(self):
        params = FamilyParams("wilson", 1, 2, 3, 4)
        with pytest.raises(PoleAtNode):
            build_W_hat(make_node_set([0, 1, 2]), params)

    def test_conflicting_map_rejected(self):
        params = FamilyParams("wilson", 1, 2, 3, 4)
        mapped = make_node_set([1, 2, 3], variable_map=racah_map(1, 1))
        with pytest.raises(ValueError):
            build_W_hat(mapped, params)

    def test_zero_node_rejected_for_q_family(self):
        with pytest.raises(PoleAtNode):
            build_Y_check(make_node_set([0, 2, 3]), DEFAULT_ASKEY_WILSON)


class TestZeroGridMatrices:
    """Matrices evaluated on the zeros of the degree-n family member."""

    @pytest.mark.parametrize("n", [1, 2, 4])
    def test_wilson_grid_verifies(self, n):
        matrix, claim = build_W_bar(DEFAULT_WILSON, n)
        assert claim.proposition == "3.4"
        assert verify_claim(matrix, claim, tol=1e-6).passed

    @pytest.mark.parametrize("n", [1, 2, 4])
    def test_racah_grid_verifies(self, n):
        matrix, claim = build_R_bar(DEFAULT_RACAH, n)
        assert claim.proposition == "3.6"
        assert verify_claim(matrix, claim, tol=1e-6).passed

    @pytest.mark.parametrize("n", [1, 2, 4])
    def test_askey_wilson_grid_verifies(self, n):
        matrix, claim = build_Y_bar(DEFAULT_ASKEY_WILSON, n)
        assert claim.proposition == "3.9"
        assert verify_claim(matrix, claim, tol=1e-6).passed

    def test_precomputed_zero_grid_reused(self):
        zs = find_zeros(DEFAULT_WILSON, 3)
        direct, _ = build_W_bar(DEFAULT_WILSON, 3)
        reused, _ = build_W_bar(DEFAULT_WILSON, 3, zero_set=zs)
        assert (direct - reused).inf_norm() == 0.0

    def test_diagonal_modes_agree_for_wilson_and_askey_wilson(self):
        # The two published diagonal forms are algebraically equal here.
        for build, params in (
            (build_W_bar, DEFAULT_WILSON),
            (build_Y_bar, DEFAULT_ASKEY_WILSON),
        ):
            cons, _ = build(params, 4)
            lit, _ = build(params, 4, diagonal="literal")
            rel = (cons - lit).inf_norm() / max(1.0, cons.inf_norm())
            assert rel < 1e-12

    def test_racah_literal_diagonal_breaks_the_spectrum(self):
        # The stated diagonal for this grid does not reproduce the claimed
        # eigenvalues; the consistent form (same derivation as the other
        # two grids) does.  Both are kept so the discrepancy stays visible.
        cons, c_claim = build_R_bar(DEFAULT_RACAH, 4)
        lit, l_claim = build_R_bar(DEFAULT_RACAH, 4, diagonal="literal")
        assert verify_claim(cons, c_claim, tol=1e-6).passed
        assert not verify_claim(lit, l_claim, tol=1e-6).passed

    def test_unknown_diagonal_mode_rejected(self):
        with pytest.raises(ValueError):
            build_W_bar(DEFAULT_WILSON, 2, diagonal="other")


def test_claim_report_serialization():
    ns = make_node_set([0, 1])
    matrix, claim = build_K_hat(ns, 1)
    report = verify_claim(matrix, claim)
    data = claim_report_to_json(report)
    assert set(data) == {
        "proposition",
        "n",
        "backend",
        "eigen_residuals",
        "char_poly_match",
        "pass",
    }
    assert data["proposition"] == "3.1"
    assert data["pass"] is True
    assert data["n"] == 2
