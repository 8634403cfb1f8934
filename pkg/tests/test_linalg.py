"""Dense matrix kernel: arithmetic, determinants, characteristic polynomials."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from specmat.errors import BackendMismatch, ZeroVector
from specmat.linalg import (
    Matrix,
    char_poly,
    determinant,
    diagonal,
    horner,
    identity,
    monic_from_roots,
    vec_inf_norm,
    zero_matrix,
)
from conftest import entries

A = Matrix([[1, 2], [3, 4]])


def test_matrix_shape_and_entries():
    assert A.n == 2
    assert A.entry(0, 1) == 2
    assert A.row(1) == (3, 4)
    assert entries(A) == ((1, 2), (3, 4))


def test_ragged_rows_rejected():
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])


def test_arithmetic():
    assert A + zero_matrix(2) == A
    assert A - A == zero_matrix(2)
    assert (-A).entry(1, 0) == -3
    assert A @ identity(2) == A
    assert entries(A @ A) == ((7, 10), (15, 22))
    assert entries(A.scale(2)) == ((2, 4), (6, 8))
    assert A.power(0) == identity(2)
    assert A.power(3) == A @ A @ A


def test_apply_and_trace():
    assert A.apply([1, 1]) == [3, 7]
    assert A.trace() == 5


def test_inf_norm_and_is_zero():
    assert A.inf_norm() == 7
    assert not A.is_zero()
    assert zero_matrix(3).is_zero()


def test_exactness_flag():
    assert A.is_exact()
    assert not Matrix([[0.5]]).is_exact()


def test_determinant_exact_and_float():
    assert determinant(A) == -2
    assert isinstance(determinant(A), (int, Fraction))
    f = determinant(Matrix([[1.0, 2.0], [3.0, 4.0]]))
    assert f == pytest.approx(-2.0)
    assert determinant(diagonal([2, 3, 4])) == 24


def test_char_poly_known_cases():
    # diag(0, 1) has characteristic polynomial x^2 - x.
    assert char_poly(diagonal([0, 1])) == (1, -1, 0)
    # Companion-style check: trace and determinant appear as coefficients.
    c = char_poly(A)
    assert c == (1, -5, -2)


def test_char_poly_rejects_float_backend():
    with pytest.raises(BackendMismatch):
        char_poly(Matrix([[0.5]]))


def test_monic_from_roots_descending():
    assert monic_from_roots([1, 2]) == (1, -3, 2)
    assert monic_from_roots([]) == (1,)


def test_horner_ascending():
    assert horner((1, 2, 3), 2) == 17
    assert horner((Fraction(1, 2),), 99) == Fraction(1, 2)


def test_vec_inf_norm():
    assert vec_inf_norm([3, -4, 1]) == 4
    with pytest.raises(ZeroVector):
        vec_inf_norm([])


diag_entries = st.lists(
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
    min_size=1,
    max_size=5,
)


@given(diag_entries)
def test_char_poly_of_diagonal_matches_roots(values):
    assert char_poly(diagonal(values)) == monic_from_roots(values)


@given(diag_entries)
def test_determinant_of_diagonal_is_product(values):
    prod = Fraction(1)
    for v in values:
        prod *= v
    assert determinant(diagonal(values)) == prod
