"""Symbolic operator expressions and their matrix realizations.

An :class:`OperatorExpr` is a finite sum

    sum_r  c_r(z) * S^r,

where S is one elementary shift (z -> z + a or z -> q z), r ranges over
distinct integers (negative powers are the inverse shift), and each
coefficient c_r is a rational function of z.  ``compile_operator`` realizes
the expression on a node set as an N x N matrix: diagonal coefficient
matrices times sampling matrices of the composed shifts.

When the expression carries a variable map, the sampled polynomials live in
zeta(z) and the shift matrices come from the mapped constructions; the
coefficients stay functions of the raw variable z.

The ``check_*`` helpers turn matrix identities into
:class:`VerificationReport` records.  ``check_solution`` compares M f
against g entrywise in absolute terms.  ``check_null`` and
``check_eigenpair`` use the relative residual

    ||M v - b v||_inf / (||M||_inf ||v||_inf),

which keeps pass thresholds meaningful even when Lagrange denominators make
||M|| large.  On the exact backend a report passes only when the residual
is identically zero; the tolerance applies to floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .errors import CoefficientPoleAtNode, DenominatorPole, ZeroVector
from .foundation import IDENTITY_MAP, NodeSet, VariableMap
from .linalg import Matrix, char_poly, diagonal, horner, zero_matrix
from .scalars import Scalar, backend_tag, is_exact, magnitude
from .shift import ShiftKind, shift_matrix

__all__ = [
    "RationalFunction",
    "OperatorTerm",
    "OperatorExpr",
    "compile_operator",
    "VerificationReport",
    "check_solution",
    "check_null",
    "check_eigenpair",
    "char_poly_exact",
]


@dataclass(frozen=True)
class RationalFunction:
    """Ratio of two polynomials, coefficients ascending in the variable."""

    num: Tuple[Scalar, ...]
    den: Tuple[Scalar, ...] = (1,)

    def __post_init__(self):
        object.__setattr__(self, "num", tuple(self.num))
        object.__setattr__(self, "den", tuple(self.den))
        if not self.num or not self.den:
            raise ValueError("numerator and denominator must be nonempty")
        if all(c == 0 for c in self.den):
            raise ValueError("denominator is identically zero")

    @staticmethod
    def poly(*coeffs: Scalar) -> "RationalFunction":
        return RationalFunction(tuple(coeffs))

    @staticmethod
    def const(c: Scalar) -> "RationalFunction":
        return RationalFunction((c,))

    def __call__(self, z: Scalar) -> Scalar:
        den_v = horner(self.den, z)
        if den_v == 0:
            raise DenominatorPole(
                f"rational coefficient denominator vanishes at {z!r}"
            )
        num_v = horner(self.num, z)
        if isinstance(num_v, int) and isinstance(den_v, int):
            return Fraction(num_v, den_v)
        return num_v / den_v


@dataclass(frozen=True)
class OperatorTerm:
    """One summand c(z) * S^power of an operator expression."""

    power: int
    coeff: RationalFunction


@dataclass(frozen=True)
class OperatorExpr:
    """Finite sum of rational coefficients times powers of one shift."""

    shift: ShiftKind
    terms: Tuple[OperatorTerm, ...]
    variable_map: VariableMap = IDENTITY_MAP

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if not self.terms:
            raise ValueError("operator expression needs at least one term")
        powers = [t.power for t in self.terms]
        if len(set(powers)) != len(powers):
            raise ValueError(f"duplicate shift powers in expression: {powers}")


def _aligned_node_set(expr: OperatorExpr, ns: NodeSet) -> NodeSet:
    if ns.variable_map == expr.variable_map:
        return ns
    if ns.variable_map.is_identity:
        return ns.with_map(expr.variable_map)
    raise ValueError(
        "node set variable map conflicts with the expression's map"
    )


def compile_operator(expr: OperatorExpr, node_set: NodeSet) -> Matrix:
    """Realize the expression as a matrix acting on node samples."""
    ns = _aligned_node_set(expr, node_set)
    n = ns.n
    total = zero_matrix(n)
    for term in expr.terms:
        values = []
        for i, z in enumerate(ns.nodes):
            try:
                values.append(term.coeff(z))
            except DenominatorPole as exc:
                raise CoefficientPoleAtNode(
                    f"coefficient of shift power {term.power} has a pole "
                    f"at node {i + 1} ({z!r})"
                ) from exc
        total = total + diagonal(values) @ shift_matrix(ns, expr.shift, term.power)
    return total


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one residual check."""

    label: str
    backend: str
    residuals: Tuple[float, ...]
    max_residual: float
    tolerance: float
    passed: bool

    def __str__(self):
        state = "pass" if self.passed else "FAIL"
        return (
            f"[{state}] {self.label}: max residual {self.max_residual:.3e} "
            f"(tol {self.tolerance:.1e}, backend {self.backend})"
        )


def _flat(m: Matrix) -> list:
    return [e for row in m.rows() for e in row]


def check_solution(
    matrix: Matrix,
    f_samples: Sequence[Scalar],
    g_samples: Sequence[Scalar],
    tol: float = 1e-9,
    label: str = "solution",
) -> VerificationReport:
    """Does the matrix map the f samples to the g samples?

    Residuals are absolute: |(M f - g)_n| per component.
    """
    f = list(f_samples)
    g = list(g_samples)
    if len(f) != matrix.n or len(g) != matrix.n:
        raise ValueError("sample length does not match matrix size")
    lhs = matrix.apply(f)
    resid = [lhs[i] - g[i] for i in range(matrix.n)]
    mags = tuple(magnitude(r) for r in resid)
    exact = matrix.is_exact() and all(is_exact(x) for x in f + g)
    max_r = max(mags)
    passed = all(r == 0 for r in resid) if exact else max_r <= tol
    return VerificationReport(
        label, backend_tag(_flat(matrix) + f + g), mags, max_r, tol, passed
    )


def check_eigenpair(
    matrix: Matrix,
    eigenvalue: Scalar,
    vector: Sequence[Scalar],
    tol: float = 1e-9,
    label: str = "eigenpair",
) -> VerificationReport:
    """Relative residual of M v = b v."""
    v = list(vector)
    if len(v) != matrix.n:
        raise ValueError("vector length does not match matrix size")
    exact = (
        matrix.is_exact()
        and is_exact(eigenvalue)
        and all(is_exact(x) for x in v)
    )
    v_norm = max(magnitude(x) for x in v)
    if (all(x == 0 for x in v) if exact else v_norm == 0.0):
        raise ZeroVector(f"{label}: candidate eigenvector is zero")
    lhs = matrix.apply(v)
    resid = [lhs[i] - eigenvalue * v[i] for i in range(matrix.n)]
    scale = matrix.inf_norm() * v_norm
    if scale == 0.0:
        mags = tuple(magnitude(r) for r in resid)
    else:
        mags = tuple(magnitude(r) / scale for r in resid)
    max_r = max(mags)
    passed = all(r == 0 for r in resid) if exact else max_r <= tol
    return VerificationReport(
        label,
        backend_tag(_flat(matrix) + v + [eigenvalue]),
        mags,
        max_r,
        tol,
        passed,
    )


def check_null(
    matrix: Matrix,
    vector: Sequence[Scalar],
    tol: float = 1e-9,
    label: str = "null-vector",
) -> VerificationReport:
    """Relative residual of M v = 0."""
    return check_eigenpair(matrix, 0, vector, tol, label)


def char_poly_exact(matrix: Matrix) -> Tuple[Scalar, ...]:
    """Characteristic polynomial on the exact backend, descending monic."""
    return char_poly(matrix)


# Alias for callers that prefer the bare verb; module-qualified use keeps
# the builtin unshadowed.
compile = compile_operator
