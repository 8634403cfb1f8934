"""Shift and difference matrices on a node set.

For samples f = (f(z_1), ..., f(z_N)) of a degree-<N polynomial, the shift
matrices reproduce the samples of the shifted function exactly:

* additive,       entries  prod_{l != m} (z_n + a - z_l) / (z_m - z_l),
  maps f to samples of f(z + a);
* multiplicative, entries  prod_{l != m} (q z_n - z_l) / (z_m - z_l),
  maps f to samples of f(q z).

Both rows are just the Lagrange basis evaluated at the shifted abscissa, so
the construction works verbatim when the polynomial lives in a mapped
variable zeta(z): evaluate the zeta-basis at zeta(z_n + a) or zeta(q z_n)
instead (the "_mapped" variants below).

Divided differences follow:

* ``nabla_hat``:    (delta_hat(a) - I) / a,
* ``nabla_check``:  entries [(q - 1) z_n]^{-1} [delta_check(q) - I]_nm,

and likewise in a mapped variable with zeta_n in place of z_n.  These
matrices are nilpotent of index exactly N, since each kills one more
polynomial degree.

``shift_matrix`` exposes integer powers of a shift through composition of
the underlying displacement (a -> r a, q -> q^r).  In the unmapped case
this agrees with the matrix power; in a mapped variable it is the faithful
sampling of the composed shift, which is what operator expressions need.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import UnitQ, ZeroNode, ZeroStep
from .foundation import NodeSet, mapped_basis
from .linalg import Matrix, identity
from .scalars import Scalar, scalar_pow

__all__ = [
    "ShiftKind",
    "delta_hat",
    "delta_check",
    "nabla_hat",
    "nabla_check",
    "delta_hat_mapped",
    "delta_check_mapped",
    "nabla_hat_mapped",
    "nabla_check_mapped",
    "shift_matrix",
    "shift_samples",
]


@dataclass(frozen=True)
class ShiftKind:
    """An invertible elementary shift: z -> z + a or z -> q z."""

    kind: str  # "additive" | "multiplicative"
    value: Scalar

    def __post_init__(self):
        if self.kind not in ("additive", "multiplicative"):
            raise ValueError(f"unknown shift kind: {self.kind!r}")

    @staticmethod
    def additive(a: Scalar) -> "ShiftKind":
        if a == 0:
            raise ZeroStep("additive shift step must be nonzero")
        return ShiftKind("additive", a)

    @staticmethod
    def multiplicative(q: Scalar) -> "ShiftKind":
        if q == 1:
            raise UnitQ("multiplicative shift ratio must differ from 1")
        if q == 0:
            raise ValueError("multiplicative shift ratio must be nonzero")
        return ShiftKind("multiplicative", q)

    def inverse(self) -> "ShiftKind":
        if self.kind == "additive":
            return ShiftKind("additive", -self.value)
        return ShiftKind("multiplicative", _reciprocal(self.value))


def _reciprocal(q: Scalar) -> Scalar:
    if isinstance(q, int):
        return Fraction(1, q)
    return 1 / q


def _sampling_matrix(ns: NodeSet, abscissae) -> Matrix:
    """Rows: every mapped Lagrange basis evaluated at one mapped abscissa."""
    n = ns.n
    zmap = ns.variable_map
    rows = []
    for z in abscissae:
        zeta = zmap(z)
        rows.append([mapped_basis(ns, m, zeta) for m in range(1, n + 1)])
    return Matrix(rows)


def _require_identity(ns: NodeSet, name: str) -> None:
    if not ns.variable_map.is_identity:
        raise ValueError(
            f"{name} requires an identity variable map; "
            f"use {name}_mapped for mapped node sets"
        )


def delta_hat(ns: NodeSet, a: Scalar) -> Matrix:
    """Additive shift matrix; maps samples of f to samples of f(z + a)."""
    _require_identity(ns, "delta_hat")
    return delta_hat_mapped(ns, a)


def delta_check(ns: NodeSet, q: Scalar) -> Matrix:
    """Multiplicative shift matrix; maps samples of f to samples of f(qz)."""
    _require_identity(ns, "delta_check")
    return delta_check_mapped(ns, q)


def delta_hat_mapped(ns: NodeSet, a: Scalar) -> Matrix:
    """Additive shift through the node set's variable map."""
    return _sampling_matrix(ns, (z + a for z in ns.nodes))


def delta_check_mapped(ns: NodeSet, q: Scalar) -> Matrix:
    """Multiplicative shift through the node set's variable map."""
    return _sampling_matrix(ns, (q * z for z in ns.nodes))


def nabla_hat(ns: NodeSet, a: Scalar) -> Matrix:
    """Forward divided difference (delta_hat(a) - I) / a."""
    _require_identity(ns, "nabla_hat")
    return nabla_hat_mapped(ns, a)


def nabla_check(ns: NodeSet, q: Scalar) -> Matrix:
    """q-difference matrix with entries [(q-1) z_n]^{-1} [delta - I]_nm."""
    _require_identity(ns, "nabla_check")
    return nabla_check_mapped(ns, q)


def nabla_hat_mapped(ns: NodeSet, a: Scalar) -> Matrix:
    if a == 0:
        raise ZeroStep("nabla_hat step must be nonzero")
    d = delta_hat_mapped(ns, a) - identity(ns.n)
    inv_a = _reciprocal(a)
    return d.scale(inv_a)


def nabla_check_mapped(ns: NodeSet, q: Scalar) -> Matrix:
    if q == 1:
        raise UnitQ("nabla_check requires q != 1")
    for i, zeta in enumerate(ns.zeta):
        if not _nonzero(zeta):
            raise ZeroNode(
                f"nabla_check requires nonzero mapped nodes; "
                f"node {i + 1} maps to zero"
            )
    d = delta_check_mapped(ns, q) - identity(ns.n)
    n = ns.n
    rows = [
        [d.entry(i, j) / ((q - 1) * ns.zeta[i]) for j in range(n)]
        for i in range(n)
    ]
    return Matrix(rows)


def _nonzero(x: Scalar) -> bool:
    return bool(x != 0)


def shift_matrix(ns: NodeSet, shift: ShiftKind, power: int = 1) -> Matrix:
    """Sampling matrix of the shift composed with itself ``power`` times.

    Negative powers compose the inverse shift; power 0 is the identity.
    """
    if power == 0:
        return identity(ns.n)
    if shift.kind == "additive":
        return delta_hat_mapped(ns, shift.value * power)
    return delta_check_mapped(ns, scalar_pow(shift.value, power))


def shift_samples(ns: NodeSet, samples, shift: ShiftKind) -> list:
    """Samples of the shifted polynomial, through the node set's map."""
    if len(samples) != ns.n:
        raise ValueError("sample count does not match node count")
    return shift_matrix(ns, shift).apply(list(samples))
