"""Dense order-N matrices and vectors over a generic scalar field.

Everything here is plain Python over immutable tuples.  The intended sizes
are tiny (N up to about 20), so clarity and exactness win over speed: matrix
powers are repeated multiplication, the determinant is Gaussian elimination,
and the characteristic polynomial uses the Faddeev-LeVerrier trace recursion,
which stays inside the rational field and therefore returns exact
coefficients on the exact backend.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .errors import BackendMismatch, ZeroVector
from .scalars import Scalar, exact_div, is_exact, magnitude

__all__ = [
    "Matrix",
    "identity",
    "diagonal",
    "zero_matrix",
    "vec_sub",
    "vec_scale",
    "vec_inf_norm",
    "vec_is_zero",
    "determinant",
    "char_poly",
    "monic_from_roots",
    "horner",
]


class Matrix:
    """Immutable square matrix with entries from either scalar backend."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence[Scalar]]):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square and nonempty")
        self._rows = rows

    @property
    def n(self) -> int:
        return len(self._rows)

    def entry(self, i: int, j: int) -> Scalar:
        return self._rows[i][j]

    def row(self, i: int) -> tuple:
        return self._rows[i]

    def rows(self) -> tuple:
        return self._rows

    def is_exact(self) -> bool:
        return all(is_exact(x) for r in self._rows for x in r)

    # -- algebra ----------------------------------------------------------

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_dim(other)
        return Matrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._rows, other._rows)
            ]
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_dim(other)
        return Matrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._rows, other._rows)
            ]
        )

    def __neg__(self) -> "Matrix":
        return Matrix([[-a for a in r] for r in self._rows])

    def scale(self, s: Scalar) -> "Matrix":
        return Matrix([[s * a for a in r] for r in self._rows])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_dim(other)
        n = self.n
        cols = tuple(zip(*other._rows))
        return Matrix(
            [
                [_dot(self._rows[i], cols[j]) for j in range(n)]
                for i in range(n)
            ]
        )

    def apply(self, vec: Sequence[Scalar]) -> list:
        if len(vec) != self.n:
            raise ValueError("vector length does not match matrix order")
        return [_dot(r, vec) for r in self._rows]

    def power(self, r: int) -> "Matrix":
        if r < 0:
            raise ValueError("negative matrix power not supported")
        result = identity(self.n)
        for _ in range(r):
            result = result @ self
        return result

    def trace(self) -> Scalar:
        t = self._rows[0][0]
        for i in range(1, self.n):
            t = t + self._rows[i][i]
        return t

    def map_entries(self, fn: Callable[[Scalar], Scalar]) -> "Matrix":
        return Matrix([[fn(a) for a in r] for r in self._rows])

    # -- predicates and norms ----------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.n == other.n and all(
            a == b
            for ra, rb in zip(self._rows, other._rows)
            for a, b in zip(ra, rb)
        )

    def __hash__(self):
        return hash(self._rows)

    def is_zero(self) -> bool:
        return all(a == 0 for r in self._rows for a in r)

    def inf_norm(self) -> float:
        return max(sum(magnitude(a) for a in r) for r in self._rows)

    def __repr__(self):
        body = "; ".join(
            ", ".join(str(a) for a in r) for r in self._rows
        )
        return f"Matrix[{body}]"

    def _check_dim(self, other: "Matrix") -> None:
        if self.n != other.n:
            raise ValueError("matrix orders differ")


def _dot(row: Sequence[Scalar], vec: Sequence[Scalar]) -> Scalar:
    acc = row[0] * vec[0]
    for a, b in zip(row[1:], vec[1:]):
        acc = acc + a * b
    return acc


def identity(n: int) -> Matrix:
    return Matrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def zero_matrix(n: int) -> Matrix:
    return Matrix([[0] * n for _ in range(n)])


def diagonal(values: Sequence[Scalar]) -> Matrix:
    n = len(values)
    return Matrix(
        [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]
    )


# -- vectors ---------------------------------------------------------------


def vec_sub(a: Sequence[Scalar], b: Sequence[Scalar]) -> list:
    return [x - y for x, y in zip(a, b)]


def vec_scale(s: Scalar, a: Sequence[Scalar]) -> list:
    return [s * x for x in a]


def vec_inf_norm(a: Sequence[Scalar]) -> float:
    if not a:
        raise ZeroVector("empty vector")
    return max(magnitude(x) for x in a)


def vec_is_zero(a: Sequence[Scalar]) -> bool:
    return all(x == 0 for x in a)


# -- determinant and characteristic polynomial ------------------------------


def determinant(m: Matrix) -> Scalar:
    """Determinant by Gaussian elimination.

    Exact entries use the first nonzero pivot (exact division keeps the
    value in the field); float entries use partial pivoting by magnitude.
    """
    n = m.n
    rows = [list(r) for r in m.rows()]
    exact = m.is_exact()
    det: Scalar = 1
    for col in range(n):
        pivot_row = None
        if exact:
            for i in range(col, n):
                if rows[i][col] != 0:
                    pivot_row = i
                    break
        else:
            best = -1.0
            for i in range(col, n):
                mag = magnitude(rows[i][col])
                if mag > best:
                    best = mag
                    pivot_row = i
            if best == 0.0:
                pivot_row = None
        if pivot_row is None:
            return det * 0
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            det = -det
        pivot = rows[col][col]
        det = det * pivot
        for i in range(col + 1, n):
            if rows[i][col] == 0:
                continue
            factor = exact_div(rows[i][col], pivot) if exact else rows[i][col] / pivot
            for j in range(col, n):
                rows[i][j] = rows[i][j] - factor * rows[col][j]
    return det


def char_poly(m: Matrix) -> tuple:
    """Monic characteristic polynomial det(lambda*I - M), exact backend only.

    Returns coefficients in descending powers, leading 1 first:
    ``(1, c_{N-1}, ..., c_0)`` for ``lambda^N + c_{N-1} lambda^{N-1} + ...``.
    """
    if not m.is_exact():
        raise BackendMismatch(
            "char_poly requires exact entries; float input rejected"
        )
    n = m.n
    coeffs = [0] * (n + 1)
    coeffs[0] = 1  # lambda^N
    aux = identity(n)
    for k in range(1, n + 1):
        am = m @ aux
        ck = -_exact_div(am.trace(), k)
        coeffs[k] = ck
        aux = am + identity(n).scale(ck)
    return tuple(coeffs)


def _exact_div(x: Scalar, k: int) -> Scalar:
    if isinstance(x, int):
        return Fraction(x, k)
    return x / k


def monic_from_roots(roots: Sequence[Scalar]) -> tuple:
    """Expand prod(lambda - r) into descending monic coefficients."""
    coeffs: list = [1]
    for r in roots:
        nxt = [0] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] = nxt[i] + c
            nxt[i + 1] = nxt[i + 1] - c * r
        coeffs = nxt
    return tuple(coeffs)


def horner(coeffs_ascending: Sequence[Scalar], x: Scalar) -> Scalar:
    """Evaluate a polynomial given by ascending coefficients."""
    acc: Scalar = 0
    for c in reversed(coeffs_ascending):
        acc = acc * x + c
    return acc
