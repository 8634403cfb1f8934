"""Difference matrices with known spectra, and claim verification.

Each ``build_*`` function returns a pair ``(matrix, claim)``: the matrix
realized on a node set, and a :class:`SpectralClaim` holding the closed-form
eigenvalues and an eigenvector sampler for k = 0..N-1.  Claims carry
proposition labels "3.1" .. "3.9" so reports can name what they verified:

* 3.1  diag(z) (delta_hat(a) - I) / a           eigenvalues k
* 3.2  (2-a) z + (c-z) S^{-1} + (a-1) z S       eigenvalues c + a k
* 3.3  wilson-type three-term matrix            eigenvalues k(k+a+b+c+d-1)
* 3.4  wilson-type matrix on its zero grid      same spectrum as 3.3
* 3.5  racah-type three-term matrix             eigenvalues k(k+a+b+1)
* 3.6  racah-type matrix on its zero grid       same spectrum as 3.5
* 3.7  (delta_check(q) - I) / (q - 1)           eigenvalues (1-q^k)/(1-q)
* 3.8  askey-wilson-type three-term matrix      eigenvalues
                                                (q^{-k}-1)(1-abcd q^{k-1})
* 3.9  askey-wilson-type matrix on its zeros    same spectrum as 3.8

The zero-grid constructions (3.4/3.6/3.9) sample the arbitrary-grid
operators at the lifted zeros of the degree-N family member, where the
balance relation satisfied by the zeros collapses the diagonal into a
single product.  The ``diagonal`` argument selects ``"consistent"`` (the
arbitrary-grid diagonal, which provably preserves the spectrum) or
``"literal"`` (the collapsed single-product form).  For the wilson- and
askey-wilson-type matrices the two agree identically; for the racah-type
matrix the single-product form divides by zeta(z_n - 1) - zeta_l where only
zeta_n - zeta_l reproduces the consistent diagonal, so its literal variant
breaks the spectrum.  The default is ``"consistent"``; the literal variant
is kept so the discrepancy stays observable.

``verify_claim`` checks every eigenpair (relative residual, exactly zero on
the exact backend) and, on exact inputs, compares the characteristic
polynomial against the one implied by the claimed eigenvalues.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, List, Optional, Tuple

from .askey import (
    FamilyParams,
    aw_A,
    family_eigenvalue,
    family_eval,
    family_map,
    hypergeometric_terminating,
    racah_C,
    racah_D,
    shifted_factorial,
    wilson_B,
)
from .errors import (
    DenominatorPole,
    PoleAtArgument,
    PoleAtNode,
    UnitQ,
    ZeroNode,
    ZeroStep,
)
from .foundation import NodeSet, _basis_value, make_node_set
from .linalg import Matrix, monic_from_roots
from .opcompile import char_poly_exact, check_eigenpair
from .scalars import Scalar, backend_tag, exact_div, is_exact, scalar_pow
from .shift import delta_check, delta_hat
from .zeros import ZeroSet, find_zeros

__all__ = [
    "SpectralClaim",
    "ClaimReport",
    "build_K_hat",
    "build_F_hat",
    "build_W_hat",
    "build_R_hat",
    "build_K_check",
    "build_Y_check",
    "build_W_bar",
    "build_R_bar",
    "build_Y_bar",
    "verify_claim",
]


@dataclass(frozen=True)
class SpectralClaim:
    """Closed-form eigensystem claimed for a matrix on a node set.

    ``eigenvalue(k)`` and ``eigenvector(k, node_set)`` cover k = 0..N-1.
    """

    proposition: str
    node_set: NodeSet
    eigenvalue: Callable[[int], Scalar]
    eigenvector: Callable[[int, NodeSet], List[Scalar]]
    params: Any = None

    @property
    def n(self) -> int:
        return self.node_set.n


@dataclass(frozen=True)
class ClaimReport:
    """Outcome of verifying one spectral claim."""

    proposition: str
    n: int
    backend: str
    eigen_residuals: Tuple[float, ...]
    char_poly_match: Optional[bool]
    passed: bool


BuildResult = Tuple[Matrix, SpectralClaim]


def _coeff_at_node(fn, params, z, index: int) -> Scalar:
    try:
        return fn(params, z)
    except PoleAtArgument as exc:
        raise PoleAtNode(f"node {index + 1}: {exc}") from exc


def build_K_hat(ns: NodeSet, a: Scalar = 1) -> BuildResult:
    """diag(z_n / a) (delta_hat(a) - I); eigenvalues 0..N-1 (claim 3.1)."""
    if a == 0:
        raise ZeroStep("shift step a must be nonzero")
    d = delta_hat(ns, a)
    n = ns.n
    rows = [
        [
            exact_div(ns.nodes[i], a) * (d.entry(i, j) - (1 if i == j else 0))
            for j in range(n)
        ]
        for i in range(n)
    ]
    claim = SpectralClaim(
        proposition="3.1",
        node_set=ns,
        eigenvalue=lambda k: k,
        eigenvector=lambda k, grid: [
            shifted_factorial(z, a, k) for z in grid.nodes
        ],
        params={"a": a},
    )
    return Matrix(rows), claim


def build_F_hat(ns: NodeSet, alpha: Scalar, c: Scalar) -> BuildResult:
    """Three-term additive matrix with eigenvalues c + alpha k (claim 3.2).

    Entries (2-alpha) z_n on the diagonal plus (c - z_n) times the backward
    shift and (alpha-1) z_n times the forward shift; eigenvectors are
    terminating hypergeometric values F(z_n, -k; c; alpha).
    """
    n = ns.n
    for r in range(n):
        if c + r == 0:
            raise DenominatorPole(
                f"(c)_{r + 1} vanishes for c = {c!r}; "
                f"eigenvectors undefined at size {n}"
            )
    back = delta_hat(ns, -1)
    forward = delta_hat(ns, 1)
    rows = []
    for i in range(n):
        z = ns.nodes[i]
        row = []
        for j in range(n):
            val = (c - z) * back.entry(i, j) + (alpha - 1) * z * forward.entry(
                i, j
            )
            if i == j:
                val = val + (2 - alpha) * z
            row.append(val)
        rows.append(row)
    claim = SpectralClaim(
        proposition="3.2",
        node_set=ns,
        eigenvalue=lambda k: c + alpha * k,
        eigenvector=lambda k, grid: [
            hypergeometric_terminating(z, k, c, alpha) for z in grid.nodes
        ],
        params={"alpha": alpha, "c": c},
    )
    return Matrix(rows), claim


def build_K_check(ns: NodeSet, q: Scalar = 2) -> BuildResult:
    """(delta_check(q) - I)/(q - 1); eigenvalues (1-q^k)/(1-q) (claim 3.7)."""
    if q == 1:
        raise UnitQ("ratio q must differ from 1")
    for i, z in enumerate(ns.nodes):
        if z == 0:
            raise ZeroNode(f"node {i + 1} is zero")
    d = delta_check(ns, q)
    n = ns.n
    rows = [
        [
            exact_div(d.entry(i, j) - (1 if i == j else 0), q - 1)
            for j in range(n)
        ]
        for i in range(n)
    ]
    claim = SpectralClaim(
        proposition="3.7",
        node_set=ns,
        eigenvalue=lambda k: exact_div(1 - scalar_pow(q, k), 1 - q),
        eigenvector=lambda k, grid: [scalar_pow(z, k) for z in grid.nodes],
        params={"q": q},
    )
    return Matrix(rows), claim


def _family_node_set(ns: NodeSet, params: FamilyParams) -> NodeSet:
    target = family_map(params)
    if ns.variable_map == target:
        return ns
    if ns.variable_map.is_identity:
        return ns.with_map(target)
    raise ValueError("node set carries a conflicting variable map")


def _three_term_rows(
    ns: NodeSet,
    up_coeff,
    down_coeff,
    up_point,
    down_point,
) -> list:
    """Entries  up_n (basis_m(zeta(up_n)) - delta_nm)
              + down_n (basis_m(zeta(down_n)) - delta_nm).
    """
    n = ns.n
    zmap = ns.variable_map
    rows = []
    for i in range(n):
        up = up_coeff(i)
        down = down_coeff(i)
        zeta_up = zmap(up_point(i))
        zeta_down = zmap(down_point(i))
        row = []
        for j in range(n):
            val = up * _basis_value(ns.zeta, j, zeta_up) + down * _basis_value(
                ns.zeta, j, zeta_down
            )
            if i == j:
                val = val - (up + down)
            row.append(val)
        rows.append(row)
    return rows


def _family_claim(
    proposition: str, ns: NodeSet, params: FamilyParams
) -> SpectralClaim:
    params.ensure_degree(ns.n - 1)
    return SpectralClaim(
        proposition=proposition,
        node_set=ns,
        eigenvalue=lambda k: family_eigenvalue(params, k),
        eigenvector=lambda k, grid: [
            family_eval(params, k, zeta) for zeta in grid.zeta
        ],
        params=params,
    )


def build_W_hat(ns: NodeSet, params: FamilyParams) -> BuildResult:
    """Wilson-type matrix on an arbitrary grid (claim 3.3)."""
    if params.family != "wilson":
        raise ValueError("build_W_hat requires wilson parameters")
    ns = _family_node_set(ns, params)
    z = ns.nodes
    rows = _three_term_rows(
        ns,
        lambda i: _coeff_at_node(wilson_B, params, z[i], i),
        lambda i: _coeff_at_node(wilson_B, params, -z[i], i),
        lambda i: z[i] + 1,
        lambda i: z[i] - 1,
    )
    return Matrix(rows), _family_claim("3.3", ns, params)


def build_R_hat(ns: NodeSet, params: FamilyParams) -> BuildResult:
    """Racah-type matrix on an arbitrary grid (claim 3.5)."""
    if params.family != "racah":
        raise ValueError("build_R_hat requires racah parameters")
    ns = _family_node_set(ns, params)
    z = ns.nodes
    rows = _three_term_rows(
        ns,
        lambda i: _coeff_at_node(racah_C, params, z[i], i),
        lambda i: _coeff_at_node(racah_D, params, z[i], i),
        lambda i: z[i] + 1,
        lambda i: z[i] - 1,
    )
    return Matrix(rows), _family_claim("3.5", ns, params)


def build_Y_check(ns: NodeSet, params: FamilyParams) -> BuildResult:
    """Askey-Wilson-type matrix on an arbitrary grid (claim 3.8)."""
    if params.family != "askey-wilson":
        raise ValueError("build_Y_check requires askey-wilson parameters")
    for i, zi in enumerate(ns.nodes):
        if zi == 0:
            raise PoleAtNode(f"node {i + 1} is zero; 1/z undefined")
    ns = _family_node_set(ns, params)
    z = ns.nodes
    q = params.q
    rows = _three_term_rows(
        ns,
        lambda i: _coeff_at_node(aw_A, params, z[i], i),
        lambda i: _coeff_at_node(aw_A, params, exact_div(1, z[i]), i),
        lambda i: q * z[i],
        lambda i: exact_div(z[i], q),
    )
    return Matrix(rows), _family_claim("3.8", ns, params)


# -- zero-grid constructions ---------------------------------------------------


def _zero_grid(params: FamilyParams, n: int, zero_set: Optional[ZeroSet]):
    if zero_set is None:
        zero_set = find_zeros(params, n)
    if zero_set.n != n or zero_set.family != params.family:
        raise ValueError("zero set does not match the requested grid")
    return make_node_set(zero_set.z_lift, family_map(params.to_float()))


def _set_diagonal(rows: list, diag_values: list) -> list:
    out = [list(r) for r in rows]
    for i, v in enumerate(diag_values):
        out[i][i] = v
    return out


def _check_diagonal_mode(diagonal: str) -> None:
    if diagonal not in ("consistent", "literal"):
        raise ValueError(
            f"diagonal must be 'consistent' or 'literal', got {diagonal!r}"
        )


def build_W_bar(
    params: FamilyParams,
    n: int,
    zero_set: Optional[ZeroSet] = None,
    diagonal: str = "consistent",
) -> BuildResult:
    """Wilson-type matrix on the grid of lifted zeros (claim 3.4).

    The literal diagonal collapses the two-sided sum into one product using
    the balance relation of the zeros; it agrees with the consistent form.
    """
    _check_diagonal_mode(diagonal)
    if params.family != "wilson":
        raise ValueError("build_W_bar requires wilson parameters")
    pf = params.to_float()
    ns = _zero_grid(params, n, zero_set)
    z = ns.nodes
    rows = _three_term_rows(
        ns,
        lambda i: _coeff_at_node(wilson_B, pf, z[i], i),
        lambda i: _coeff_at_node(wilson_B, pf, -z[i], i),
        lambda i: z[i] + 1,
        lambda i: z[i] - 1,
    )
    if diagonal == "literal":
        diag = []
        for i, zi in enumerate(z):
            b_up = _coeff_at_node(wilson_B, pf, zi, i)
            b_down = _coeff_at_node(wilson_B, pf, -zi, i)
            prod = 1.0
            for l, zl in enumerate(z):
                if l != i:
                    prod *= ((zi + 1.0) ** 2 - zl * zl) / (zi * zi - zl * zl)
            diag.append(
                -(b_up + b_down) + (4.0 * zi / (2.0 * zi - 1.0)) * b_up * prod
            )
        rows = _set_diagonal(rows, diag)
    return Matrix(rows), _family_claim("3.4", ns, pf)


def build_R_bar(
    params: FamilyParams,
    n: int,
    zero_set: Optional[ZeroSet] = None,
    diagonal: str = "consistent",
) -> BuildResult:
    """Racah-type matrix on the grid of lifted zeros (claim 3.6).

    ``diagonal="literal"`` keeps the single-product diagonal verbatim, with
    zeta(z_n - 1) - zeta_l in the denominator; that variant does not carry
    the claimed spectrum (the consistent form needs zeta_n - zeta_l there).
    """
    _check_diagonal_mode(diagonal)
    if params.family != "racah":
        raise ValueError("build_R_bar requires racah parameters")
    pf = params.to_float()
    ns = _zero_grid(params, n, zero_set)
    z = ns.nodes
    zmap = ns.variable_map
    rows = _three_term_rows(
        ns,
        lambda i: _coeff_at_node(racah_C, pf, z[i], i),
        lambda i: _coeff_at_node(racah_D, pf, z[i], i),
        lambda i: z[i] + 1,
        lambda i: z[i] - 1,
    )
    if diagonal == "literal":
        gd = complex(pf.gamma) + complex(pf.delta)
        diag = []
        for i, zi in enumerate(z):
            c_up = _coeff_at_node(racah_C, pf, zi, i)
            d_down = _coeff_at_node(racah_D, pf, zi, i)
            num_pt = zmap(zi + 1.0)
            den_pt = zmap(zi - 1.0)
            prod = 1.0
            for l in range(ns.n):
                if l != i:
                    prod *= (num_pt - ns.zeta[l]) / (den_pt - ns.zeta[l])
            factor = 2.0 * (2.0 * zi + gd + 1.0) / (2.0 * zi + gd)
            diag.append(-(c_up + d_down) + factor * c_up * prod)
        rows = _set_diagonal(rows, diag)
    return Matrix(rows), _family_claim("3.6", ns, pf)


def build_Y_bar(
    params: FamilyParams,
    n: int,
    zero_set: Optional[ZeroSet] = None,
    diagonal: str = "consistent",
) -> BuildResult:
    """Askey-Wilson-type matrix on the lifted zeros (claim 3.9).

    The literal diagonal collapses the sum via the balance relation of the
    zeros and agrees with the consistent form.
    """
    _check_diagonal_mode(diagonal)
    if params.family != "askey-wilson":
        raise ValueError("build_Y_bar requires askey-wilson parameters")
    pf = params.to_float()
    ns = _zero_grid(params, n, zero_set)
    z = ns.nodes
    zmap = ns.variable_map
    q = complex(pf.q)
    for i, zi in enumerate(z):
        if zi == 0:
            raise PoleAtNode(f"zero-grid node {i + 1} is zero; 1/z undefined")
    rows = _three_term_rows(
        ns,
        lambda i: _coeff_at_node(aw_A, pf, z[i], i),
        lambda i: _coeff_at_node(aw_A, pf, 1.0 / z[i], i),
        lambda i: q * z[i],
        lambda i: z[i] / q,
    )
    if diagonal == "literal":
        diag = []
        for i, zi in enumerate(z):
            a_up = _coeff_at_node(aw_A, pf, zi, i)
            a_down = _coeff_at_node(aw_A, pf, 1.0 / zi, i)
            num_pt = zmap(q * zi)
            prod = 1.0
            for l in range(ns.n):
                if l != i:
                    prod *= (num_pt - ns.zeta[l]) / (ns.zeta[i] - ns.zeta[l])
            factor = (1.0 + q) * (zi * zi - 1.0) / (zi * zi - q)
            diag.append(-(a_up + a_down) + factor * a_up * prod)
        rows = _set_diagonal(rows, diag)
    return Matrix(rows), _family_claim("3.9", ns, pf)


def verify_claim(
    matrix: Matrix, claim: SpectralClaim, tol: float = 1e-7
) -> ClaimReport:
    """Verify every claimed eigenpair, and the char poly when exact."""
    if matrix.n != claim.n:
        raise ValueError("matrix size does not match the claim's node set")
    residuals = []
    all_passed = True
    values = []
    exact = matrix.is_exact()
    for k in range(claim.n):
        value = claim.eigenvalue(k)
        vector = claim.eigenvector(k, claim.node_set)
        values.append(value)
        rep = check_eigenpair(
            matrix,
            value,
            vector,
            tol=tol,
            label=f"{claim.proposition} eigenpair k={k}",
        )
        residuals.append(rep.max_residual)
        all_passed = all_passed and rep.passed
        exact = exact and is_exact(value) and all(is_exact(x) for x in vector)
    match: Optional[bool] = None
    if exact:
        match = char_poly_exact(matrix) == monic_from_roots(tuple(values))
        all_passed = all_passed and match
    flat = [e for row in matrix.rows() for e in row]
    return ClaimReport(
        proposition=claim.proposition,
        n=claim.n,
        backend=backend_tag(flat),
        eigen_residuals=tuple(residuals),
        char_poly_match=match,
        passed=all_passed,
    )
