"""Zeros of the family polynomials in the mapped variable.

``find_zeros`` expands the degree-k member into monomial coefficients,
locates all k roots in the zeta plane with the Aberth-Ehrlich simultaneous
iteration (optionally polished by a few Newton steps against the series
evaluation), and lifts each root back to the z plane by solving the
quadratic zeta(z) = zeta_bar on a fixed branch:

* zeta = -z^2            ->  z = sqrt(-zeta),        partner -z
* zeta = z(z+c+d+1)      ->  z = (-(c+d+1) + sqrt((c+d+1)^2 + 4 zeta)) / 2,
                             partner -(c+d+1) - z
* zeta = (z + 1/z)/2     ->  z = zeta + sqrt(zeta^2 - 1),  partner 1/z

Root order (and therefore CLI output) is deterministic: roots are sorted by
real part, then imaginary part.

``verify_zero_identity`` checks the balance relations that the lifted zeros
z_bar of the degree-N member satisfy:

* wilson-type:  B(z_n) prod_j [(z_n+1)^2 - z_j^2]
                  + B(-z_n) prod_j [(z_n-1)^2 - z_j^2] = 0
* racah-type:   C(z_n) prod_j [zeta(z_n+1) - zeta_j]
                  + D(z_n) prod_j [zeta(z_n-1) - zeta_j] = 0
* askey-wilson-type:
    A(1/z_n) prod_{l != n} [zeta(z_n/q) - zeta_l]
      = (q z_n^2 - 1)/(z_n^2 - q)
        * A(z_n) prod_{l != n} [zeta(q z_n) - zeta_l]

(products over the zeros; j runs over all of them, l skips n).  These are
exactly the cancellations that make the zero-grid matrices of the spectra
module well defined.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from .askey import (
    FamilyParams,
    aw_A,
    family_eval,
    family_map,
    monomial_coefficients,
    racah_C,
    racah_D,
    wilson_B,
)
from .errors import (
    DegenerateLeadingCoefficient,
    DegenerateZeros,
    MultipleRoot,
    NonConvergence,
)
from .linalg import horner
from .opcompile import VerificationReport
from .scalars import GaussianRational, as_complex, exact_div, is_exact, magnitude

__all__ = [
    "ZeroSet",
    "find_polynomial_roots",
    "find_zeros",
    "lift_to_z",
    "partner_preimage",
    "degree_one_zero",
    "verify_zero_identity",
]


@dataclass(frozen=True)
class ZeroSet:
    """All zeros of one family member, in zeta and lifted to z."""

    family: str
    n: int
    zeta_zeros: Tuple[complex, ...]
    z_lift: Tuple[complex, ...]
    residuals: Tuple[float, ...]
    params: FamilyParams


def _horner_pair(coeffs: Sequence[complex], x: complex) -> Tuple[complex, complex]:
    """Value and derivative of an ascending-coefficient polynomial."""
    p = 0j
    dp = 0j
    for c in reversed(coeffs):
        dp = dp * x + p
        p = p * x + c
    return p, dp


def find_polynomial_roots(
    coeffs: Sequence,
    max_iterations: int = 200,
    tol: float = 1e-13,
) -> List[complex]:
    """All complex roots by the Aberth-Ehrlich simultaneous iteration.

    ``coeffs`` are ascending; the leading coefficient must be nonzero.
    Raises NonConvergence if the iteration does not settle and MultipleRoot
    when two converged roots coincide to about eight digits (the iteration
    is not reliable there).
    """
    c = [complex(as_complex(x)) for x in coeffs]
    if not c:
        raise ValueError("empty coefficient list")
    if c[-1] == 0:
        raise DegenerateLeadingCoefficient(
            "leading coefficient is zero; trim the polynomial first"
        )
    degree = len(c) - 1
    if degree == 0:
        return []
    monic = [ci / c[-1] for ci in c]
    if degree == 1:
        return [-monic[0]]

    radius = 1.0 + max(abs(ci) for ci in monic[:-1])
    roots = [
        radius * cmath.exp(1j * (2.0 * cmath.pi * i / degree + 0.4))
        for i in range(degree)
    ]
    for _ in range(max_iterations):
        settled = True
        for i in range(degree):
            p, dp = _horner_pair(monic, roots[i])
            if p == 0:
                continue
            if dp == 0:
                roots[i] += 1e-6 + 1e-6j
                settled = False
                continue
            newton = p / dp
            others = sum(
                1.0 / (roots[i] - roots[j]) for j in range(degree) if j != i
            )
            denom = 1.0 - newton * others
            w = newton / denom if denom != 0 else newton
            roots[i] -= w
            if abs(w) > tol * max(1.0, abs(roots[i])):
                settled = False
        if settled:
            break
    else:
        raise NonConvergence(
            f"root iteration did not converge in {max_iterations} steps"
        )

    scale = max(1.0, max(abs(r) for r in roots))
    for i in range(degree):
        for j in range(i + 1, degree):
            if abs(roots[i] - roots[j]) < 1e-8 * scale:
                raise MultipleRoot(
                    f"roots {i} and {j} coincide near {roots[i]:.6g}"
                )
    return sorted(roots, key=lambda r: (r.real, r.imag))


def _branch_sqrt(w: complex) -> complex:
    """Principal square root with the signed zero of the imaginary part
    flattened, so values on the negative real axis land on the Im >= 0
    branch regardless of how a -0.0 crept in."""
    if w.imag == 0.0:
        w = complex(w.real, 0.0)
    return cmath.sqrt(w)


def _plain(z: complex) -> complex:
    """Normalize -0.0 components (keeps output stable and printable)."""
    return complex(z.real + 0.0, z.imag + 0.0)


def lift_to_z(params: FamilyParams, zeta: complex) -> complex:
    """One preimage of zeta under the family's variable map.

    The branch is canonical: wilson preimages have Re > 0 (or lie on the
    positive imaginary axis), racah preimages satisfy Re(2z) >= -(s) for
    s = gamma + delta + 1, and the quadratic-map preimage is taken with
    |z| >= 1 (upper unit circle when zeta is in the real interval [-1, 1]).
    """
    zeta = complex(as_complex(zeta))
    if params.family == "wilson":
        root = _branch_sqrt(-zeta)
        if root.real < 0 or (root.real == 0 and root.imag < 0):
            root = -root
        return _plain(root)
    if params.family == "racah":
        s = complex(as_complex(params.gamma)) + complex(
            as_complex(params.delta)
        ) + 1.0
        return _plain((-s + _branch_sqrt(s * s + 4.0 * zeta)) / 2.0)
    z = zeta + _branch_sqrt(zeta * zeta - 1.0)
    if abs(z) < 1.0:
        z = 1.0 / z
    return _plain(z)


def partner_preimage(params: FamilyParams, z: complex) -> complex:
    """The second solution of zeta(z') = zeta(z)."""
    z = complex(as_complex(z))
    if params.family == "wilson":
        return -z
    if params.family == "racah":
        s = complex(as_complex(params.gamma)) + complex(
            as_complex(params.delta)
        ) + 1.0
        return -s - z
    if z == 0:
        raise DegenerateZeros("z = 0 has no partner preimage under (z+1/z)/2")
    return 1.0 / z


def degree_one_zero(params: FamilyParams):
    """Closed-form zero of the degree-1 member, in the zeta variable."""
    a, b, c, d = params.abcd()
    params.ensure_degree(1)
    if params.family == "wilson":
        s = a + b + c + d
        if s == 0:
            raise DegenerateZeros("degree-1 member is constant (a+b+c+d = 0)")
        return exact_div((a + b) * (a + c) * (a + d), s) - a * a
    if params.family == "racah":
        s = a + b + 2
        if s == 0:
            raise DegenerateZeros("degree-1 member is constant (a+b+2 = 0)")
        return -exact_div((a + 1) * (b + d + 1) * (c + 1), s)
    prod = a * b * c * d
    if a == 0 or prod == 1:
        raise DegenerateZeros("degree-1 member is constant in zeta")
    rhs = exact_div((1 - a * b) * (1 - a * c) * (1 - a * d), 1 - prod)
    return exact_div(1 + a * a - rhs, 2 * a)


def _exact_eval(coeffs: Sequence, r: complex):
    """p(r) in exact arithmetic at the exactly-represented float point r."""
    zq = GaussianRational(Fraction(r.real), Fraction(r.imag))
    acc = GaussianRational(Fraction(0), Fraction(0))
    for c in reversed(coeffs):
        acc = acc * zq + c
    return acc


def _polish_root(
    params_f: FamilyParams,
    k: int,
    coeffs: Sequence[complex],
    exact_coeffs: Optional[Sequence],
    root: complex,
) -> complex:
    """A few Newton steps against an evaluation of p that does not share
    the monomial horner's rounding floor.

    With exact coefficients the numerator is the exactly evaluated value,
    which lets the iteration settle at the float-representable fixpoint;
    otherwise the series evaluation stands in.
    """
    dcoeffs = [i * coeffs[i] for i in range(1, len(coeffs))]

    def value(z: complex) -> complex:
        if exact_coeffs is not None:
            return complex(as_complex(_exact_eval(exact_coeffs, z)))
        return complex(as_complex(family_eval(params_f, k, z)))

    def resid(z: complex) -> float:
        if exact_coeffs is not None:
            return magnitude(_exact_eval(exact_coeffs, z))
        return abs(_horner_pair(coeffs, z)[0])

    best = root
    best_val = resid(root)
    z = root
    for _ in range(5):
        pv = value(z)
        dv = horner(dcoeffs, z)
        if dv == 0:
            break
        z = z - pv / dv
        val = resid(z)
        if val < best_val:
            best, best_val = z, val
    return best


def find_zeros(
    params: FamilyParams,
    k: int,
    polish: bool = True,
    max_iterations: int = 200,
) -> ZeroSet:
    """Locate all k zeros of the degree-k member in the zeta plane."""
    if k < 1:
        raise ValueError("zero finding needs degree at least 1")
    exact_coeffs = monomial_coefficients(params, k)
    if exact_coeffs[-1] == 0:
        raise DegenerateLeadingCoefficient(
            f"degree-{k} member has vanishing leading zeta-coefficient"
        )
    coeffs = [complex(as_complex(x)) for x in exact_coeffs]
    exact = exact_coeffs if all(is_exact(c) for c in exact_coeffs) else None
    roots = find_polynomial_roots(coeffs, max_iterations=max_iterations)
    if polish:
        pf = params.to_float()
        roots = [_polish_root(pf, k, coeffs, exact, r) for r in roots]
        roots.sort(key=lambda r: (r.real, r.imag))
    if exact is not None:
        residuals = tuple(magnitude(_exact_eval(exact, r)) for r in roots)
    else:
        residuals = tuple(abs(_horner_pair(coeffs, r)[0]) for r in roots)
    lifted = tuple(lift_to_z(params, r) for r in roots)
    return ZeroSet(
        family=params.family,
        n=k,
        zeta_zeros=tuple(roots),
        z_lift=lifted,
        residuals=residuals,
        params=params,
    )


def verify_zero_identity(
    params: FamilyParams,
    zero_set: Optional[ZeroSet] = None,
    k: Optional[int] = None,
    tol: float = 1e-8,
) -> VerificationReport:
    """Check the balance relation satisfied by the lifted zeros.

    Residuals are relative: |t_up + t_down| / max(1, |t_up|, |t_down|) per
    zero (for the askey-wilson relation, the difference of the two sides).
    """
    if zero_set is None:
        zero_set = find_zeros(params, 3 if k is None else k)
    pf = params.to_float()
    zmap = family_map(pf)
    zbar = [complex(z) for z in zero_set.z_lift]
    zetas = [complex(z) for z in zero_set.zeta_zeros]
    resid = []
    if pf.family == "wilson":
        for zn in zbar:
            up = wilson_B(pf, zn)
            down = wilson_B(pf, -zn)
            for zj in zbar:
                up *= (zn + 1.0) ** 2 - zj * zj
                down *= (zn - 1.0) ** 2 - zj * zj
            resid.append(_balance(up, down))
    elif pf.family == "racah":
        for zn in zbar:
            up = racah_C(pf, zn)
            down = racah_D(pf, zn)
            zu = zmap(zn + 1.0)
            zd = zmap(zn - 1.0)
            for zeta_j in zetas:
                up *= zu - zeta_j
                down *= zd - zeta_j
            resid.append(_balance(up, down))
    else:
        q = complex(as_complex(pf.q))
        for i, zn in enumerate(zbar):
            left = aw_A(pf, 1.0 / zn)
            ratio = (q * zn * zn - 1.0) / (zn * zn - q)
            right = ratio * aw_A(pf, zn)
            zu = zmap(zn / q)
            zd = zmap(q * zn)
            for l, zeta_l in enumerate(zetas):
                if l == i:
                    continue
                left *= zu - zeta_l
                right *= zd - zeta_l
            resid.append(_balance(left, -right))
    mags = tuple(resid)
    max_r = max(mags)
    return VerificationReport(
        label=f"zero-identity {params.family} n={zero_set.n}",
        backend="float-complex",
        residuals=mags,
        max_residual=max_r,
        tolerance=tol,
        passed=max_r <= tol,
    )


def _balance(t_up: complex, t_down: complex) -> float:
    return magnitude(t_up + t_down) / max(
        1.0, magnitude(t_up), magnitude(t_down)
    )
