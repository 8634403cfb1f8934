"""Hypergeometric-type special functions and three polynomial families.

Everything here is elementary arithmetic on products:

* ``shifted_factorial``:    (z, a)_k = prod_{s=0}^{k-1} (z + s a)
* ``pochhammer``:           (x)_k = (x, 1)_k
* ``q_shifted_factorial``:  (x; q)_s = prod_{r=0}^{s-1} (1 - q^r x)
* ``aw_bracket``:           prod_{r=0}^{s-1} (1 - 2 a zeta q^r + a^2 q^{2r})
* ``hypergeometric_terminating``: F(a, -k; c; x), a terminating 2F1 sum.

The three families are evaluated as terminating series in the mapped
variable zeta, with every term computed by an exact multiplicative update
(so rational parameters give rational values):

* Wilson-type, zeta = -z^2:
    W_k(zeta) = sum_s [(-k)_s (k + a+b+c+d - 1)_s
                / (s! (a+b)_s (a+c)_s (a+d)_s)]
                * prod_{r<s} [(a + r)^2 + zeta]
* Racah-type, zeta = z (z + c + d + 1):
    R_k(zeta) = sum_s [(-k)_s (k + a+b+1)_s
                / (s! (a+1)_s (b+d+1)_s (c+1)_s)]
                * prod_{r<s} [r (r + c + d + 1) - zeta]
* Askey-Wilson-type, zeta = (z + 1/z)/2:
    p_k(zeta) = sum_s [(q^{-k}; q)_s (abcd q^{k-1}; q)_s q^s
                / ((q; q)_s (ab; q)_s (ac; q)_s (ad; q)_s)]
                * prod_{r<s} (1 - 2 a zeta q^r + a^2 q^{2r})

(a, b, c, d stand for the parameters alpha..delta.)  Each family satisfies
a three-term difference equation in z whose coefficient functions are
``wilson_B``, ``racah_C``/``racah_D`` and ``aw_A``, with eigenvalues

    wilson:       k (k + a+b+c+d - 1)
    racah:        k (k + a+b + 1)
    askey-wilson: (q^{-k} - 1)(1 - abcd q^{k-1});

``difference_equation_residual`` measures how well a point z satisfies it.
``monomial_coefficients`` expands the series into ascending coefficients in
zeta, which is what the root finder consumes.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional, Tuple

from .errors import DenominatorPole, PoleAtArgument
from .foundation import (
    VariableMap,
    neg_square_map,
    racah_map,
    symmetric_inverse_map,
)
from .scalars import (
    GaussianRational,
    Scalar,
    exact_div,
    magnitude,
    scalar_pow,
)

__all__ = [
    "FamilyParams",
    "shifted_factorial",
    "pochhammer",
    "q_shifted_factorial",
    "aw_bracket",
    "hypergeometric_terminating",
    "wilson_eval",
    "racah_eval",
    "askey_wilson_eval",
    "family_eval",
    "wilson_B",
    "racah_C",
    "racah_D",
    "aw_A",
    "family_eigenvalue",
    "family_map",
    "monomial_coefficients",
    "difference_equation_residual",
]

FAMILIES = ("wilson", "racah", "askey-wilson")


@dataclass(frozen=True)
class FamilyParams:
    """Parameter vector (alpha, beta, gamma, delta[, q]) for one family."""

    family: str
    alpha: Scalar
    beta: Scalar
    gamma: Scalar
    delta: Scalar
    q: Optional[Scalar] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family: {self.family!r}")
        if self.family == "askey-wilson":
            if self.q is None:
                raise ValueError("askey-wilson parameters require q")
            if self.q == 0 or self.q == 1:
                raise ValueError("q must differ from 0 and 1")
        elif self.q is not None:
            raise ValueError(f"{self.family} parameters do not take q")

    def abcd(self) -> Tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    def ensure_degree(self, k: int) -> "FamilyParams":
        """Raise DenominatorPole unless degrees 0..k are well defined."""
        a, b, c, d = self.abcd()
        if self.family == "wilson":
            pairs = (("alpha+beta", a + b), ("alpha+gamma", a + c),
                     ("alpha+delta", a + d))
            for name, base in pairs:
                for j in range(k):
                    if base + j == 0:
                        raise DenominatorPole(
                            f"({name})_{j + 1} vanishes; degree {k} "
                            f"undefined for these parameters"
                        )
        elif self.family == "racah":
            pairs = (("alpha+1", a + 1), ("beta+delta+1", b + d + 1),
                     ("gamma+1", c + 1))
            for name, base in pairs:
                for j in range(k):
                    if base + j == 0:
                        raise DenominatorPole(
                            f"({name})_{j + 1} vanishes; degree {k} "
                            f"undefined for these parameters"
                        )
        else:
            q = self.q
            pairs = (("alpha*beta", a * b), ("alpha*gamma", a * c),
                     ("alpha*delta", a * d))
            qp: Scalar = 1
            for j in range(k):
                qp = qp * q
                if qp == 1:
                    raise DenominatorPole(
                        f"(q;q)_{j + 1} vanishes: q is a root of unity"
                    )
            qp = 1
            for j in range(k):
                for name, base in pairs:
                    if base * qp == 1:
                        raise DenominatorPole(
                            f"({name}; q)_{j + 1} vanishes; degree {k} "
                            f"undefined for these parameters"
                        )
                qp = qp * q
        return self

    def to_float(self) -> "FamilyParams":
        """Same parameters on the float backend."""
        def conv(x):
            if x is None:
                return None
            if isinstance(x, (int, Fraction)):
                return float(x)
            if isinstance(x, GaussianRational):
                return complex(x)
            return x

        return replace(
            self,
            alpha=conv(self.alpha),
            beta=conv(self.beta),
            gamma=conv(self.gamma),
            delta=conv(self.delta),
            q=conv(self.q),
        )


# -- elementary products -------------------------------------------------------


def shifted_factorial(z: Scalar, a: Scalar, k: int) -> Scalar:
    """(z, a)_k = prod_{s=0}^{k-1} (z + s a); empty product is 1."""
    if k < 0:
        raise ValueError("shifted factorial order must be nonnegative")
    out: Scalar = 1
    for s in range(k):
        out = out * (z + s * a)
    return out


def pochhammer(x: Scalar, k: int) -> Scalar:
    """(x)_k rising factorial."""
    return shifted_factorial(x, 1, k)


def q_shifted_factorial(x: Scalar, q: Scalar, s: int) -> Scalar:
    """(x; q)_s = prod_{r=0}^{s-1} (1 - q^r x)."""
    if s < 0:
        raise ValueError("q-shifted factorial order must be nonnegative")
    out: Scalar = 1
    qp: Scalar = 1
    for _ in range(s):
        out = out * (1 - qp * x)
        qp = qp * q
    return out


def aw_bracket(alpha: Scalar, zeta: Scalar, q: Scalar, s: int) -> Scalar:
    """prod_{r=0}^{s-1} (1 - 2 alpha zeta q^r + alpha^2 q^{2r})."""
    if s < 0:
        raise ValueError("bracket order must be nonnegative")
    out: Scalar = 1
    qp: Scalar = 1
    for _ in range(s):
        out = out * (1 - 2 * alpha * zeta * qp + alpha * alpha * qp * qp)
        qp = qp * q
    return out


def hypergeometric_terminating(
    a: Scalar, k: int, c: Scalar, x: Scalar
) -> Scalar:
    """F(a, -k; c; x) = sum_{r=0}^{k} (a)_r (-k)_r x^r / (r! (c)_r)."""
    if k < 0:
        raise ValueError("truncation degree must be nonnegative")
    total: Scalar = 1
    term: Scalar = 1
    for r in range(k):
        if c + r == 0:
            raise DenominatorPole(
                f"(c)_{r + 1} vanishes for c = {c!r}; series undefined"
            )
        term = exact_div(
            term * (a + r) * (-k + r) * x, (r + 1) * (c + r)
        )
        total = total + term
    return total


# -- family evaluation ---------------------------------------------------------


def _series_updates(params: FamilyParams, k: int):
    """Per-step scalar ratio and linear zeta factor of the family series.

    Yields, for s = 0..k-1, a pair (ratio, (u, v)) such that

        term_{s+1}(zeta) = term_s(zeta) * ratio * (u + v * zeta_factor)

    where zeta_factor multiplies the accumulated product over r < s.
    """
    a, b, c, d = params.abcd()
    if params.family == "wilson":
        for s in range(k):
            ratio = exact_div(
                (-k + s) * (k + a + b + c + d - 1 + s),
                (s + 1) * (a + b + s) * (a + c + s) * (a + d + s),
            )
            yield ratio, ((a + s) * (a + s), 1)
    elif params.family == "racah":
        for s in range(k):
            ratio = exact_div(
                (-k + s) * (k + a + b + 1 + s),
                (s + 1) * (a + 1 + s) * (b + d + 1 + s) * (c + 1 + s),
            )
            yield ratio, (s * (s + c + d + 1), -1)
    else:
        q = params.q
        q_pow_s: Scalar = 1
        q_neg_k = scalar_pow(q, -k)
        abcd_qk = a * b * c * d * scalar_pow(q, k - 1)
        for s in range(k):
            ratio = exact_div(
                (1 - q_neg_k * q_pow_s) * (1 - abcd_qk * q_pow_s) * q,
                (1 - q_pow_s * q)
                * (1 - a * b * q_pow_s)
                * (1 - a * c * q_pow_s)
                * (1 - a * d * q_pow_s),
            )
            yield ratio, (
                1 + a * a * q_pow_s * q_pow_s,
                -2 * a * q_pow_s,
            )
            q_pow_s = q_pow_s * q


def family_eval(params: FamilyParams, k: int, zeta: Scalar) -> Scalar:
    """Evaluate the degree-k family polynomial at a point zeta."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    params.ensure_degree(k)
    total: Scalar = 1
    term: Scalar = 1
    for ratio, (u, v) in _series_updates(params, k):
        term = term * ratio * (u + v * zeta)
        total = total + term
    return total


def wilson_eval(params: FamilyParams, k: int, zeta: Scalar) -> Scalar:
    if params.family != "wilson":
        raise ValueError("wilson_eval requires wilson parameters")
    return family_eval(params, k, zeta)


def racah_eval(params: FamilyParams, k: int, zeta: Scalar) -> Scalar:
    if params.family != "racah":
        raise ValueError("racah_eval requires racah parameters")
    return family_eval(params, k, zeta)


def askey_wilson_eval(params: FamilyParams, k: int, zeta: Scalar) -> Scalar:
    if params.family != "askey-wilson":
        raise ValueError("askey_wilson_eval requires askey-wilson parameters")
    return family_eval(params, k, zeta)


def monomial_coefficients(params: FamilyParams, k: int) -> Tuple[Scalar, ...]:
    """Ascending zeta-coefficients (c_0, ..., c_k) of the degree-k member."""
    if k < 0:
        raise ValueError("degree must be nonnegative")
    params.ensure_degree(k)
    coeffs: list = [0] * (k + 1)
    scalar: Scalar = 1
    prod: list = [1]
    steps = _series_updates(params, k)
    for s in range(k + 1):
        for i, c in enumerate(prod):
            coeffs[i] = coeffs[i] + scalar * c
        if s == k:
            break
        ratio, (u, v) = next(steps)
        scalar = scalar * ratio
        new = [0] * (len(prod) + 1)
        for i, c in enumerate(prod):
            new[i] = new[i] + u * c
            new[i + 1] = new[i + 1] + v * c
        prod = new
    return tuple(coeffs)


# -- difference equation coefficients ------------------------------------------


def _pole_guard(den: Scalar, what: str, z: Scalar) -> Scalar:
    if den == 0:
        raise PoleAtArgument(f"{what} has a pole at z = {z!r}")
    return den


def wilson_B(params: FamilyParams, z: Scalar) -> Scalar:
    """(z+a)(z+b)(z+c)(z+d) / (2z (2z+1))."""
    a, b, c, d = params.abcd()
    den = _pole_guard(2 * z * (2 * z + 1), "wilson coefficient B", z)
    return exact_div((z + a) * (z + b) * (z + c) * (z + d), den)


def racah_C(params: FamilyParams, z: Scalar) -> Scalar:
    """(z+a+1)(z+b+d+1)(z+c+1)(z+c+d+1) / ((2z+c+d+1)(2z+c+d+2))."""
    a, b, c, d = params.abcd()
    den = _pole_guard(
        (2 * z + c + d + 1) * (2 * z + c + d + 2), "racah coefficient C", z
    )
    return exact_div(
        (z + a + 1) * (z + b + d + 1) * (z + c + 1) * (z + c + d + 1), den
    )


def racah_D(params: FamilyParams, z: Scalar) -> Scalar:
    """z (z-a+c+d)(z-b+c)(z+d) / ((2z+c+d)(2z+c+d+1))."""
    a, b, c, d = params.abcd()
    den = _pole_guard(
        (2 * z + c + d) * (2 * z + c + d + 1), "racah coefficient D", z
    )
    return exact_div(z * (z - a + c + d) * (z - b + c) * (z + d), den)


def aw_A(params: FamilyParams, z: Scalar) -> Scalar:
    """(1-az)(1-bz)(1-cz)(1-dz) / ((1-z^2)(1-q z^2))."""
    a, b, c, d = params.abcd()
    z2 = z * z
    den = _pole_guard(
        (1 - z2) * (1 - params.q * z2), "askey-wilson coefficient A", z
    )
    return exact_div((1 - a * z) * (1 - b * z) * (1 - c * z) * (1 - d * z), den)


def family_eigenvalue(params: FamilyParams, k: int) -> Scalar:
    """Difference-equation eigenvalue of the degree-k member."""
    a, b, c, d = params.abcd()
    if params.family == "wilson":
        return k * (k + a + b + c + d - 1)
    if params.family == "racah":
        return k * (k + a + b + 1)
    q = params.q
    return (scalar_pow(q, -k) - 1) * (1 - a * b * c * d * scalar_pow(q, k - 1))


def family_map(params: FamilyParams) -> VariableMap:
    """Variable map zeta(z) in which the family's polynomials live."""
    if params.family == "wilson":
        return neg_square_map()
    if params.family == "racah":
        return racah_map(params.gamma, params.delta)
    return symmetric_inverse_map()


def _family_zeta(params: FamilyParams, z: Scalar):
    return family_map(params)(z)


def difference_equation_residual(
    params: FamilyParams, k: int, z: Scalar
) -> float:
    """Scaled residual of the family's difference equation at the point z.

    Returns |up + down - lambda_k p| / max(1, |up|, |down|, |lambda_k p|)
    where up and down are the two shifted coefficient terms.  Exactly zero
    on the exact backend when the identity holds.
    """
    zeta = _family_zeta(params, z)
    p_here = family_eval(params, k, zeta)
    if params.family == "wilson":
        up = wilson_B(params, z) * (
            family_eval(params, k, _family_zeta(params, z + 1)) - p_here
        )
        down = wilson_B(params, -z) * (
            family_eval(params, k, _family_zeta(params, z - 1)) - p_here
        )
    elif params.family == "racah":
        up = racah_C(params, z) * (
            family_eval(params, k, _family_zeta(params, z + 1)) - p_here
        )
        down = racah_D(params, z) * (
            family_eval(params, k, _family_zeta(params, z - 1)) - p_here
        )
    else:
        if z == 0:
            raise PoleAtArgument("askey-wilson equation undefined at z = 0")
        q = params.q
        up = aw_A(params, z) * (
            family_eval(params, k, _family_zeta(params, q * z)) - p_here
        )
        down = aw_A(params, exact_div(1, z)) * (
            family_eval(params, k, _family_zeta(params, exact_div(z, q)))
            - p_here
        )
    rhs = family_eigenvalue(params, k) * p_here
    num = magnitude(up + down - rhs)
    scale = max(1.0, magnitude(up), magnitude(down), magnitude(rhs))
    return num / scale
