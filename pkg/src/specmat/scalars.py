"""Scalar backends.

All matrices and vectors in this package are generic over a scalar field with
two concrete backends:

* floating point: plain Python ``complex`` (or ``float``/``int`` coerced by
  arithmetic), used for spectra and root finding;
* exact: ``GaussianRational``, a complex number with ``Fraction`` real and
  imaginary parts, used for every identity that is supposed to hold exactly.

Plain ``int`` and ``Fraction`` values interoperate with both backends, so
integer literals like 0 and 1 can be used everywhere.  Mixing a
``GaussianRational`` with a ``float``/``complex`` is a TypeError on purpose:
silent precision loss would defeat the point of the exact backend.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

__all__ = [
    "GaussianRational",
    "Scalar",
    "is_exact",
    "as_complex",
    "magnitude",
    "scalar_pow",
    "ensure_finite",
    "exact_div",
    "backend_tag",
]

_RATIONAL = (int, Fraction)


class GaussianRational:
    """Exact complex number ``re + im*i`` with rational parts.

    Supports field arithmetic with ``int``, ``Fraction`` and other
    ``GaussianRational`` values.  Division is exact (multiply by the
    conjugate over the rational norm).  Powers accept negative exponents.

    >>> i = GaussianRational(0, 1)
    >>> (1 + i) * (1 - i)
    GaussianRational(2, 0)
    >>> 1 / (1 + i)
    GaussianRational(1/2, -1/2)
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, _RATIONAL):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / norm,
            (self.im * o.re - self.re * o.im) / norm,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return (1 / self) ** (-exponent)
        result = GaussianRational(1)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    # -- comparison and hashing -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, _RATIONAL):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __abs__(self):
        return math.hypot(float(self.re), float(self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


Scalar = Union[int, Fraction, GaussianRational, float, complex]


def is_exact(x: Scalar) -> bool:
    """True for scalars carrying exact (rational) arithmetic."""
    return isinstance(x, (int, Fraction, GaussianRational))


def as_complex(x: Scalar) -> complex:
    """Lossy conversion of any backend scalar to ``complex``."""
    if isinstance(x, GaussianRational):
        return complex(x)
    return complex(x)


def magnitude(x: Scalar) -> float:
    """Float modulus of a scalar from either backend."""
    if isinstance(x, GaussianRational):
        return abs(x)
    return abs(complex(x))


def scalar_pow(x: Scalar, k: int) -> Scalar:
    """x**k for integer k, allowing negative exponents on both backends."""
    if isinstance(x, GaussianRational):
        return x**k
    if k < 0 and isinstance(x, int):
        return Fraction(1, 1) / Fraction(x) ** (-k)
    if k < 0 and isinstance(x, Fraction):
        return Fraction(1, 1) / x ** (-k)
    return x**k


def ensure_finite(x: Scalar, what: str = "value") -> Scalar:
    """Reject NaN and infinity on the float backend; exact values pass."""
    if is_exact(x):
        return x
    c = complex(x)
    if not (math.isfinite(c.real) and math.isfinite(c.imag)):
        raise ValueError(f"non-finite {what}: {x!r}")
    return x


def exact_div(a: Scalar, b: Scalar) -> Scalar:
    """Division that never silently leaves the exact backend.

    ``int / int`` would produce a float; route it through ``Fraction``.
    All other scalar combinations divide natively.
    """
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    if isinstance(b, int):
        b = Fraction(b)
    return a / b


def backend_tag(values) -> str:
    """Classify a collection of scalars for serialization and reports.

    Returns ``"exact-gaussian-rational"`` when everything is exact and a
    ``GaussianRational`` appears, ``"exact-rational"`` when everything is an
    ``int``/``Fraction``, and ``"float-complex"`` otherwise.
    """
    saw_gaussian = False
    for x in values:
        if isinstance(x, GaussianRational):
            saw_gaussian = True
        elif not isinstance(x, _RATIONAL):
            return "float-complex"
    return "exact-gaussian-rational" if saw_gaussian else "exact-rational"
