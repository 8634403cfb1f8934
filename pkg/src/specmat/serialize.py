"""JSON encoding, decoding, and scalar literals.

Scalars encode by backend:

* ``int``/``Fraction``     ->  ``"p/q"`` string (``str(Fraction)`` form)
* ``GaussianRational``     ->  ``["re", "im"]`` pair of rational strings
* ``float``/``complex``    ->  ``[re, im]`` pair of JSON numbers

so every matrix payload is self-describing; a ``backend`` tag is included
anyway for readability.  Encoding is deterministic (dict key order is fixed
by construction, floats use Python repr) and decoding then re-encoding is
byte-stable, which the CLI relies on.

``parse_scalar_literal`` reads command-line scalars: ``"5"``, ``"-3/4"``,
``"1.5"``, ``"2e-3"``, ``"1+2i"``, ``"1/2-3/4i"``, ``"i"``.  Rational
literals stay exact; a decimal point or exponent switches to floating
point.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Optional, Sequence

from .askey import FamilyParams
from .foundation import VariableMap
from .linalg import Matrix
from .opcompile import (
    OperatorExpr,
    OperatorTerm,
    RationalFunction,
    VerificationReport,
)
from .scalars import GaussianRational, Scalar, backend_tag
from .shift import ShiftKind
from .spectra import ClaimReport
from .zeros import ZeroSet

__all__ = [
    "scalar_to_json",
    "scalar_from_json",
    "matrix_to_json",
    "matrix_from_json",
    "vector_to_json",
    "vector_from_json",
    "expr_to_json",
    "expr_from_json",
    "params_to_json",
    "params_from_json",
    "claim_report_to_json",
    "verification_to_json",
    "zero_set_to_json",
    "dumps",
    "parse_scalar_literal",
]


def scalar_to_json(x: Scalar) -> Any:
    if isinstance(x, (int, Fraction)):
        return str(Fraction(x))
    if isinstance(x, GaussianRational):
        return [str(x.re), str(x.im)]
    c = complex(x)
    return [c.real, c.imag]


def scalar_from_json(obj: Any) -> Scalar:
    if isinstance(obj, str):
        return Fraction(obj)
    if isinstance(obj, (int, float)):
        # tolerated shorthand for a real float entry
        return float(obj)
    if isinstance(obj, list) and len(obj) == 2:
        a, b = obj
        if isinstance(a, str) and isinstance(b, str):
            return GaussianRational(Fraction(a), Fraction(b))
        return complex(float(a), float(b))
    raise ValueError(f"cannot decode scalar from {obj!r}")


def matrix_to_json(m: Matrix) -> dict:
    entries = [e for row in m.rows() for e in row]
    return {
        "n": m.n,
        "backend": backend_tag(entries),
        "entries": [scalar_to_json(e) for e in entries],
    }


def matrix_from_json(obj: dict) -> Matrix:
    n = int(obj["n"])
    entries = [scalar_from_json(e) for e in obj["entries"]]
    if len(entries) != n * n:
        raise ValueError("matrix entry count does not match size")
    return Matrix([entries[i * n:(i + 1) * n] for i in range(n)])


def vector_to_json(values: Sequence[Scalar]) -> dict:
    values = list(values)
    return {
        "n": len(values),
        "backend": backend_tag(values),
        "entries": [scalar_to_json(v) for v in values],
    }


def vector_from_json(obj: dict) -> list:
    entries = [scalar_from_json(e) for e in obj["entries"]]
    if len(entries) != int(obj["n"]):
        raise ValueError("vector entry count does not match size")
    return entries


def _map_to_json(vm: VariableMap) -> dict:
    out: dict = {"kind": vm.kind}
    if vm.kind == "racah":
        out["gamma"] = scalar_to_json(vm.gamma)
        out["delta"] = scalar_to_json(vm.delta)
    return out


def _map_from_json(obj: dict) -> VariableMap:
    kind = obj["kind"]
    if kind == "racah":
        return VariableMap(
            "racah",
            gamma=scalar_from_json(obj["gamma"]),
            delta=scalar_from_json(obj["delta"]),
        )
    return VariableMap(kind)


def expr_to_json(expr: OperatorExpr) -> dict:
    return {
        "shift": {
            "kind": expr.shift.kind,
            "value": scalar_to_json(expr.shift.value),
        },
        "map": _map_to_json(expr.variable_map),
        "terms": [
            {
                "power": t.power,
                "num": [scalar_to_json(c) for c in t.coeff.num],
                "den": [scalar_to_json(c) for c in t.coeff.den],
            }
            for t in expr.terms
        ],
    }


def expr_from_json(obj: dict) -> OperatorExpr:
    shift = ShiftKind(
        obj["shift"]["kind"], scalar_from_json(obj["shift"]["value"])
    )
    terms = tuple(
        OperatorTerm(
            int(t["power"]),
            RationalFunction(
                tuple(scalar_from_json(c) for c in t["num"]),
                tuple(scalar_from_json(c) for c in t["den"]),
            ),
        )
        for t in obj["terms"]
    )
    return OperatorExpr(shift, terms, _map_from_json(obj["map"]))


def params_to_json(params: FamilyParams) -> dict:
    out = {
        "family": params.family,
        "alpha": scalar_to_json(params.alpha),
        "beta": scalar_to_json(params.beta),
        "gamma": scalar_to_json(params.gamma),
        "delta": scalar_to_json(params.delta),
    }
    if params.q is not None:
        out["q"] = scalar_to_json(params.q)
    return out


def params_from_json(obj: dict) -> FamilyParams:
    return FamilyParams(
        family=obj["family"],
        alpha=scalar_from_json(obj["alpha"]),
        beta=scalar_from_json(obj["beta"]),
        gamma=scalar_from_json(obj["gamma"]),
        delta=scalar_from_json(obj["delta"]),
        q=scalar_from_json(obj["q"]) if "q" in obj else None,
    )


def claim_report_to_json(report: ClaimReport) -> dict:
    return {
        "proposition": report.proposition,
        "n": report.n,
        "backend": report.backend,
        "eigen_residuals": [float(r) for r in report.eigen_residuals],
        "char_poly_match": report.char_poly_match,
        "pass": report.passed,
    }


def verification_to_json(report: VerificationReport) -> dict:
    return {
        "label": report.label,
        "backend": report.backend,
        "residuals": [float(r) for r in report.residuals],
        "max_residual": float(report.max_residual),
        "tolerance": float(report.tolerance),
        "pass": report.passed,
    }


def zero_set_to_json(zs: ZeroSet) -> dict:
    return {
        "family": zs.family,
        "n": zs.n,
        "zeta_zeros": [[z.real, z.imag] for z in zs.zeta_zeros],
        "z_lift": [[z.real, z.imag] for z in zs.z_lift],
        "residuals": [float(r) for r in zs.residuals],
    }


def dumps(data: Any, pretty: bool = False) -> str:
    """Deterministic JSON text (no trailing newline)."""
    if pretty:
        return json.dumps(data, indent=2, separators=(",", ": "))
    return json.dumps(data, separators=(",", ":"))


# -- command-line scalar literals -----------------------------------------------


def _parse_real_token(tok: str, allow_empty_one: bool = False) -> Scalar:
    tok = tok.strip()
    if tok in ("", "+") and allow_empty_one:
        return Fraction(1)
    if tok == "-" and allow_empty_one:
        return Fraction(-1)
    if not tok:
        raise ValueError("empty numeric token")
    if "." in tok or "e" in tok or "E" in tok:
        return float(tok)
    return Fraction(tok)


def _split_imaginary(body: str) -> Optional[int]:
    """Index of the sign separating real and imaginary parts, or None."""
    for i in range(len(body) - 1, 0, -1):
        if body[i] in "+-" and body[i - 1] not in "eE":
            return i
    return None


def parse_scalar_literal(text: str) -> Scalar:
    """Parse a CLI scalar: rational, float, or complex ``a+bi`` literal."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty scalar literal")
    try:
        if s.endswith(("i", "j")):
            body = s[:-1]
            cut = _split_imaginary(body)
            if cut is None:
                re_part: Scalar = Fraction(0)
                im_part = _parse_real_token(body, allow_empty_one=True)
            else:
                re_part = _parse_real_token(body[:cut])
                im_part = _parse_real_token(body[cut:], allow_empty_one=True)
            if isinstance(re_part, Fraction) and isinstance(im_part, Fraction):
                return GaussianRational(re_part, im_part)
            return complex(float(re_part), float(im_part))
        return _parse_real_token(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse scalar literal {text!r}: {exc}")
