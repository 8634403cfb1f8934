"""Named verification suites over the whole construction.

Each suite draws deterministic inputs from a seed, runs a batch of checks,
and returns a plain dict ready for JSON output:

    {"suite": ..., "n": ..., "seed": ..., "backend": ..., "tolerance": ...,
     "checks": [{"label": ..., "residual": ..., "pass": ...}, ...],
     "pass": <all checks passed>}

On the exact backend every identity must hold with residual exactly zero;
on the float backend residuals are relative and compared against the
tolerance.  Suites:

* ``identities``   shift representation, semigroup/commutation/inverse laws,
                   integer powers, and the hat/check conjugation relations;
* ``nilpotency``   divided-difference matrices have index exactly N;
* ``appendix-b``   determinant, trace, and eigenvectors of the scaling shift;
* ``prop-3.1`` ..  one suite per spectral claim, building the matrix and
  ``prop-3.9``     verifying its claimed eigensystem;
* ``all``          everything above.

The zero-grid suites (3.4/3.6/3.9) need family parameters whose polynomial
zeros are simple and clear of the coefficient poles.  Small integer racah
parameters fail that: their zeros include the branch point of the quadratic
map, which is also a pole of both coefficient functions.  The module-level
default parameter sets below are generic in that sense for every size used
here.
"""

from __future__ import annotations

from fractions import Fraction
from random import Random
from typing import Callable, List, Optional

from .askey import FamilyParams, family_map
from .foundation import (
    NodeSet,
    make_node_set,
    random_complex_nodes,
    random_rational_nodes,
)
from .linalg import Matrix, horner, identity
from .scalars import Scalar, backend_tag, exact_div, magnitude, scalar_pow
from .serialize import claim_report_to_json, scalar_to_json
from .shift import delta_check, delta_hat, nabla_check, nabla_hat
from .spectra import (
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

__all__ = [
    "SUITE_NAMES",
    "DEFAULT_WILSON",
    "DEFAULT_RACAH",
    "DEFAULT_ASKEY_WILSON",
    "POLE_BUFFER",
    "default_params",
    "family_avoid",
    "draw_nodes",
    "run_suite",
]

PROP_SUITES = tuple(f"prop-3.{i}" for i in range(1, 10))
SUITE_NAMES = ("identities", "nilpotency", "appendix-b") + PROP_SUITES + (
    "all",
)

DEFAULT_WILSON = FamilyParams(
    family="wilson", alpha=1, beta=2, gamma=3, delta=4
)
DEFAULT_RACAH = FamilyParams(
    family="racah",
    alpha=Fraction(5, 4),
    beta=Fraction(7, 3),
    gamma=Fraction(9, 5),
    delta=Fraction(11, 7),
)
DEFAULT_ASKEY_WILSON = FamilyParams(
    family="askey-wilson",
    alpha=Fraction(1, 2),
    beta=Fraction(1, 3),
    gamma=Fraction(1, 5),
    delta=Fraction(1, 7),
    q=Fraction(1, 2),
)

# Node generators keep at least this distance from coefficient poles.
POLE_BUFFER = 0.15


def default_params(family: str) -> FamilyParams:
    if family == "wilson":
        return DEFAULT_WILSON
    if family == "racah":
        return DEFAULT_RACAH
    if family == "askey-wilson":
        return DEFAULT_ASKEY_WILSON
    raise ValueError(f"unknown family: {family!r}")


def _pole_points(params: FamilyParams) -> List[complex]:
    if params.family == "wilson":
        return [0.0, 0.5, -0.5]
    if params.family == "racah":
        gd = complex(params.gamma) + complex(params.delta)
        return [-(gd) / 2, -(gd + 1) / 2, -(gd + 2) / 2]
    q = complex(params.q)
    root = q ** 0.5
    return [0.0, 1.0, -1.0, root, -root, 1 / root, -1 / root]


def family_avoid(
    params: FamilyParams, buffer: float = POLE_BUFFER
) -> Callable[[complex], bool]:
    """Predicate rejecting points too close to a coefficient pole."""
    poles = _pole_points(params)

    def near_pole(z) -> bool:
        zc = complex(z)
        return any(abs(zc - p) < buffer for p in poles)

    return near_pole


def draw_nodes(
    n: int,
    rng: Random,
    backend: str,
    params: Optional[FamilyParams] = None,
) -> NodeSet:
    """Seeded node draw on the requested backend.

    With family parameters the nodes carry the family's variable map and
    stay clear of the coefficient poles.
    """
    vmap = family_map(params) if params is not None else None
    avoid = family_avoid(params) if params is not None else None
    if backend == "exact":
        kwargs = {"avoid": avoid, "with_imaginary": params is None}
        if vmap is not None:
            kwargs["variable_map"] = vmap
        return random_rational_nodes(n, rng, **kwargs)
    kwargs = {"avoid": avoid}
    if vmap is not None:
        kwargs["variable_map"] = vmap
    return random_complex_nodes(n, rng, **kwargs)


def _rng(seed: int, salt: str) -> Random:
    r = Random()
    r.seed(f"{seed}:{salt}", version=2)
    return r


def _rational_nonzero(rng: Random, num: int = 12, den: int = 6) -> Fraction:
    while True:
        f = Fraction(rng.randint(-num, num), rng.randint(1, den))
        if f != 0:
            return f


def _rational_ratio(rng: Random) -> Fraction:
    """Random rational ratio, not a root of unity (q != 0, +-1)."""
    while True:
        f = _rational_nonzero(rng)
        if f != 1 and f != -1:
            return f


def _float_step(rng: Random) -> complex:
    return complex(rng.uniform(0.4, 1.6), rng.uniform(-0.6, 0.6))


def _float_ratio(rng: Random) -> complex:
    """Random complex ratio with |q| bounded away from the unit circle.

    Keeping |q| out of [0.85, 1.15] keeps every power q^j well away from 1,
    which the index-N nilpotency of the q-difference matrix needs.
    """
    while True:
        q = complex(rng.uniform(-1.8, 1.8), rng.uniform(-0.9, 0.9))
        if 0.4 < abs(q) < 2.0 and not 0.85 < abs(q) < 1.15:
            return q


def _matrix_diff(lhs: Matrix, rhs: Matrix) -> float:
    diff = lhs - rhs
    scale = max(1.0, lhs.inf_norm(), rhs.inf_norm())
    return diff.inf_norm() / scale


def _matrix_check(
    label: str, lhs: Matrix, rhs: Matrix, exact: bool, tol: float
) -> dict:
    if exact:
        passed = lhs == rhs
        residual = 0.0 if passed else _matrix_diff(lhs, rhs)
    else:
        residual = _matrix_diff(lhs, rhs)
        passed = residual <= tol
    return {"label": label, "residual": residual, "pass": passed}


def _vector_check(label, got, want, exact: bool, tol: float) -> dict:
    scale = max(1.0, max(magnitude(x) for x in want))
    residual = max(magnitude(g - w) for g, w in zip(got, want)) / scale
    if exact:
        passed = all(g == w for g, w in zip(got, want))
        residual = 0.0 if passed else residual
    else:
        passed = residual <= tol
    return {"label": label, "residual": residual, "pass": passed}


def _random_poly(rng: Random, degree: int, exact: bool) -> list:
    if exact:
        return [
            Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            for _ in range(degree + 1)
        ]
    return [
        complex(rng.uniform(-2, 2), rng.uniform(-2, 2))
        for _ in range(degree + 1)
    ]


# -- identity suites ------------------------------------------------------------


def _suite_identities(n, seed, backend, tol) -> List[dict]:
    rng = _rng(seed, "identities")
    exact = backend == "exact"
    ns = draw_nodes(n, rng, backend)
    if exact:
        a = _rational_nonzero(rng)
        b = _rational_nonzero(rng)
        q = _rational_ratio(rng)
        q_inv = exact_div(1, q)
    else:
        a = _float_step(rng)
        b = _float_step(rng)
        q = _float_ratio(rng)
        q_inv = 1 / q
    checks = []

    coeffs = _random_poly(rng, n - 1, exact)
    samples = [horner(coeffs, z) for z in ns.nodes]
    shifted = [horner(coeffs, z + a) for z in ns.nodes]
    scaled = [horner(coeffs, q * z) for z in ns.nodes]
    dh = delta_hat(ns, a)
    dc = delta_check(ns, q)
    checks.append(
        _vector_check(
            "delta-hat reproduces samples of f(z + a)",
            dh.apply(samples),
            shifted,
            exact,
            tol,
        )
    )
    checks.append(
        _vector_check(
            "delta-check reproduces samples of f(q z)",
            dc.apply(samples),
            scaled,
            exact,
            tol,
        )
    )

    dhb = delta_hat(ns, b)
    checks.append(
        _matrix_check(
            "additive semigroup: delta-hat(a) delta-hat(b) = delta-hat(a+b)",
            dh @ dhb,
            delta_hat(ns, a + b),
            exact,
            tol,
        )
    )
    checks.append(
        _matrix_check(
            "additive shifts commute",
            dh @ dhb,
            dhb @ dh,
            exact,
            tol,
        )
    )
    checks.append(
        _matrix_check(
            "additive inverse: delta-hat(a) delta-hat(-a) = I",
            dh @ delta_hat(ns, -a),
            identity(n),
            exact,
            tol,
        )
    )
    checks.append(
        _matrix_check(
            "zero step: delta-hat(0) = I",
            delta_hat(ns, 0),
            identity(n),
            exact,
            tol,
        )
    )
    checks.append(
        _matrix_check(
            "integer power: delta-hat(3a) = delta-hat(a)^3",
            delta_hat(ns, 3 * a),
            dh.power(3),
            exact,
            tol,
        )
    )

    p = _rational_ratio(rng) if exact else _float_ratio(rng)
    dcp = delta_check(ns, p)
    checks.append(
        _matrix_check(
            "multiplicative semigroup: "
            "delta-check(p) delta-check(q) = delta-check(pq)",
            dcp @ dc,
            delta_check(ns, p * q),
            exact,
            tol,
        )
    )
    checks.append(
        _matrix_check(
            "multiplicative shifts commute",
            dcp @ dc,
            dc @ dcp,
            exact,
            tol,
        )
    )
    checks.append(
        _matrix_check(
            "multiplicative inverse: delta-check(q) delta-check(1/q) = I",
            dc @ delta_check(ns, q_inv),
            identity(n),
            exact,
            tol,
        )
    )
    checks.append(
        _matrix_check(
            "integer power: delta-check(q^3) = delta-check(q)^3",
            delta_check(ns, q * q * q),
            dc.power(3),
            exact,
            tol,
        )
    )

    checks.append(
        _matrix_check(
            "conjugation: delta-check(1/q) delta-hat(a) delta-check(q) "
            "= delta-hat(qa)",
            delta_check(ns, q_inv) @ dh @ dc,
            delta_hat(ns, q * a),
            exact,
            tol,
        )
    )
    checks.append(
        _matrix_check(
            "composite conjugation, left form: "
            "delta-check(1/q) delta-hat(a) delta-check(q) delta-hat(b) "
            "= delta-hat(qa + b)",
            delta_check(ns, q_inv) @ dh @ dc @ dhb,
            delta_hat(ns, q * a + b),
            exact,
            tol,
        )
    )
    checks.append(
        _matrix_check(
            "composite conjugation, right form: "
            "delta-hat(a) delta-check(q) delta-hat(b) delta-check(1/q) "
            "= delta-hat(a + b/q)",
            dh @ dc @ dhb @ delta_check(ns, q_inv),
            delta_hat(ns, a + b * q_inv),
            exact,
            tol,
        )
    )
    return checks


def _normalized_power_norm(m: Matrix, r: int) -> float:
    base = max(m.inf_norm(), 1.0)
    return m.power(r).inf_norm() / base ** r


def _suite_nilpotency(n, seed, backend, tol) -> List[dict]:
    rng = _rng(seed, "nilpotency")
    exact = backend == "exact"
    ns = draw_nodes(n, rng, backend)
    a = _rational_nonzero(rng) if exact else _float_step(rng)
    q = _rational_ratio(rng) if exact else _float_ratio(rng)
    # The top-degree monomial witnesses the index: N-1 divided differences
    # send samples of z^(N-1) to a known nonzero constant vector.
    hat_const: Scalar = 1
    check_const: Scalar = 1
    for j in range(1, n):
        hat_const = hat_const * j
        check_const = check_const * exact_div(scalar_pow(q, j) - 1, q - 1)
    checks = []
    for name, m, const in (
        ("nabla-hat", nabla_hat(ns, a), hat_const),
        ("nabla-check", nabla_check(ns, q), check_const),
    ):
        if exact:
            vanished = m.power(n).is_zero()
            checks.append(
                {
                    "label": f"{name}^N = 0 (N = {n})",
                    "residual": 0.0 if vanished else 1.0,
                    "pass": vanished,
                }
            )
        else:
            residual = _normalized_power_norm(m, n)
            checks.append(
                {
                    "label": f"{name}^N = 0 (N = {n})",
                    "residual": residual,
                    "pass": residual <= tol,
                }
            )
        if n > 1:
            top = [scalar_pow(z, n - 1) for z in ns.nodes]
            image = m.power(n - 1).apply(top)
            want = [const] * n
            label = (
                f"{name}^(N-1) sends z^(N-1) samples to a nonzero constant"
            )
            if exact:
                alive = image == want and const != 0
                checks.append(
                    {
                        "label": label,
                        "residual": 0.0 if alive else 1.0,
                        "pass": alive,
                    }
                )
            else:
                checks.append(
                    _vector_check(label, image, want, exact, tol)
                )
    return checks


def _suite_appendix_b(n, seed, backend, tol) -> List[dict]:
    from .linalg import determinant
    from .opcompile import check_eigenpair

    rng = _rng(seed, "appendix-b")
    exact = backend == "exact"
    ns = draw_nodes(n, rng, backend)
    q = _rational_ratio(rng) if exact else _float_ratio(rng)
    dc = delta_check(ns, q)
    checks = []

    det = determinant(dc)
    det_want = scalar_pow(q, n * (n - 1) // 2)
    if exact:
        ok = det == det_want
        res = 0.0 if ok else 1.0
    else:
        res = magnitude(det - det_want) / max(1.0, magnitude(det_want))
        ok = res <= tol
    checks.append(
        {
            "label": "det delta-check(q) = q^(N(N-1)/2)",
            "residual": res,
            "pass": ok,
            "value": scalar_to_json(det),
        }
    )

    tr = dc.trace()
    tr_want = exact_div(1 - scalar_pow(q, n), 1 - q)
    if exact:
        ok = tr == tr_want
        res = 0.0 if ok else 1.0
    else:
        res = magnitude(tr - tr_want) / max(1.0, magnitude(tr_want))
        ok = res <= tol
    checks.append(
        {
            "label": "trace delta-check(q) = (1 - q^N)/(1 - q)",
            "residual": res,
            "pass": ok,
            "value": scalar_to_json(tr),
        }
    )

    for k in range(n):
        rep = check_eigenpair(
            dc,
            scalar_pow(q, k),
            [scalar_pow(z, k) for z in ns.nodes],
            tol=tol,
            label=f"monomial samples of degree {k}",
        )
        checks.append(
            {
                "label": f"delta-check(q) has eigenvalue q^{k} "
                f"on samples of z^{k}",
                "residual": rep.max_residual,
                "pass": rep.passed,
            }
        )
    return checks


# -- spectral claim suites -------------------------------------------------------


def _claim_check(matrix, claim, tol) -> dict:
    rep = verify_claim(matrix, claim, tol=tol)
    residual = max(rep.eigen_residuals) if rep.eigen_residuals else 0.0
    return {
        "label": f"claim {rep.proposition}: eigensystem of order {rep.n}",
        "residual": residual,
        "pass": rep.passed,
        "report": claim_report_to_json(rep),
    }


def _suite_prop(prop: str, n, seed, backend, tol, config) -> List[dict]:
    rng = _rng(seed, prop)
    if prop == "prop-3.1":
        ns = draw_nodes(n, rng, backend)
        matrix, claim = build_K_hat(ns, config.get("a", 1))
    elif prop == "prop-3.2":
        ns = draw_nodes(n, rng, backend)
        matrix, claim = build_F_hat(
            ns, config.get("alpha", 2), config.get("c", 3)
        )
    elif prop == "prop-3.7":
        ns = draw_nodes(n, rng, backend)
        matrix, claim = build_K_check(ns, config.get("q", 2))
    elif prop == "prop-3.3":
        params = config.get("wilson", DEFAULT_WILSON)
        ns = draw_nodes(n, rng, backend, params)
        matrix, claim = build_W_hat(ns, params)
    elif prop == "prop-3.5":
        params = config.get("racah", DEFAULT_RACAH)
        ns = draw_nodes(n, rng, backend, params)
        matrix, claim = build_R_hat(ns, params)
    elif prop == "prop-3.8":
        params = config.get("askey-wilson", DEFAULT_ASKEY_WILSON)
        ns = draw_nodes(n, rng, backend, params)
        matrix, claim = build_Y_check(ns, params)
    elif prop == "prop-3.4":
        matrix, claim = build_W_bar(config.get("wilson", DEFAULT_WILSON), n)
    elif prop == "prop-3.6":
        matrix, claim = build_R_bar(config.get("racah", DEFAULT_RACAH), n)
    elif prop == "prop-3.9":
        matrix, claim = build_Y_bar(
            config.get("askey-wilson", DEFAULT_ASKEY_WILSON), n
        )
    else:
        raise ValueError(f"unknown suite: {prop!r}")
    return [_claim_check(matrix, claim, tol)]


def run_suite(
    name: str,
    n: int = 5,
    seed: int = 0,
    backend: str = "exact",
    tol: float = 1e-9,
    config: Optional[dict] = None,
) -> dict:
    """Run one named suite (or ``all``) and return its report dict."""
    if name not in SUITE_NAMES:
        raise ValueError(f"unknown suite: {name!r}")
    if backend not in ("exact", "f64"):
        raise ValueError(f"unknown backend: {backend!r}")
    if n < 1:
        raise ValueError("suite size must be at least 1")
    config = config or {}
    zero_grid_tol = max(tol, 1e-6)
    checks: List[dict] = []
    names = SUITE_NAMES[:-1] if name == "all" else (name,)
    for item in names:
        if item == "identities":
            checks.extend(_suite_identities(n, seed, backend, tol))
        elif item == "nilpotency":
            ntol = tol if backend == "exact" else max(tol, 1e-7)
            checks.extend(_suite_nilpotency(n, seed, backend, ntol))
        elif item == "appendix-b":
            checks.extend(_suite_appendix_b(n, seed, backend, tol))
        elif item in ("prop-3.4", "prop-3.6", "prop-3.9"):
            checks.extend(
                _suite_prop(item, n, seed, backend, zero_grid_tol, config)
            )
        else:
            checks.extend(_suite_prop(item, n, seed, backend, tol, config))
    return {
        "suite": name,
        "n": n,
        "seed": seed,
        "backend": backend,
        "tolerance": tol,
        "checks": checks,
        "pass": all(c["pass"] for c in checks),
    }
