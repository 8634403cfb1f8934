"""Node sets, variable maps, and Lagrangian interpolation.

A degree-<N polynomial is determined by its values at N pairwise distinct
nodes z_1..z_N.  This module validates node sets, evaluates the Lagrange
basis

    p^(n)(z) = prod_{l != n} (z - z_l) / (z_n - z_l),

and builds the companion matrices used throughout the package:

* ``matrix_Z``: diag[z_n];
* ``matrix_D``: D_nn = sum_{l != n} 1/(z_n - z_l), D_nm = 1/(z_n - z_m);
* ``matrix_V``: diag[prod_{l != n} (z_n - z_l)];
* ``vector_w``: w_n = prod_{l != n} 1/(z_n - z_l);

with the property that V D V^{-1} maps node samples of a degree-<N
polynomial to node samples of its derivative (``derivative_samples``).

A node set may carry a variable map zeta(z).  In that case the functions
being sampled are polynomials of degree < N in zeta rather than in z, and
the mapped values zeta(z_n) must themselves be pairwise distinct
(``mapped_basis`` is the Lagrange basis in the zeta variable).

Empty products evaluate to 1 and empty sums to 0, which makes every formula
valid at N = 1.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from random import Random
from typing import Callable, Optional, Sequence

from .errors import DegenerateMap, DuplicateNodes
from .linalg import Matrix, diagonal
from .scalars import (
    GaussianRational,
    Scalar,
    ensure_finite,
    exact_div,
    is_exact,
    magnitude,
)

__all__ = [
    "VariableMap",
    "IDENTITY_MAP",
    "neg_square_map",
    "racah_map",
    "symmetric_inverse_map",
    "NodeSet",
    "make_node_set",
    "lagrange_basis",
    "mapped_basis",
    "interpolate",
    "matrix_Z",
    "matrix_D",
    "matrix_V",
    "vector_w",
    "derivative_samples",
    "random_complex_nodes",
    "random_rational_nodes",
]


@dataclass(frozen=True)
class VariableMap:
    """Change of variable zeta(z) in which sampled polynomials live.

    Kinds:
      * ``identity``:           zeta = z
      * ``neg-square``:         zeta = -z^2
      * ``racah``:              zeta = z (z + gamma + delta + 1)
      * ``symmetric-inverse``:  zeta = (z + 1/z) / 2
    """

    kind: str
    gamma: Optional[Scalar] = None
    delta: Optional[Scalar] = None

    def __post_init__(self):
        if self.kind not in (
            "identity",
            "neg-square",
            "racah",
            "symmetric-inverse",
        ):
            raise ValueError(f"unknown variable map kind: {self.kind!r}")
        if self.kind == "racah" and (self.gamma is None or self.delta is None):
            raise ValueError("racah map requires gamma and delta")

    @property
    def is_identity(self) -> bool:
        return self.kind == "identity"

    def __call__(self, z: Scalar) -> Scalar:
        if isinstance(z, int):
            z = Fraction(z)
        if self.kind == "identity":
            return z
        if self.kind == "neg-square":
            return -(z * z)
        if self.kind == "racah":
            return z * (z + self.gamma + self.delta + 1)
        return (z + 1 / z) / 2


IDENTITY_MAP = VariableMap("identity")


def neg_square_map() -> VariableMap:
    return VariableMap("neg-square")


def racah_map(gamma: Scalar, delta: Scalar) -> VariableMap:
    return VariableMap("racah", gamma=gamma, delta=delta)


def symmetric_inverse_map() -> VariableMap:
    return VariableMap("symmetric-inverse")


class NodeSet:
    """Validated, immutable collection of interpolation nodes.

    Use :func:`make_node_set`; the constructor performs no checks.
    """

    __slots__ = ("nodes", "variable_map", "eps", "zeta")

    def __init__(self, nodes, variable_map, eps, zeta):
        self.nodes = tuple(nodes)
        self.variable_map = variable_map
        self.eps = eps
        self.zeta = tuple(zeta)

    @property
    def n(self) -> int:
        return len(self.nodes)

    def is_exact(self) -> bool:
        return all(is_exact(z) for z in self.nodes)

    def with_map(self, variable_map: VariableMap) -> "NodeSet":
        """Same nodes, different variable map (revalidated)."""
        return make_node_set(self.nodes, variable_map, self.eps)

    def __repr__(self):
        return (
            f"NodeSet(n={self.n}, map={self.variable_map.kind!r}, "
            f"nodes={self.nodes!r})"
        )


def _pairwise_distinct(values: Sequence[Scalar], eps: float) -> Optional[tuple]:
    """Return an offending pair (i, j) if two values collide, else None."""
    n = len(values)
    exact = all(is_exact(v) for v in values)
    if exact:
        for i in range(n):
            for j in range(i + 1, n):
                if values[i] == values[j]:
                    return (i, j)
        return None
    scale = max(1.0, max(magnitude(v) for v in values))
    for i in range(n):
        for j in range(i + 1, n):
            if magnitude(values[i] - values[j]) <= eps * scale:
                return (i, j)
    return None


def make_node_set(
    nodes: Sequence[Scalar],
    variable_map: VariableMap = IDENTITY_MAP,
    eps: float = 1e-9,
) -> NodeSet:
    """Validate nodes (and their mapped values) and build a NodeSet.

    Float nodes must be pairwise separated by more than
    ``eps * max(1, max |z_k|)``; exact nodes must differ exactly.  When the
    map is not the identity the mapped values must satisfy the same
    distinctness requirement, otherwise the Lagrange denominators in the
    mapped variable vanish.
    """
    nodes = tuple(Fraction(z) if isinstance(z, int) else z for z in nodes)
    if not nodes:
        raise ValueError("node list must be nonempty")
    for z in nodes:
        ensure_finite(z, "node")
    clash = _pairwise_distinct(nodes, eps)
    if clash is not None:
        i, j = clash
        raise DuplicateNodes(
            f"nodes {i + 1} and {j + 1} coincide: {nodes[i]!r}, {nodes[j]!r}"
        )
    zeta = tuple(variable_map(z) for z in nodes)
    if not variable_map.is_identity:
        clash = _pairwise_distinct(zeta, eps)
        if clash is not None:
            i, j = clash
            raise DegenerateMap(
                f"mapped values of nodes {i + 1} and {j + 1} coincide: "
                f"zeta={zeta[i]!r}"
            )
    return NodeSet(nodes, variable_map, eps, zeta)


# -- Lagrange basis and interpolation ---------------------------------------


def _basis_value(points: Sequence[Scalar], m0: int, x: Scalar) -> Scalar:
    """prod_{l != m0} (x - points[l]) / (points[m0] - points[l]), 0-based."""
    num: Scalar = 1
    den: Scalar = 1
    pm = points[m0]
    for l, pl in enumerate(points):
        if l == m0:
            continue
        num = num * (x - pl)
        den = den * (pm - pl)
    return exact_div(num, den)


def lagrange_basis(ns: NodeSet, n: int, z: Scalar) -> Scalar:
    """Value of the n-th Lagrange basis polynomial at z (n is 1-based)."""
    if not 1 <= n <= ns.n:
        raise ValueError(f"basis index {n} out of range 1..{ns.n}")
    return _basis_value(ns.nodes, n - 1, z)


def mapped_basis(ns: NodeSet, m: int, zeta_value: Scalar) -> Scalar:
    """Lagrange basis in the mapped variable, evaluated at zeta_value.

    With the identity map this is ``lagrange_basis`` evaluated at
    ``z = zeta_value``.  m is 1-based.
    """
    if not 1 <= m <= ns.n:
        raise ValueError(f"basis index {m} out of range 1..{ns.n}")
    return _basis_value(ns.zeta, m - 1, zeta_value)


def interpolate(ns: NodeSet, samples: Sequence[Scalar], z: Scalar) -> Scalar:
    """Value at z of the unique degree-<N interpolant through the samples.

    With a non-identity map the interpolation runs in the mapped variable
    and z is understood as a zeta value.
    """
    if len(samples) != ns.n:
        raise ValueError("sample count does not match node count")
    points = ns.zeta
    acc: Scalar = 0
    for m0, f in enumerate(samples):
        acc = acc + f * _basis_value(points, m0, z)
    return acc


# -- companion matrices ------------------------------------------------------


def matrix_Z(ns: NodeSet) -> Matrix:
    return diagonal(ns.nodes)


def matrix_D(ns: NodeSet) -> Matrix:
    n = ns.n
    z = ns.nodes
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                acc: Scalar = 0
                for l in range(n):
                    if l != i:
                        acc = acc + 1 / (z[i] - z[l])
                row.append(acc)
            else:
                row.append(1 / (z[i] - z[j]))
        rows.append(row)
    return Matrix(rows)


def _node_products(ns: NodeSet) -> list:
    z = ns.nodes
    out = []
    for i in range(ns.n):
        p: Scalar = 1
        for l in range(ns.n):
            if l != i:
                p = p * (z[i] - z[l])
        out.append(p)
    return out


def matrix_V(ns: NodeSet) -> Matrix:
    return diagonal(_node_products(ns))


def vector_w(ns: NodeSet) -> list:
    return [1 / p for p in _node_products(ns)]


def derivative_samples(
    ns: NodeSet, samples: Sequence[Scalar], r: int
) -> list:
    """Samples of the r-th derivative via (V D V^{-1})^r applied r times."""
    if r < 0:
        raise ValueError("derivative order must be nonnegative")
    if len(samples) != ns.n:
        raise ValueError("sample count does not match node count")
    v = _node_products(ns)
    d = matrix_D(ns)
    n = ns.n
    m = Matrix(
        [
            [exact_div(v[i] * d.entry(i, j), v[j]) for j in range(n)]
            for i in range(n)
        ]
    )
    out = list(samples)
    for _ in range(r):
        out = m.apply(out)
    return out


# -- random node generation ---------------------------------------------------


def random_complex_nodes(
    n: int,
    rng: Random,
    variable_map: VariableMap = IDENTITY_MAP,
    avoid: Optional[Callable[[complex], bool]] = None,
    inner: float = 0.5,
    outer: float = 2.0,
    min_separation: float = 0.25,
    zeta_separation: float = 0.05,
    eps: float = 1e-9,
    max_attempts: int = 20000,
) -> NodeSet:
    """Draw n float nodes uniformly from an annulus, with rejection.

    Candidates are rejected when they fall within ``min_separation`` of an
    accepted node, when their mapped values fall within ``zeta_separation``
    of an accepted mapped value, or when ``avoid`` returns True (used for
    coefficient-function poles).  Deterministic for a given rng state.
    """
    nodes: list = []
    zetas: list = []
    attempts = 0
    while len(nodes) < n:
        attempts += 1
        if attempts > max_attempts:
            raise RuntimeError(
                "could not place nodes; relax separation or avoid sets"
            )
        radius = rng.uniform(inner, outer)
        angle = rng.uniform(0.0, 2.0 * cmath.pi)
        z = radius * cmath.exp(1j * angle)
        if avoid is not None and avoid(z):
            continue
        if any(abs(z - other) < min_separation for other in nodes):
            continue
        zeta = variable_map(z)
        if not variable_map.is_identity and any(
            abs(zeta - other) < zeta_separation for other in zetas
        ):
            continue
        nodes.append(z)
        zetas.append(zeta)
    return make_node_set(nodes, variable_map, eps)


def _random_fraction(rng: Random, num_bound: int, den_bound: int) -> Fraction:
    return Fraction(
        rng.randint(-num_bound, num_bound), rng.randint(1, den_bound)
    )


def random_rational_nodes(
    n: int,
    rng: Random,
    variable_map: VariableMap = IDENTITY_MAP,
    avoid: Optional[Callable[[GaussianRational], bool]] = None,
    with_imaginary: bool = False,
    num_bound: int = 24,
    den_bound: int = 8,
    max_attempts: int = 20000,
) -> NodeSet:
    """Draw n exact nodes with bounded random rational parts.

    Zero is always rejected (several constructions divide by a node) and
    exact duplicates or mapped-value collisions are re-drawn.
    """
    nodes: list = []
    zetas: list = []
    attempts = 0
    while len(nodes) < n:
        attempts += 1
        if attempts > max_attempts:
            raise RuntimeError("could not place rational nodes")
        re = _random_fraction(rng, num_bound, den_bound)
        im = (
            _random_fraction(rng, num_bound, den_bound)
            if with_imaginary
            else Fraction(0)
        )
        z = GaussianRational(re, im)
        if not z:
            continue
        if avoid is not None and avoid(z):
            continue
        if any(z == other for other in nodes):
            continue
        zeta = variable_map(z)
        if not variable_map.is_identity and any(
            zeta == other for other in zetas
        ):
            continue
        nodes.append(z)
        zetas.append(zeta)
    return make_node_set(nodes, variable_map)
