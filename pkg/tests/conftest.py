"""Shared fixtures and helpers for the specmat test suite."""

from fractions import Fraction
from random import Random

import pytest
from hypothesis import HealthCheck, settings

from specmat import make_node_set

settings.register_profile(
    "specmat",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("specmat")


@pytest.fixture
def unit_pair():
    """Nodes (0, 1): the smallest grid with handy closed forms."""
    return make_node_set([0, 1])


@pytest.fixture
def geometric_pair():
    """Nodes (1, 2): nonzero, so q-dilation operators are defined."""
    return make_node_set([1, 2])


def rational_grid(n, seed=0):
    """Deterministic distinct rational nodes for exact-backend tests."""
    rng = Random(seed)
    nodes = []
    seen = set()
    while len(nodes) < n:
        z = Fraction(rng.randint(-24, 24), rng.randint(1, 8))
        if z != 0 and z not in seen:
            seen.add(z)
            nodes.append(z)
    return make_node_set(nodes)


def entries(matrix):
    """Matrix entries as a tuple of row tuples, for literal comparisons."""
    return tuple(tuple(row) for row in matrix.rows())
