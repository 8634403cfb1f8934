"""Exception hierarchy for the specmat library.

Every error raised by the library derives from SpecmatError so callers can
catch one type.  The leaf classes mirror the failure modes of the individual
constructors: bad node sets, degenerate parameter choices, poles hit by
evaluation points, and root-finder breakdowns.
"""

__all__ = [
    "SpecmatError",
    "DuplicateNodes",
    "DegenerateMap",
    "ZeroStep",
    "UnitQ",
    "ZeroNode",
    "CoefficientPoleAtNode",
    "DenominatorPole",
    "PoleAtArgument",
    "PoleAtNode",
    "DegenerateLeadingCoefficient",
    "ZeroVector",
    "BackendMismatch",
    "NonConvergence",
    "MultipleRoot",
    "BranchFailure",
    "DegenerateZeros",
]


class SpecmatError(Exception):
    """Base class for all library errors."""


class DuplicateNodes(SpecmatError):
    """Two interpolation nodes coincide (exactly, or within tolerance)."""


class DegenerateMap(SpecmatError):
    """A variable map sends two distinct nodes to the same value."""


class ZeroStep(SpecmatError):
    """An additive difference operator was requested with step a = 0."""


class UnitQ(SpecmatError):
    """A multiplicative difference operator was requested with q = 1."""


class ZeroNode(SpecmatError):
    """An operation that divides by a node (or mapped node) hit zero."""


class CoefficientPoleAtNode(SpecmatError):
    """An operator coefficient has a denominator zero at some node."""


class DenominatorPole(SpecmatError):
    """A terminating series has a vanishing denominator factor in range."""


class PoleAtArgument(SpecmatError):
    """A coefficient function was evaluated at one of its poles."""


class PoleAtNode(SpecmatError):
    """A node of a matrix construction sits on (or too near) a pole."""


class DegenerateLeadingCoefficient(SpecmatError):
    """A polynomial expansion came out with vanishing leading coefficient."""


class ZeroVector(SpecmatError):
    """An eigenvector check received the zero vector."""


class BackendMismatch(SpecmatError):
    """An exact-only routine received floating-point data (or vice versa)."""


class NonConvergence(SpecmatError):
    """The simultaneous root iteration did not converge."""


class MultipleRoot(SpecmatError):
    """Two computed polynomial roots coincide within tolerance."""


class BranchFailure(SpecmatError):
    """A variable-map inversion hit a branch point."""


class DegenerateZeros(SpecmatError):
    """A zero grid is unusable (coincident points or a pole on the grid)."""
