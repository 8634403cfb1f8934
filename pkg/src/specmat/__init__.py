"""Exact matrix representations of shift and difference operators.

Samples of a degree-<N polynomial at N distinct nodes determine it, so any
operator sending polynomials to polynomials of no higher degree acts on the
samples as an N x N matrix.  This package builds those matrices exactly
(additive and multiplicative shifts, divided differences, derivatives),
compiles rational-coefficient operator expressions to matrices, realizes
nine difference matrices whose spectra are known in closed form, locates
the polynomial zeros underlying their grid-collapsed variants, and verifies
every claimed identity on either an exact rational backend or floats.

The building blocks:

* :mod:`specmat.scalars`     exact Gaussian-rational scalars and helpers;
* :mod:`specmat.linalg`      dense matrices, determinants, char polys;
* :mod:`specmat.foundation`  node sets, variable maps, Lagrange bases;
* :mod:`specmat.shift`       shift and divided-difference matrices;
* :mod:`specmat.opcompile`   operator expressions compiled to matrices;
* :mod:`specmat.askey`       hypergeometric families and coefficients;
* :mod:`specmat.spectra`     the nine spectral-claim builders;
* :mod:`specmat.zeros`       polynomial zero finding and zero identities;
* :mod:`specmat.suites`      seeded verification suites;
* :mod:`specmat.cli`         the ``specmat`` command-line tool.
"""

from .askey import (
    FamilyParams,
    askey_wilson_eval,
    aw_A,
    difference_equation_residual,
    family_eigenvalue,
    family_eval,
    family_map,
    monomial_coefficients,
    racah_C,
    racah_D,
    racah_eval,
    wilson_B,
    wilson_eval,
)
from .errors import (
    BackendMismatch,
    CoefficientPoleAtNode,
    DegenerateLeadingCoefficient,
    DegenerateMap,
    DegenerateZeros,
    DenominatorPole,
    DuplicateNodes,
    MultipleRoot,
    NonConvergence,
    PoleAtArgument,
    PoleAtNode,
    SpecmatError,
    UnitQ,
    ZeroNode,
    ZeroStep,
    ZeroVector,
)
from .foundation import (
    IDENTITY_MAP,
    NodeSet,
    VariableMap,
    derivative_samples,
    interpolate,
    lagrange_basis,
    make_node_set,
    mapped_basis,
    matrix_D,
    matrix_V,
    matrix_Z,
    neg_square_map,
    racah_map,
    random_complex_nodes,
    random_rational_nodes,
    symmetric_inverse_map,
    vector_w,
)
from .linalg import Matrix, char_poly, determinant, horner, monic_from_roots
from .opcompile import (
    OperatorExpr,
    OperatorTerm,
    RationalFunction,
    VerificationReport,
    check_eigenpair,
    check_null,
    check_solution,
    compile_operator,
)
from .scalars import GaussianRational, Scalar
from .shift import (
    ShiftKind,
    delta_check,
    delta_check_mapped,
    delta_hat,
    delta_hat_mapped,
    nabla_check,
    nabla_check_mapped,
    nabla_hat,
    nabla_hat_mapped,
    shift_matrix,
    shift_samples,
)
from .spectra import (
    ClaimReport,
    SpectralClaim,
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
from .suites import SUITE_NAMES, run_suite
from .zeros import (
    ZeroSet,
    degree_one_zero,
    find_polynomial_roots,
    find_zeros,
    lift_to_z,
    partner_preimage,
    verify_zero_identity,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # scalars
    "GaussianRational",
    "Scalar",
    # errors
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
    "DegenerateZeros",
    # linalg
    "Matrix",
    "determinant",
    "char_poly",
    "monic_from_roots",
    "horner",
    # foundation
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
    # shift
    "ShiftKind",
    "delta_hat",
    "delta_check",
    "nabla_hat",
    "nabla_check",
    "delta_hat_mapped",
    "delta_check_mapped",
    "nabla_hat_mapped",
    "nabla_check_mapped",
    "shift_matrix",
    "shift_samples",
    # opcompile
    "RationalFunction",
    "OperatorTerm",
    "OperatorExpr",
    "compile_operator",
    "VerificationReport",
    "check_solution",
    "check_eigenpair",
    "check_null",
    # askey
    "FamilyParams",
    "wilson_eval",
    "racah_eval",
    "askey_wilson_eval",
    "family_eval",
    "monomial_coefficients",
    "wilson_B",
    "racah_C",
    "racah_D",
    "aw_A",
    "family_eigenvalue",
    "family_map",
    "difference_equation_residual",
    # spectra
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
    # zeros
    "ZeroSet",
    "find_polynomial_roots",
    "find_zeros",
    "lift_to_z",
    "partner_preimage",
    "degree_one_zero",
    "verify_zero_identity",
    # suites
    "SUITE_NAMES",
    "run_suite",
]
