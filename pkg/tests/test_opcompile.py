"""Operator expressions, compilation to matrices, and residual checks."""

from fractions import Fraction

import pytest

from specmat.errors import (
    BackendMismatch,
    CoefficientPoleAtNode,
    DenominatorPole,
    ZeroVector,
)
from specmat.foundation import make_node_set, neg_square_map
from specmat.linalg import char_poly, diagonal
from specmat.opcompile import (
    OperatorExpr,
    OperatorTerm,
    RationalFunction,
    char_poly_exact,
    check_eigenpair,
    check_null,
    check_solution,
    compile_operator,
)
from specmat.shift import ShiftKind, nabla_hat
from specmat.spectra import build_K_hat


def test_rational_function_evaluation():
    f = RationalFunction((0, 1), (1, 1))  # z / (1 + z)
    assert f(1) == Fraction(1, 2)
    assert RationalFunction.poly(2, 0, 3)(2) == 14
    assert RationalFunction.const(Fraction(5, 7))(123) == Fraction(5, 7)


def test_rational_function_pole():
    f = RationalFunction((1,), (1, 1))  # 1 / (1 + z)
    with pytest.raises(DenominatorPole):
        f(-1)


def test_rational_function_validation():
    with pytest.raises(ValueError):
        RationalFunction((), (1,))
    with pytest.raises(ValueError):
        RationalFunction((1,), (0, 0))


def test_expression_rejects_duplicate_powers():
    t = OperatorTerm(1, RationalFunction.const(1))
    with pytest.raises(ValueError):
        OperatorExpr(ShiftKind.additive(1), (t, t))


def test_compiled_translation_composite():
    # z * [f(z+1) - f(z)] realized as diag(z) (delta_hat(1) - I).
    ns = make_node_set([0, 1, 2])
    expr = OperatorExpr(
        ShiftKind.additive(1),
        (
            OperatorTerm(1, RationalFunction.poly(0, 1)),
            OperatorTerm(0, RationalFunction.poly(0, -1)),
        ),
    )
    compiled = compile_operator(expr, ns)
    direct = diagonal(list(ns.nodes)) @ nabla_hat(ns, 1)
    assert compiled == direct
    assert compiled == build_K_hat(ns, 1)[0]


def test_compile_aligns_identity_node_set_with_expression_map():
    vm = neg_square_map()
    expr = OperatorExpr(
        ShiftKind.additive(1),
        (OperatorTerm(0, RationalFunction.const(1)),),
        variable_map=vm,
    )
    plain = make_node_set([1, 2, 3])
    compiled = compile_operator(expr, plain)
    assert compiled == compile_operator(expr, plain.with_map(vm))


def test_compile_rejects_conflicting_maps():
    expr = OperatorExpr(
        ShiftKind.additive(1),
        (OperatorTerm(0, RationalFunction.const(1)),),
        variable_map=neg_square_map(),
    )
    from specmat.foundation import racah_map

    mapped = make_node_set([1, 2, 3], variable_map=racah_map(1, 1))
    with pytest.raises(ValueError):
        compile_operator(expr, mapped)


def test_coefficient_pole_at_node():
    expr = OperatorExpr(
        ShiftKind.additive(1),
        (OperatorTerm(0, RationalFunction((1,), (0, 1))),),  # 1/z
    )
    ns = make_node_set([0, 1])
    with pytest.raises(CoefficientPoleAtNode):
        compile_operator(expr, ns)


def test_check_solution_pass_and_fail():
    m = diagonal([1, 2])
    good = check_solution(m, [1, 1], [1, 2], label="diag action")
    assert good.passed
    assert good.max_residual == 0.0
    bad = check_solution(m, [1, 1], [1, 3], label="diag action")
    assert not bad.passed
    assert bad.max_residual > 0


def test_check_solution_exact_demands_exact_zero():
    m = diagonal([Fraction(1, 3)])
    report = check_solution(m, [3], [1], label="third")
    assert report.passed and report.backend.startswith("exact")


def test_check_eigenpair_relative_residual():
    m = diagonal([2.0, 3.0])
    ok = check_eigenpair(m, 2.0, [1.0, 0.0], label="first axis")
    assert ok.passed
    off = check_eigenpair(m, 2.5, [1.0, 0.0], tol=1e-9, label="wrong value")
    assert not off.passed


def test_check_eigenpair_rejects_zero_vector():
    with pytest.raises(ZeroVector):
        check_eigenpair(diagonal([1.0]), 1.0, [0.0], label="null")


def test_check_null():
    m = diagonal([0, 5])
    assert check_null(m, [1, 0], label="kernel").passed
    assert not check_null(m, [0, 1], label="not kernel").passed


def test_char_poly_exact_matches_linalg():
    m = diagonal([1, 2, 3])
    assert char_poly_exact(m) == char_poly(m)
    with pytest.raises(BackendMismatch):
        char_poly_exact(diagonal([0.5]))


def test_verification_report_str_mentions_label():
    report = check_solution(diagonal([1]), [1], [1], label="identity action")
    assert "identity action" in str(report)
    assert "pass" in str(report).lower()
