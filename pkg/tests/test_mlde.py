from dataclasses import replace
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from conftest import sparse_terms
from qverify.characters import cp_char
from qverify.modforms import eisenstein, eta, eta_power
from qverify.mlde import (
    GAMMA1,
    GAMMA2,
    Ambiguous,
    E,
    Inconsistent,
    MLDEOperator,
    ModFormExpr,
    Th,
    Unique,
    UnsupportedN,
    bareiss_solve,
    basis_monomials,
    builtin_mlde,
    default_trunc,
    dq_iter,
    find_mlde,
    mlde_apply,
    same_operator,
    serre_derivative,
    verify_builtin,
)
from qverify.qseries import EXACT, InsufficientAccuracy, QSeries


def transpose_thetas(op):
    """Swap Theta_{r,s} <-> Theta_{s,r} in every coefficient."""
    coeffs = tuple(
        ModFormExpr(f.group, f.weight, tuple(
            (c, tuple(Th(g.params[1], g.params[0]) for g in mono)) for c, mono in f.terms
        ))
        for f in op.coeffs
    )
    return replace(op, coeffs=coeffs)


def corrected_n5():
    op = builtin_mlde(5)
    coeffs = list(op.coeffs)
    coeffs[2] = ModFormExpr(GAMMA1, 6, ((F(-28812, 5), (E(6),)),))
    return replace(op, coeffs=tuple(coeffs))


# Serre derivative ------------------------------------------------------------


def test_serre_weight_zero_is_q_derivative():
    f = QSeries.from_exponents({1: 1, 2: 3}, 10)
    assert serre_derivative(f, 0, 10) == f.q_derivative().truncate(10)


def test_serre_of_constant():
    # d_(k) 1 = k E_2
    assert serre_derivative(QSeries.constant(1), 4, 8) == eisenstein(2, 8).scale(4)


def test_serre_kills_eta():
    # q d/dq eta = -E_2 eta / 2 in this normalization of E_2
    e = eta(1, 12)
    assert serre_derivative(e, F(1, 2), 12).is_zero


def test_serre_e4_is_multiple_of_e6():
    e4, e6 = eisenstein(4, 12), eisenstein(6, 12)
    d = serre_derivative(e4, 4, 12)
    ratio = d[0] / e6[0]
    assert d == e6.scale(ratio)


def test_serre_needs_accuracy():
    with pytest.raises(InsufficientAccuracy):
        serre_derivative(QSeries.zero(3), 0, 5)


def test_dq_iter():
    f = QSeries.from_exponents({1: 1}, 10)
    assert dq_iter(f, 0, 10) == f.truncate(10)
    two = serre_derivative(serre_derivative(f, 0, 10), 2, 10)
    assert dq_iter(f, 2, 10) == two


@st.composite
def poly_pair(draw):
    L, a = draw(sparse_terms(L=1, span=6, max_terms=4))
    _, b = draw(sparse_terms(L=1, span=6, max_terms=4))
    return QSeries(a, 1, EXACT), QSeries(b, 1, EXACT)


@given(poly_pair(), st.sampled_from([0, 2, 4]), st.sampled_from([0, 2, 4]))
def test_serre_leibniz(pair, a, b):
    f, g = pair
    N = 6
    lhs = serre_derivative(f * g, a + b, N)
    rhs = (serre_derivative(f, a, N) * g + f * serre_derivative(g, b, N)).truncate(N)
    assert lhs == rhs


# operators ----------------------------------------------------------------------


def test_operator_validation():
    with pytest.raises(ValueError):
        MLDEOperator(1, GAMMA1, ())
    with pytest.raises(ValueError):
        MLDEOperator(1, GAMMA1, (ModFormExpr(GAMMA1, 4, ((1, (E(4),)),)),))
    with pytest.raises(ValueError):
        ModFormExpr(GAMMA1, 6, ((1, (E(4),)),))
    with pytest.raises(ValueError):
        ModFormExpr("gamma0", 2, ())


def test_basis_monomials():
    assert basis_monomials(GAMMA1, 2) == []
    assert basis_monomials(GAMMA1, 12) == [(E(4), E(4), E(4)), (E(6), E(6))]
    assert [m[0].params for m in basis_monomials(GAMMA2, 4)] == [(2, 0), (1, 1), (0, 2)]


def test_default_trunc_values():
    assert [default_trunc(n) for n in (2, 3, 4, 5)] == [
        F(121, 8), F(185, 12), F(251, 16), F(319, 20)
    ]


@pytest.mark.parametrize("n", [2, 3])
def test_builtin_annihilates(n):
    rep = verify_builtin(n)
    assert rep.annihilates and rep.found is None


def test_builtin_n4_fails_and_transpose_works():
    rep = verify_builtin(4)
    assert not rep.annihilates
    assert isinstance(rep.found, Unique)
    fixed = transpose_thetas(builtin_mlde(4))
    assert same_operator(rep.found.operator, fixed, 10)
    N = default_trunc(4)
    assert mlde_apply(fixed, cp_char(4, N), N).is_zero


def test_builtin_n5_fails_and_e6_scaled_operator_works():
    rep = verify_builtin(5)
    assert not rep.annihilates
    assert isinstance(rep.found, Unique)
    fixed = corrected_n5()
    assert same_operator(rep.found.operator, fixed, 10)
    N = default_trunc(5)
    assert mlde_apply(fixed, cp_char(5, N), N).is_zero


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_search_is_stable_under_more_terms(n):
    op = builtin_mlde(n)
    N = default_trunc(n)
    a = find_mlde(cp_char(n, N), op.order, op.group, N)
    b = find_mlde(cp_char(n, N + 10), op.order, op.group, N + 10)
    assert isinstance(a, Unique) and isinstance(b, Unique)
    assert same_operator(a.operator, b.operator, 10)


@pytest.mark.parametrize("n,orders", [(3, [1]), (4, [1, 2]), (5, [4, 5])])
def test_lower_orders_are_inconsistent(n, orders):
    op = builtin_mlde(n)
    N = default_trunc(n)
    ch = cp_char(n, N)
    for k in orders:
        assert isinstance(find_mlde(ch, k, op.group, N), Inconsistent)


def test_wrong_series_is_not_annihilated():
    op = builtin_mlde(3)
    assert not mlde_apply(op, eta(1, 10), 10).is_zero


def test_find_mlde_for_theta_function():
    # theta3^4 / eta^4 has weight zero and a first order equation over gamma2
    t = (Th(0, 1).series(14) * eta_power(1, -4, 14)).truncate(12)
    res = find_mlde(t, 1, GAMMA2, 12)
    assert isinstance(res, Unique)
    expected = ModFormExpr(GAMMA2, 2, ((F(-1, 3), (Th(1, 0),)), (F(1, 6), (Th(0, 1),))))
    assert res.operator.coeffs[0].series(12) == expected.series(12)
    assert mlde_apply(res.operator, t, 12).is_zero
    # weight -4 instead: no first order equation
    bad = (Th(0, 1).series(14) * eta_power(1, -12, 14)).truncate(12)
    assert isinstance(find_mlde(bad, 1, GAMMA2, 12), Inconsistent)


def test_find_mlde_needs_enough_equations():
    with pytest.raises(InsufficientAccuracy):
        find_mlde(QSeries.from_exponents({0: 1}, 1), 2, GAMMA2, 1)


def test_unsupported_n():
    for n in (1, 6):
        with pytest.raises(UnsupportedN):
            builtin_mlde(n)


def test_bareiss_outcomes():
    assert bareiss_solve([[2, 1, 5], [1, -1, 1]], 2) == ("unique", [2, 1])
    assert bareiss_solve([[1, 1, 1], [1, 1, 2]], 2) == ("inconsistent", None)
    assert bareiss_solve([[1, 1, 1], [2, 2, 2]], 2) == ("ambiguous", 1)
    assert isinstance(Ambiguous(1, 2, 2), Ambiguous)
