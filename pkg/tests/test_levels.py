from fractions import Fraction as F

import pytest

from qverify.levels import (
    CASES,
    E8,
    F4,
    LevelCase,
    PoleEvaluation,
    RationalFunction,
    cleared_polynomial,
    conformal_levels,
    deflate,
    p_eval,
    rational_roots,
    w_charges,
)


def test_f4_levels():
    rep = conformal_levels(F4)
    assert rep.roots == {F(-23, 4), F(-5), F(-9, 2), F(-4)}
    assert all(m == 1 for _, m in rep.multiplicity)
    assert rep.residual_degree == 0


def test_e8_levels():
    rep = conformal_levels(E8)
    assert rep.roots == {F(-119, 5), F(-70, 3), F(-23)}
    assert dict(rep.multiplicity)[F(-23)] == 2
    assert rep.degree == 4 and rep.residual_degree == 0
    assert rep.polynomial[0] == 23 ** 2 * 70 * 119
    assert rep.polynomial[-1] == 15


def test_e8_factorization():
    # (k + 23)^2 (3k + 70)(5k + 119)
    for k in range(-5, 6):
        k = F(k)
        expected = (k + 23) ** 2 * (3 * k + 70) * (5 * k + 119)
        assert p_eval(cleared_polynomial(E8), k) == expected


@pytest.mark.parametrize("case", list(CASES.values()))
def test_roots_equate_the_charges(case):
    for r in conformal_levels(case).roots:
        c_w, c_sug = w_charges(case, r)
        assert c_w == c_sug


def test_e8_charges_at_zero():
    c_w, c_sug = w_charges(E8, 0)
    assert c_w == F(-74940, 30)
    assert c_sug == F(1050, 352) + F(66, 24)


def test_pole_evaluation():
    with pytest.raises(PoleEvaluation):
        w_charges(F4, -9)
    with pytest.raises(PoleEvaluation):
        w_charges(E8, -30)


def test_synthetic_case_with_root_at_zero():
    one = (1,)
    case = LevelCase(
        "toy",
        RationalFunction((0, 1), one),  # c_W = k
        (RationalFunction((0,), one), RationalFunction((0,), one)),
    )
    rep = conformal_levels(case)
    assert rep.roots == {F(0)}


def test_pole_roots_are_discarded():
    # c_W = k(k+1)/(k+1) against 0: the cleared numerator keeps the pole at -1
    case = LevelCase(
        "toy",
        RationalFunction((0, 1, 1), (1, 1)),
        (RationalFunction((0,), (1,)), RationalFunction((0,), (1,))),
    )
    rep = conformal_levels(case)
    assert rep.roots == {F(0)}
    assert rep.discarded_poles == {F(-1)}


def test_rational_roots_and_deflate():
    p = (6, -5, 1)  # (k-2)(k-3)
    roots, rest = rational_roots(p)
    assert sorted(roots) == [2, 3] and len(rest) == 1
    assert deflate(p, F(2)) == (-3, 1)
    roots, rest = rational_roots((1, 0, 1))  # k^2 + 1
    assert roots == [] and rest == (1, 0, 1)
