from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from conftest import qseries, small_rats, sparse_terms
from oracles import partitions_upto, pentagonal_euler
from qverify.qseries import (
    EXACT,
    Equal,
    FirstMismatch,
    InsufficientAccuracy,
    NonpositiveExponentStep,
    QSeries,
    ZeroLeadingTerm,
    compare,
    product_expand,
)


def poly(d, acc=EXACT):
    return QSeries.from_exponents(d, acc)


# add ---------------------------------------------------------------------


def test_add_cancels():
    assert (poly({0: 1, 1: 1}) + poly({0: 1, 1: -1})) == poly({0: 2})
    assert len(poly({0: 1, 1: 1}) + poly({0: 1, 1: -1})) == 1


def test_add_unifies_denominators():
    s = poly({F(1, 2): 1}) + poly({F(1, 3): 1})
    assert s.L == 6
    assert s.terms == {3: 1, 2: 1}


def test_add_accuracy_is_min():
    assert (QSeries.zero(5) + QSeries.zero(3)).acc == 3


# mul ---------------------------------------------------------------------


def test_geometric_series_times_one_minus_q():
    geo = poly({n: 1 for n in range(10)}, 10)
    assert compare(poly({0: 1, 1: -1}) * geo, QSeries.constant(1, 10), 10) == Equal()


def test_square_of_binomial_in_half_powers():
    f = poly({0: 1, F(1, 2): 1})
    assert f * f == poly({0: 1, F(1, 2): 2, 1: 1})


def test_euler_product_times_partition_function():
    p = partitions_upto(20)
    gen = poly({n: p[n] for n in range(21)}, 21)
    assert compare(product_expand(1, 1, 1, 21) * gen, QSeries.constant(1), 21) == Equal()


def test_mul_accuracy_rule():
    f = QSeries.from_exponents({1: 1}, 4)
    g = QSeries.from_exponents({2: 1}, 3)
    assert (f * g).acc == min(4 + 2, 3 + 1)


def test_mul_by_zero_series_uses_its_accuracy_as_order():
    f = QSeries.from_exponents({0: 1}, 4)
    assert (f * QSeries.zero(3)).acc == 3


# invert ------------------------------------------------------------------


def test_invert_one_minus_q():
    g = poly({0: 1, 1: -1}, 12).invert()
    assert g == poly({n: 1 for n in range(12)}, 12)


def test_invert_shifts_order():
    g = poly({1: 1, 2: 1}, 10).invert()
    assert g.order() == -1
    assert g.acc == 10 - 2


def test_invert_euler_product_roundtrip():
    e = product_expand(1, 1, 1, 30)
    assert compare(e * e.invert(), QSeries.constant(1), 30) == Equal()


def test_invert_errors():
    with pytest.raises(ZeroLeadingTerm):
        QSeries.zero(5).invert()
    with pytest.raises(InsufficientAccuracy):
        poly({0: 1}).invert()


# reparameterization and calculus ----------------------------------------


def test_scale_exponents():
    assert poly({0: 1, 1: 1}).scale_exponents(2) == poly({0: 1, 2: 1})
    f = poly({F(1, 3): 2}, 3).scale_exponents(F(3, 2))
    assert f.terms == {1: 2} and f.L == 2 and f.acc == F(9, 2)
    with pytest.raises(ValueError):
        f.scale_exponents(0)


def test_q_derivative():
    assert poly({F(3, 2): 1}).q_derivative() == poly({F(3, 2): F(3, 2)})
    assert poly({0: 7}).q_derivative().is_zero


# compare -----------------------------------------------------------------


def test_compare_examples():
    f = product_expand(1, 1, 1, 8)
    assert compare(f, f, 8) == Equal()
    assert compare(QSeries.constant(1, 6), poly({0: 1, 5: 1}, 6), 6) == FirstMismatch(5, 0, 1)
    with pytest.raises(InsufficientAccuracy):
        compare(QSeries.zero(3), QSeries.zero(10), 5)


# product_expand ----------------------------------------------------------


def test_product_expand_pentagonal():
    f = product_expand(1, 1, 1, 60)
    assert f == poly(pentagonal_euler(59), 60)


def test_product_expand_half_step():
    f = product_expand(F(1, 2), 1, -4, 3)
    assert f[F(1, 2)] == 4
    assert f[1] == 10  # (1 - t)^-4 gives C(5,2) at t^2


def test_product_expand_trivial_and_errors():
    assert product_expand(1, 1, 0, 5) == QSeries.constant(1)
    with pytest.raises(NonpositiveExponentStep):
        product_expand(1, 0, 1, 5)
    with pytest.raises(NonpositiveExponentStep):
        product_expand(0, 1, 1, 5)


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        QSeries.from_exponents({0.5: 1})


# properties ----------------------------------------------------------------


@given(qseries(), qseries(), qseries())
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h


@st.composite
def refinable(draw):
    """A series at accuracy A together with the same series known to A + 10."""
    L, terms = draw(sparse_terms(span=4, extra=10, max_terms=10))
    steps = draw(st.integers(min_value=1, max_value=4 * L))
    coarse = QSeries(terms, L, F(steps, L))
    fine = QSeries(terms, L, F(steps, L) + 10)
    return coarse, fine


@given(refinable(), refinable(), refinable())
def test_accuracy_soundness(a, b, c):
    (f, f2), (g, g2), (h, h2) = a, b, c

    def expr(x, y, z):
        return x * y + z * z - x * z

    lo, hi = expr(f, g, h), expr(f2, g2, h2)
    assert compare(lo, hi, lo.acc) == Equal()


@given(refinable(), refinable())
def test_accuracy_soundness_through_inversion(a, b):
    (f, f2), (g, g2) = a, b
    if f.is_zero or f2.order() != f.order():
        return
    lo, hi = g * f.invert(), g2 * f2.invert()
    assert compare(lo, hi, lo.acc) == Equal()


@given(qseries(unit=True))
def test_invert_roundtrip(f):
    prod = f * f.invert()
    assert compare(prod, QSeries.constant(1), prod.acc) == Equal()
    assert compare(f.invert() * f, QSeries.constant(1), prod.acc) == Equal()


@given(qseries(), qseries(), st.fractions(min_value=F(1, 6), max_value=4, max_denominator=6))
def test_scale_is_ring_homomorphism(f, g, s):
    assert (f * g).scale_exponents(s) == f.scale_exponents(s) * g.scale_exponents(s)
    assert (f + g).scale_exponents(s) == f.scale_exponents(s) + g.scale_exponents(s)


@given(qseries(), st.sampled_from([F(1, 2), 2, 3]), st.sampled_from([F(1, 3), 2]))
def test_scale_composition(f, a, b):
    assert f.scale_exponents(a).scale_exponents(b) == f.scale_exponents(a * b)


@given(qseries(), qseries(), small_rats)
def test_leibniz_rule(f, g, c):
    lhs = (f * g).q_derivative()
    rhs = f.q_derivative() * g + f * g.q_derivative()
    assert lhs == rhs
    assert QSeries.constant(c, 4).q_derivative().is_zero
