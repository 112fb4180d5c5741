from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import partitions
from qzv.series import (BiSeries, QSeries, bernoulli, dilate, divisor_sigma, eta, euler_polynomial,
                        euler_product, pochhammer, q_derive, reciprocal_power)

fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def series(draw, denom=None):
    d = denom or draw(st.sampled_from([1, 2, 3]))
    cs = draw(st.lists(fracs, min_size=1, max_size=10))
    off = Fraction(draw(st.integers(-3, 3)), d)
    return QSeries.make(cs, off, len(cs) - 1, d)


@given(series(), series(), series())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    assert (a + b).agrees(b + a)
    assert (a * b).agrees(b * a)
    assert ((a * b) * c).agrees(a * (b * c))
    assert (a * (b + c)).agrees(a * b + a * c)
    assert (a - a).is_zero()


@given(series())
@settings(max_examples=60, deadline=None)
def test_inverse(a):
    if a.is_zero():
        return
    one = a * a.invert()
    assert one.agrees(QSeries.one(20))
    assert (a ** 2).agrees(a * a)
    assert (a ** -1).agrees(a.invert())


@given(series())
@settings(max_examples=60, deadline=None)
def test_json_round_trip(a):
    assert QSeries.from_json(a.to_json()) == a


def test_zero_series_json_keeps_precision():
    z = QSeries.zero_at(Fraction(7, 2))
    back = QSeries.from_json(z.to_json())
    assert back.is_zero() and back.prec == Fraction(7, 2)


def test_partitions_match_dp():
    inv = euler_product(40).invert()
    assert list(inv.coeffs) == partitions(40)


def test_pentagonal_numbers():
    e = euler_product(30)
    nz = {i for i, c in enumerate(e.coeffs) if c}
    assert nz == {0, 1, 2, 5, 7, 12, 15, 22, 26}


def test_inverse_square_of_euler():
    assert list((euler_product(5) ** -2).coeffs) == [1, 2, 5, 10, 20, 36]


def test_offsets_cancel():
    a = QSeries.make([1, 1], Fraction(1, 3), 5, 3)
    b = QSeries.make([1], Fraction(-1, 3), 5, 3)
    assert (a * b).offset == 0


def test_indexing_beyond_precision():
    a = QSeries.make([1, 2, 3], 0, 2)
    assert a[1] == 2 and a[Fraction(1, 2)] == 0
    with pytest.raises(IndexError):
        a[3]


def test_dilate_and_eta():
    e = eta(10, 3)
    assert e.offset == Fraction(1, 8)
    assert dilate(euler_product(10), 2).coeffs[:5] == (1, 0, -1, 0, -1)


def test_q_derive():
    s = QSeries.make([1, 1, 1], 0, 2)
    d = q_derive(s)
    assert d.offset == 1 and d.coeffs == (1, 2)


def test_pochhammer_and_reciprocal():
    assert pochhammer(2, 5).coeffs == (1, -1, -1, 1, 0, 0)
    assert reciprocal_power(2, 2, 6).coeffs == (1, 0, 2, 0, 3, 0, 4)


def test_bernoulli_and_euler_polynomials():
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(4) == Fraction(-1, 30)
    assert bernoulli(12) == Fraction(-691, 2730)
    assert euler_polynomial(4) == (1, 4, 1)
    with pytest.raises(ValueError):
        euler_polynomial(1)


@given(st.integers(1, 200), st.integers(0, 3))
def test_divisor_sigma(n, k):
    assert divisor_sigma(n, k) == sum(d ** k for d in range(1, n + 1) if n % d == 0)


def test_zero_power_rejected():
    with pytest.raises((ValueError, ZeroDivisionError)):
        QSeries.zero(5) ** 0


def test_biseries_derivative():
    one = QSeries.one(5)
    b = BiSeries.make([one, one.scale(2), one.scale(3)], 2, 5)
    assert b.derivative_at_one().coeffs == (8, 0, 0, 0, 0, 0)
