import pytest
from hypothesis import given, settings, strategies as st

from oracles import lie_sum_naive, qmzv_naive, sigma
from fractions import Fraction

from qzv.qmzv import (bibracket_sl, intervals, star_from_strict, symmetrized_sum, type_A, type_an,
                      type_an_alt, zeta_g, zeta_g_s, zq_standard, zq_star, zq_strict)



def half_grid(s, N):
    return [s[Fraction(i, 2)] for i in range(2 * N + 2)]


comps = st.lists(st.integers(1, 3), min_size=1, max_size=3)


@given(comps)
@settings(max_examples=25, deadline=None)
def test_star_and_strict_match_naive(a):
    assert list(zq_star(a, 10).coefficient_list(upto=11)) == qmzv_naive(a, 10, "star")
    assert list(zq_strict(a, 10).coefficient_list(upto=11)) == qmzv_naive(a, 10, "strict")


@given(st.lists(st.integers(1, 3), min_size=1, max_size=3).map(lambda a: [a[0] + 1] + a[1:]))
@settings(max_examples=20, deadline=None)
def test_standard_matches_naive(a):
    assert list(zq_standard(a, 10).coefficient_list(upto=11)) == qmzv_naive(a, 10, "standard")


@given(comps)
@settings(max_examples=20, deadline=None)
def test_star_from_strict(a):
    assert star_from_strict(a, 12).agrees(zq_star(a, 12))


def test_divisor_functions():
    assert list(zq_star((1,), 12).coefficient_list(upto=13)) == [0] + [sigma(n, 0) for n in range(1, 13)]
    assert list(zq_star((2,), 12).coefficient_list(upto=13)) == [0] + [sigma(n, 1) for n in range(1, 13)]


@pytest.mark.parametrize("k", range(1, 7))
def test_cyclic_formula(k):
    lhs = zq_star((2,) + (1,) * (k - 1), 30)
    assert lhs.agrees(zq_star((k + 1,), 30).scale(k) - zq_star((k,), 30).scale(k - 1))


def test_errors():
    with pytest.raises(ValueError):
        zq_star((), 5)
    with pytest.raises(ValueError):
        zq_standard((1, 2), 5)
    with pytest.raises(ValueError):
        type_an(2, 2, 5)


def test_type_A_roots():
    r = type_A(2)
    assert r.roots == ((1, 0), (0, 1), (1, 1))
    assert intervals(2) == [(1, 1), (2, 2), (1, 2)]


@pytest.mark.parametrize("kvec", [(1, 1, 1), (2, 1, 3), (2, 2, 2)])
def test_zeta_g_matches_naive(kvec):
    roots = type_A(2).roots
    got = zeta_g(type_A(2), kvec, 6)
    assert half_grid(got, 6) == lie_sum_naive(roots, kvec, (0, 0, 0), 6)


def test_zeta_g_s_matches_naive():
    roots = type_A(2).roots
    got = zeta_g_s(type_A(2), 2, 2, 6)
    assert half_grid(got, 6) == lie_sum_naive(roots, (2, 2, 2), (2, 2, 2), 6)


def test_sl2_reduces_to_depth_one():
    assert zeta_g(type_A(1), (2,), 20).agrees(zq_star((2,), 20))


def test_three_forms_of_character_numerator():
    a = type_an(2, 4, 20)
    assert a.agrees(type_an_alt(2, 4, 20))
    assert a.agrees(zeta_g_s(type_A(2), 4, 2, 20))


def test_bibracket_specialises():
    ks = {(1, 1): 2, (2, 2): 2, (1, 2): 2}
    ss = {(1, 1): 3, (2, 2): 3, (1, 2): 3}
    assert bibracket_sl(2, ks, ss, 15).agrees(zeta_g_s(type_A(2), 3, 2, 15))
    with pytest.raises(ValueError):
        bibracket_sl(2, [1, 1], [0, 0, 0], 5)


def test_symmetrized_counts_every_permutation():
    s = symmetrized_sum(type_A(2), (2, 2, 2), 12)
    assert s.agrees(zeta_g(type_A(2), (2, 2, 2), 12).scale(6))
