import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from opschmidt.core import is_unitary, schmidt_rank
from opschmidt.perm import (
    construct_lemma1,
    construct_lemma2,
    construct_perm_rank,
    count_n,
    cycle_power,
    extend_tuple,
    identity,
    pair_set,
    perm_ranks,
    perm_unitary,
    with_fixed_points,
)


def ident_tuple(n):
    return (identity(n),) * n


def fixed_points(p):
    return sum(i == v for i, v in enumerate(p))


def perm_tuples(n):
    return st.tuples(*[st.permutations(range(n)).map(tuple) for _ in range(n)])


@st.composite
def tuple_pairs(draw, min_n=2, max_n=6):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return draw(perm_tuples(n)), draw(perm_tuples(n))


def test_identity_tuples_n3():
    u = perm_unitary(ident_tuple(3), ident_tuple(3))
    for i, j in np.ndindex(3, 3):
        unit = np.zeros((3, 3))
        unit[j, i] = 1
        assert np.array_equal(u.block(i, j), unit)
    assert count_n(ident_tuple(3), ident_tuple(3)) == 9
    assert schmidt_rank(u) == 9


def test_base_case_rank7():
    c = cycle_power(3, 1)
    t = (identity(3), identity(3), c)
    assert count_n(t, t) == 7
    assert schmidt_rank(perm_unitary(t, t)) == 7


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_count_identity_is_n_squared(n):
    assert count_n(ident_tuple(n), ident_tuple(n)) == n * n


def test_size_mismatch():
    with pytest.raises(ValueError):
        count_n(ident_tuple(2), ident_tuple(3))
    with pytest.raises(ValueError):
        perm_unitary(ident_tuple(2), ((0, 0), (0, 1)))


@settings(max_examples=80, deadline=None)
@given(tuple_pairs(max_n=4))
def test_perm_unitary_is_permutation_matrix(pair):
    u = perm_unitary(*pair).matrix
    assert set(np.unique(u)) <= {0, 1}
    assert np.all(u.sum(axis=0) == 1) and np.all(u.sum(axis=1) == 1)
    assert is_unitary(u) == (True, 0.0)


@settings(max_examples=80, deadline=None)
@given(tuple_pairs())
def test_count_matches_numeric_rank(pair):
    n = len(pair[0])
    r = count_n(*pair)
    assert n <= r <= n * n
    assert schmidt_rank(perm_unitary(*pair)) == r


@pytest.mark.parametrize("n,l", [(3, 0), (3, 1), (3, 3), (5, 2), (6, 4), (4, 0)])
def test_with_fixed_points(n, l):
    p = with_fixed_points(n, l)
    assert sorted(p) == list(range(n))
    assert fixed_points(p) == l


def test_with_fixed_points_rejects_n_minus_1():
    with pytest.raises(ValueError):
        with_fixed_points(4, 3)


def test_lemma1_examples():
    alpha, beta = construct_lemma1(3, 3)
    assert alpha[0] == identity(3) and count_n(alpha, beta) == 3
    alpha, beta = construct_lemma1(3, 6)
    assert fixed_points(alpha[0]) == 0 and count_n(alpha, beta) == 6
    alpha, beta = construct_lemma1(5, 8)
    assert fixed_points(alpha[0]) == 2 and count_n(alpha, beta) == 8


@pytest.mark.parametrize("n", range(2, 9))
def test_lemma1_all_ranks(n):
    for r in range(n, 2 * n + 1):
        if r == n + 1:
            with pytest.raises(ValueError):
                construct_lemma1(n, r)
            continue
        alpha, beta = construct_lemma1(n, r)
        assert count_n(alpha, beta) == r == 2 * n - fixed_points(alpha[0])


def test_lemma2_examples():
    alpha, beta = construct_lemma2(4, 11)
    assert beta[0] == cycle_power(4, 2) and count_n(alpha, beta) == 11
    alpha, beta = construct_lemma2(4, 8)
    assert beta[0] == (1, 0, 2, 3) and count_n(alpha, beta) == 8
    alpha, beta = construct_lemma2(5, 12)
    # k = 3n - 1 - r = 2
    assert beta[0] == (1, 3, 2, 4, 0)
    assert count_n(alpha, beta) == 12
    assert alpha[0] == alpha[1]


@pytest.mark.parametrize("n", range(4, 10))
def test_lemma2_all_ranks(n):
    for r in range(2 * n, 3 * n):
        alpha, beta = construct_lemma2(n, r)
        assert count_n(alpha, beta) == r


def test_lemma2_preconditions():
    with pytest.raises(ValueError):
        construct_lemma2(3, 7)
    with pytest.raises(ValueError):
        construct_lemma2(5, 15)


def test_extend_identities():
    a, b = extend_tuple(ident_tuple(3), ident_tuple(3))
    assert a == ident_tuple(4) and count_n(a, b) == 16


def test_extend_base7():
    t = (identity(3), identity(3), cycle_power(3, 1))
    a, b = extend_tuple(t, t)
    assert count_n(a, b) == 14


@settings(max_examples=60, deadline=None)
@given(tuple_pairs(max_n=5), st.data())
def test_extend_structure(pair, data):
    n = len(pair[0]) + 1
    ea = data.draw(st.permutations(range(n - 1)).map(tuple))
    eb = data.draw(st.permutations(range(n - 1)).map(tuple))
    a, b = extend_tuple(*pair, ea, eb)
    old = pair_set(*pair)
    new = pair_set(a, b)
    assert old <= new
    assert all(n - 1 not in p for p in old)
    assert all(n - 1 in p for p in new - old)
    assert len(new) == len(old) + 2 * n - 1


def test_extend_size_mismatch():
    with pytest.raises(ValueError):
        extend_tuple(ident_tuple(3), ident_tuple(3), identity(4))


def test_construct_examples():
    assert count_n(*construct_perm_rank(3, 7)) == 7
    assert count_n(*construct_perm_rank(4, 13)) == 13
    assert count_n(*construct_perm_rank(5, 25)) == 25


@pytest.mark.parametrize("n", range(3, 9))
def test_construct_exhaustive(n):
    for r in range(n, n * n + 1):
        if r in (n + 1, n * n - 1):
            with pytest.raises(ValueError):
                construct_perm_rank(n, r)
            continue
        alpha, beta = construct_perm_rank(n, r)
        assert len(alpha) == n
        assert count_n(alpha, beta) == r
    assert perm_ranks(n) == [r for r in range(n, n * n + 1) if r not in (n + 1, n * n - 1)]


def test_construct_rank_matches_numeric_n5():
    for r in perm_ranks(5):
        assert schmidt_rank(perm_unitary(*construct_perm_rank(5, r))) == r


def test_count_bounds_exhaustive_n2():
    perms = list(itertools.permutations(range(2)))
    tuples = list(itertools.product(perms, repeat=2))
    values = {count_n(a, b) for a in tuples for b in tuples}
    assert values <= {2, 3, 4}
