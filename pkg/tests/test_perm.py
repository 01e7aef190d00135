import itertools
import math
import random

import pytest
from hypothesis import given, strategies as st

from s2b.perm import (
    Permutation,
    all_permutations,
    arrow,
    compose,
    coxeter_length,
    cycle,
    embed,
    identity,
    inverse,
    parse,
    rank,
    simple_transposition,
    unrank,
)


def permutations(max_n=7):
    return st.integers(1, max_n).flatmap(lambda n: st.permutations(range(1, n + 1)).map(Permutation))


def pointwise(p, q):
    # independent oracle for composition
    return Permutation([p(q(i)) for i in range(1, len(p) + 1)])


def word(n, start, stop):
    out = identity(n)
    for k in range(start, stop + 1):
        out = out * simple_transposition(n, k)
    return out


# -- examples ------------------------------------------------------------------


def test_compose_examples():
    p = Permutation([2, 3, 1])
    assert compose(identity(3), p) == p
    s1 = simple_transposition(2, 1)
    assert compose(s1, s1) == identity(2)
    assert compose(cycle(3, [1, 2, 3]), cycle(3, [1, 2])) == Permutation([3, 2, 1])


def test_compose_rejects_degree_mismatch():
    with pytest.raises(ValueError):
        compose(identity(2), identity(3))


def test_cycle_examples():
    assert cycle(5, [3]) == identity(5)
    assert cycle(2, [1, 2]) == Permutation([2, 1])
    assert cycle(4, [2, 3, 4]) == Permutation([1, 3, 4, 2])


@pytest.mark.parametrize("support", [[1, 1], [0, 2], [1, 5]])
def test_cycle_rejects_bad_support(support):
    with pytest.raises(ValueError):
        cycle(4, support)


def test_arrow_examples():
    for v in range(1, 5):
        assert arrow(4, v, v) == identity(4)
    assert arrow(3, 1, 3) == Permutation([2, 3, 1])
    assert arrow(4, 2, 3) == simple_transposition(4, 2)
    with pytest.raises(ValueError):
        arrow(4, 3, 2)


def test_inverse_examples():
    assert inverse(identity(4)) == identity(4)
    for i in range(1, 4):
        assert inverse(simple_transposition(4, i)) == simple_transposition(4, i)
    assert inverse(Permutation([2, 3, 1])) == Permutation([3, 1, 2])


def test_rank_examples():
    assert rank(identity(4)) == 0
    for n in range(1, 7):
        assert rank(Permutation(range(n, 0, -1))) == math.factorial(n) - 1
    assert unrank(3, 2) == Permutation([2, 1, 3])
    with pytest.raises(ValueError):
        unrank(3, 6)
    with pytest.raises(ValueError):
        unrank(3, -1)


def test_coxeter_length_examples():
    assert coxeter_length(identity(5)) == 0
    assert all(coxeter_length(simple_transposition(5, i)) == 1 for i in range(1, 5))
    for n in range(1, 8):
        assert coxeter_length(Permutation(range(n, 0, -1))) == n * (n - 1) // 2


def test_rendering_and_parsing():
    p = Permutation([2, 3, 1])
    assert p.one_line() == "one-line: [2,3,1]"
    assert p.cycle_string() == "cyc(1,2,3)"
    assert identity(3).cycle_string() == "id"
    assert parse("one-line: [2,3,1]") == p
    assert parse(str(p)) == p
    with pytest.raises(ValueError):
        parse("[1,1]")
    with pytest.raises(ValueError):
        Permutation([1, 3])


def test_embed():
    assert embed(Permutation([2, 1]), 4) == Permutation([2, 1, 3, 4])
    with pytest.raises(ValueError):
        embed(identity(3), 2)


def test_mixed_degree_is_not_promoted():
    with pytest.raises(ValueError):
        identity(2) * identity(3)


# -- properties ------------------------------------------------------------------


@given(permutations())
def test_identity_is_neutral(p):
    e = identity(len(p))
    assert p * e == p and e * p == p


@given(permutations(), st.data())
def test_compose_matches_pointwise(p, data):
    q = data.draw(st.permutations(range(1, len(p) + 1)).map(Permutation))
    assert p * q == pointwise(p, q)


@given(permutations())
def test_inverse_roundtrip(p):
    assert p * inverse(p) == identity(len(p)) == inverse(p) * p


@given(permutations(), st.data())
def test_conjugating_a_cycle(sigma, data):
    n = len(sigma)
    k = data.draw(st.integers(1, n))
    support = data.draw(st.permutations(range(1, n + 1)))[:k]
    lhs = sigma * cycle(n, support) * inverse(sigma)
    assert lhs == cycle(n, [sigma(i) for i in support])


@given(permutations(8))
def test_length_counts_inversions(p):
    pairs = sum(1 for i, j in itertools.combinations(range(len(p)), 2) if p[i] > p[j])
    assert coxeter_length(p) == pairs


def test_rank_roundtrip_exhaustive():
    for n in range(1, 7):
        perms = list(all_permutations(n))
        assert [rank(p) for p in perms] == list(range(math.factorial(n)))
        assert all(unrank(n, rank(p)) == p for p in perms)
        assert perms == sorted(perms)


@pytest.mark.parametrize("n", [7, 8])
def test_rank_roundtrip_sampled(n):
    rng = random.Random(n)
    for _ in range(300):
        p = Permutation(rng.sample(range(1, n + 1), n))
        assert unrank(n, rank(p)) == p
        r = rng.randrange(math.factorial(n))
        assert rank(unrank(n, r)) == r


# -- arrow identities, exhaustive for n <= 7 ---------------------------------------


@pytest.mark.parametrize("n", range(1, 8))
def test_arrow_is_a_word_and_recursions(n):
    for v in range(1, n + 1):
        for w in range(v, n + 1):
            a = arrow(n, v, w)
            assert a == cycle(n, list(range(v, w + 1)))
            assert a == word(n, v, w - 1)
            if v < w:
                assert a == simple_transposition(n, v) * arrow(n, v + 1, w)
                assert a == arrow(n, v, w - 1) * simple_transposition(n, w - 1)


@pytest.mark.parametrize("n", range(1, 8))
def test_arrow_moves_past_a_longer_arrow(n):
    # w >= v > j >= i
    for i, j, v, w in itertools.product(range(1, n + 1), repeat=4):
        if w >= v > j >= i:
            assert arrow(n, j + 1, v) * arrow(n, i, w) == arrow(n, i, w) * arrow(n, j, v - 1)


@pytest.mark.parametrize("n", range(1, 8))
def test_overlapping_arrows_exchange(n):
    # v > w >= i
    for i, v, w in itertools.product(range(1, n + 1), repeat=3):
        if v > w >= i:
            assert arrow(n, i + 1, v) * arrow(n, i, w) == arrow(n, i, w + 1) * arrow(n, i, v)


@pytest.mark.parametrize("n", range(1, 8))
def test_transposition_slides_through_arrow(n):
    for i, u, v in itertools.product(range(1, n + 1), repeat=3):
        if i < u < v:
            a = arrow(n, i, v)
            assert simple_transposition(n, u) * a == a * simple_transposition(n, u - 1)


@pytest.mark.parametrize("n", range(1, 8))
def test_arrow_splits_at_any_midpoint(n):
    for i, j, k in itertools.product(range(1, n + 1), repeat=3):
        if i <= j <= k:
            assert arrow(n, i, k) == arrow(n, i, j) * arrow(n, j, k)
