import pytest

from s2b.galg import GroupAlgebraElement as E
from s2b.perm import arrow, cycle, identity, simple_transposition
from s2b.shuffles import (
    arrow_element,
    b_product,
    family,
    minimal_polynomial_eval,
    one_sided,
    s,
    s_word,
    shuffle,
)


def test_shuffle_examples():
    for n in range(1, 6):
        assert shuffle(n, n) == 1
    assert shuffle(2, 1) == 1 + s(2, 1)
    t = shuffle(4, 2)
    assert len(t) == 3
    assert t == E(4, [(identity(4), 1), (cycle(4, [2, 3]), 1), (cycle(4, [2, 3, 4]), 1)])
    for bad in (0, 5):
        with pytest.raises(ValueError):
            shuffle(4, bad)


@pytest.mark.parametrize("n", range(1, 8))
def test_family_shape(n):
    t = family(n)
    assert len(t) == n and t[n] == 1
    for l in range(1, n + 1):
        assert len(t[l]) == n - l + 1
        assert all(c == 1 for _, c in t[l].items())
        assert t[l] == sum((arrow_element(n, l, w) for w in range(l + 1, n + 1)), arrow_element(n, l, l))


def test_one_sided_examples():
    t = family(4)
    assert one_sided(4, [0, 0, 0, 0]).is_zero()
    assert one_sided(4, [1, 0, 0, 0]) == t[1]
    # 3 + 2 + 1 = 6 terms, the identity occurring in each of the three
    u = one_sided(3, [1, 1, 1])
    assert len(u) == 6 - 2 and u.coefficient(identity(3)) == 3
    with pytest.raises(ValueError):
        one_sided(3, [1, 2])


def test_b_product_examples():
    t = family(3)
    assert b_product(3, 0) == 1
    assert b_product(3, 1) == t[1]
    assert b_product(3, 2) == t[1] * (t[1] - 1) == t[2] * t[1]
    with pytest.raises(ValueError):
        b_product(3, 4)


def test_minimal_polynomial_examples():
    assert minimal_polynomial_eval(4, 4).is_zero()
    t = family(3)[1]
    assert (t * (t - 1) * (t - 3)).is_zero()
    assert minimal_polynomial_eval(3, 1).is_zero()
    assert minimal_polynomial_eval(4, 2).is_zero()
    # dropping the last factor leaves something nonzero
    assert not (t * (t - 1)).is_zero()


@pytest.mark.parametrize("n", range(1, 7))
def test_minimal_polynomial_vanishes(n):
    for l in range(1, n + 1):
        assert minimal_polynomial_eval(n, l).is_zero()


@pytest.mark.parametrize("n", range(2, 9))
def test_recursion_through_the_next_shuffle(n):
    t = family(n)
    for l in range(1, n):
        assert t[l] == 1 + s(n, l) * t[l + 1]


@pytest.mark.parametrize("n", range(2, 7))
def test_short_arrows_centralize(n):
    t = family(n)
    for j in range(1, n + 1):
        for i in range(1, j):
            for k in range(i, j):
                a = arrow_element(n, i, k)
                assert a * t[j] == t[j] * a


@pytest.mark.parametrize("n", range(2, 7))
def test_splitting(n):
    t = family(n)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            rhs = s_word(n, i, j - 1) * t[j]
            for k in range(i, j):
                rhs = rhs + s_word(n, i, k - 1)
            assert rhs == t[i]


@pytest.mark.parametrize("n", range(1, 7))
def test_b_recursion(n):
    t = family(n)
    for i in range(1, n + 1):
        assert b_product(n, i) == t[i] * b_product(n, i - 1)


def test_s_word_and_arrows():
    assert s_word(5, 3, 2) == 1
    assert s_word(5, 2, 4) == E.basis(arrow(5, 2, 5))
    assert s(5, 3) == E.basis(simple_transposition(5, 3))
