import math

import pytest

from s2b.fuse import (
    abc_cab_checks,
    check_lemma4,
    check_lemma4_0,
    check_lemma5,
    check_lemma6,
    check_mu_identities,
    h_ideal,
    h_inclusion_checks,
    increase_mu_witness,
    lemma_checks,
    mu,
    parity_selector,
    s_plus,
    s_plus_conjugation_checks,
)
from s2b.galg import GroupAlgebraElement as E
from s2b.galg import commutator
from s2b.shuffles import family, s


def test_s_plus():
    assert s_plus(4, 2).value == 1 + s(4, 2)
    for u in (0, 4, 5, -1):
        assert s_plus(4, u).value == 1
    # s_u^+ (s_u - 1) = 0
    assert (s_plus(4, 1).value * (s(4, 1) - 1)).is_zero()


def test_h_ideal_examples():
    assert h_ideal(8, 7, 3).indices == (3, 5, 7)
    for j in range(1, 6):
        assert h_ideal(5, j - 1, j).is_zero()
        assert h_ideal(5, j - 1, j).rank == 0
    assert h_ideal(6, 6, 2).rank == 720
    # u = 6 gives the unit, so the ideal is everything
    assert h_ideal(6, 6, 2).contains(E.one(6))


def test_h_ideal_membership():
    n = 4
    h = h_ideal(n, 3, 3)
    g = s_plus(n, 3).value
    assert h.contains(family(n)[1] * g)
    assert not h.contains(E.one(n))
    assert h_ideal(n, 2, 3).contains(E.zero(n))
    assert not h_ideal(n, 2, 3).contains(E.one(n))
    with pytest.raises(ValueError):
        h.contains(E.one(3))


def test_h_ideal_rank_of_one_generator():
    # A (1 + s_u) has dimension n!/2
    for n in range(2, 6):
        for u in range(1, n):
            assert h_ideal(n, u, u).rank == math.factorial(n) // 2


def test_mu_examples():
    n = 5
    t = family(n)
    for j in range(1, n + 1):
        assert mu(n, j, j).value.is_zero()
        assert mu(n, j + 3, j).value.is_zero()
        if j >= 2:
            assert mu(n, j - 1, j).value == t[j - 1]
    assert mu(3, 1, 3).value == s(3, 1) * (1 + s(3, 2))
    for bad in ((0, 2), (1, 0), (1, 6)):
        with pytest.raises(ValueError):
            mu(n, *bad)


def test_parity_selector():
    assert parity_selector(6, 2) == 6
    assert parity_selector(6, 3) == 7
    for n in range(1, 8):
        for j in range(1, n + 1):
            k = parity_selector(n, j)
            assert k in (n, n + 1) and (k - j) % 2 == 0


def test_lemma4_examples():
    assert check_lemma4(4, 2, 3).passed and check_lemma4(4, 2, 3).lemma == "lemma4a"
    assert check_lemma4(4, 2, 4).passed and check_lemma4(4, 2, 4).lemma == "lemma4b"
    assert check_lemma4(3, 1, 2).passed
    # k = n + 1 makes s_k^+ the unit
    assert check_lemma4(4, 1, 5).passed
    for bad in ((3, 3), (0, 2), (2, 6)):
        with pytest.raises(ValueError):
            check_lemma4(4, *bad)


def test_lemma4_0_and_5_examples():
    assert check_lemma4_0(5, 3, 4).passed
    assert check_lemma5(4, 2, 4).passed
    assert check_lemma5(5, 3, 3).passed
    with pytest.raises(ValueError):
        check_lemma5(4, 2, 3)
    with pytest.raises(ValueError):
        check_lemma4_0(5, 3, 3)


def test_lemma6_examples():
    assert check_lemma6(4, 1, 2, 4).passed
    # i = j: the commutator is zero and the inclusion trivial
    assert check_lemma6(4, 2, 2, 4).passed
    with pytest.raises(ValueError):
        check_lemma6(4, 3, 2, 4)
    with pytest.raises(ValueError):
        check_lemma6(4, 1, 2, 3)


def test_lemma6_from_the_whole_algebra():
    # H_{5,3} at n = 5 is all of A, so [t_1, t_3] itself must lie in H_{3,3}
    n = 5
    t = family(n)
    c = commutator(t[1], t[3])
    assert h_ideal(n, 5, 3).contains(E.one(n))
    assert h_ideal(n, 3, 3).contains(c)
    # but not in the zero ideal H_{1,3}
    assert not c.is_zero() and not h_ideal(n, 1, 3).contains(c)


@pytest.mark.parametrize("n", range(1, 6))
def test_every_lemma_instance(n):
    checks = lemma_checks(n)
    assert checks or n == 1
    assert all(c.passed for c in checks), [c.as_row() for c in checks if not c.passed]


def test_mu_identities_empty_at_n1():
    assert check_mu_identities(1) == []


@pytest.mark.parametrize("n", range(2, 6))
def test_mu_identities(n):
    checks = check_mu_identities(n)
    assert {c.lemma for c in checks} >= {"com-mu", "sj-1+0"}
    assert all(c.passed for c in checks)


@pytest.mark.parametrize("n", range(1, 6))
def test_h_inclusions(n):
    checks = h_inclusion_checks(n)
    assert all(c.passed for c in checks), [c.as_row() for c in checks if not c.passed]


@pytest.mark.parametrize("n", range(3, 7))
def test_s_plus_conjugation(n):
    assert all(c.passed for c in s_plus_conjugation_checks(n))


@pytest.mark.parametrize("n", range(3, 6))
def test_abc_cab(n):
    assert all(c.passed for c in abc_cab_checks(n))


def test_increase_mu_witness():
    n = 5
    for j in range(3, n + 1):
        for k in range(1, j - 1):
            for i in range(1, k + 1):
                # move-mu makes k + 1 a witness, and it is the least allowed
                assert increase_mu_witness(n, i, j, k) == k + 1


def test_check_rows_serialize():
    row = check_lemma4(4, 2, 3).as_row()
    assert row == {"lemma": "lemma4a", "n": 4, "params": {"j": 2, "k": 3}, "pass": True}
