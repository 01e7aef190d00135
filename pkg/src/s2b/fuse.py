"""The s_u^+ elements, the left ideals H_{k,j}, and the mu_{i,j} elements.

Each ``check_*`` function decides one membership or equality exactly and
returns a :class:`Check`; the ``*_checks`` helpers enumerate every admissible
parameter tuple at a given degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import factorial

from .exactla import EchelonBasis, left_ideal, principal_right_ideal
from .galg import GroupAlgebraElement, commutator
from .shuffles import arrow_element, family, s

__all__ = [
    "Check",
    "SPlus",
    "s_plus",
    "HIdeal",
    "h_ideal",
    "MuElement",
    "mu",
    "parity_selector",
    "check_lemma4",
    "check_lemma4_0",
    "check_lemma5",
    "check_lemma6",
    "lemma_checks",
    "check_mu_identities",
    "h_inclusion_checks",
    "s_plus_conjugation_checks",
    "increase_mu_witness",
    "abc_cab_checks",
]


@dataclass(frozen=True)
class Check:
    """One verified instance: which statement, at which parameters, and the verdict."""

    lemma: str
    n: int
    params: dict
    passed: bool

    def as_row(self) -> dict:
        return {"lemma": self.lemma, "n": self.n, "params": self.params, "pass": self.passed}


@dataclass(frozen=True)
class SPlus:
    degree: int
    index: int
    value: GroupAlgebraElement = field(compare=False)


def s_plus(n: int, u: int) -> SPlus:
    """``s_u + 1`` for ``u`` in ``[n-1]`` and ``1`` for every other integer."""
    one = GroupAlgebraElement.one(n)
    return SPlus(n, u, s(n, u) + one if 1 <= u <= n - 1 else one)


@dataclass(frozen=True)
class HIdeal:
    """The left ideal generated by ``s_u^+`` for ``u`` in ``[j, k]``, ``u = k mod 2``."""

    degree: int
    k: int
    j: int
    indices: tuple[int, ...]

    @property
    def generators(self) -> tuple[GroupAlgebraElement, ...]:
        return tuple(s_plus(self.degree, u).value for u in self.indices)

    @cached_property
    def basis(self) -> EchelonBasis:
        return left_ideal(self.generators, self.degree)

    @property
    def rank(self) -> int:
        return self.basis.rank

    def is_zero(self) -> bool:
        return not self.indices

    def contains(self, x: GroupAlgebraElement) -> bool:
        if x.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {x.degree}")
        if not self.indices:
            return x.is_zero()
        return self.basis.contains(x)

    __contains__ = contains

    def issubset(self, other: HIdeal) -> bool:
        return all(other.contains(g) for g in self.generators)


@lru_cache(maxsize=None)
def h_ideal(n: int, k: int, j: int) -> HIdeal:
    return HIdeal(n, k, j, tuple(u for u in range(j, k + 1) if (u - k) % 2 == 0))


@dataclass(frozen=True)
class MuElement:
    degree: int
    i: int
    j: int
    value: GroupAlgebraElement = field(compare=False)


def mu(n: int, i: int, j: int) -> MuElement:
    """``(i => j-1) t_{j-1}`` when ``i`` is in ``[j-1]``, else zero."""
    if not 1 <= j <= n or i < 1:
        raise ValueError(f"mu_{{{i},{j}}} needs j in [1, {n}] and i positive")
    if i <= j - 1:
        value = arrow_element(n, i, j - 1) * family(n)[j - 1]
    else:
        value = GroupAlgebraElement.zero(n)
    return MuElement(n, i, j, value)


def parity_selector(n: int, j: int) -> int:
    """The element of ``{n, n+1}`` congruent to ``j`` modulo 2."""
    return n if (n - j) % 2 == 0 else n + 1


def _require(ok: bool, message: str) -> None:
    if not ok:
        raise ValueError(message)


def check_lemma4(n: int, j: int, k: int) -> Check:
    """``s_k^+ t_j`` (k, j of opposite parity) or ``s_k^+ (t_j - 1)`` lies in ``H_{k-1,j}``."""
    _require(1 <= j <= n and 1 <= k <= n + 1 and j < k, f"lemma 4 needs j in [n], k in [n+1], j < k; got j={j}, k={k}")
    t = family(n)
    x = s_plus(n, k).value * (t[j] if (k - j) % 2 else t[j] - 1)
    part = "a" if (k - j) % 2 else "b"
    return Check("lemma4" + part, n, {"j": j, "k": k}, h_ideal(n, k - 1, j).contains(x))


def check_lemma4_0(n: int, j: int, u: int) -> Check:
    """``s_u^+ (t_j - (t_{j-1} - 1))`` lies in ``H_{u-1,j}``."""
    _require(
        2 <= j <= n and 1 <= u <= n and u >= j - 1 and (u - j + 1) % 2 == 0,
        f"lemma 4+0 needs j in [2,n], u in [n], u >= j-1, u = j-1 mod 2; got j={j}, u={u}",
    )
    t = family(n)
    x = s_plus(n, u).value * (t[j] - (t[j - 1] - 1))
    return Check("lemma4+0", n, {"j": j, "u": u}, h_ideal(n, u - 1, j).contains(x))


def check_lemma5(n: int, j: int, k: int) -> Check:
    """``s_k^+ [t_{j-1}, t_j]`` lies in ``H_{k-2,j}``."""
    _require(
        1 <= j <= n and 1 <= k <= n + 1 and 1 < j <= k and (k - j) % 2 == 0,
        f"lemma 5 needs 1 < j <= k, j in [n], k in [n+1], k = j mod 2; got j={j}, k={k}",
    )
    t = family(n)
    x = s_plus(n, k).value * commutator(t[j - 1], t[j])
    return Check("lemma5", n, {"j": j, "k": k}, h_ideal(n, k - 2, j).contains(x))


def check_lemma6(n: int, i: int, j: int, k: int) -> Check:
    """``H_{k,j} [t_i, t_j]`` is contained in ``H_{k-2,j}``.

    Checking the generators suffices: the ideal is a left ideal and the
    commutator multiplies on the right.
    """
    _require(
        1 <= i <= j <= n and 1 <= k <= n + 1 and (k - j) % 2 == 0,
        f"lemma 6 needs i <= j in [n], k in [n+1], k = j mod 2; got i={i}, j={j}, k={k}",
    )
    t = family(n)
    c = commutator(t[i], t[j])
    target = h_ideal(n, k - 2, j)
    ok = all(target.contains(g * c) for g in h_ideal(n, k, j).generators)
    return Check("lemma6", n, {"i": i, "j": j, "k": k}, ok)


def lemma_checks(n: int) -> list[Check]:
    """Lemmas 4, 4+0, 5 and 6 over every admissible tuple."""
    out = []
    for j in range(1, n + 1):
        for k in range(j + 1, n + 2):
            out.append(check_lemma4(n, j, k))
    for j in range(2, n + 1):
        for u in range(j - 1, n + 1, 2):
            out.append(check_lemma4_0(n, j, u))
    for j in range(2, n + 1):
        for k in range(j, n + 2, 2):
            out.append(check_lemma5(n, j, k))
    for j in range(1, n + 1):
        for k in range(1, n + 2):
            if (k - j) % 2:
                continue
            for i in range(1, j + 1):
                out.append(check_lemma6(n, i, j, k))
    return out


def check_mu_identities(n: int) -> list[Check]:
    """Exact comparisons for the com-mu, move-mu and sj-1+0 identities."""
    t = family(n)
    out = []
    for j in range(1, n + 1):
        for i in range(1, j):
            c = commutator(t[i], t[j])
            lhs1 = arrow_element(n, i, j - 1) * commutator(t[j - 1], t[j])
            lhs2 = mu(n, i, j).value * (t[j] - t[j - 1] + 1)
            out.append(Check("com-mu", n, {"i": i, "j": j}, c == lhs1 and c == lhs2))
    for j in range(1, n + 1):
        for k in range(1, j - 1):
            for i in range(1, k + 1):
                lhs = commutator(t[i], t[j]) * mu(n, k, j).value
                rhs = mu(n, k + 1, j).value * commutator(t[i], t[j - 1])
                out.append(Check("move-mu", n, {"i": i, "j": j, "k": k}, lhs == rhs))
    for j in range(2, n + 1):
        x = s_plus(n, j - 1).value * (t[j] - (t[j - 1] - 1))
        out.append(Check("sj-1+0", n, {"j": j}, x.is_zero()))
    return out


def h_inclusion_checks(n: int) -> list[Check]:
    """Containments among the ``H_{k,j}`` for ``k, j`` in ``[0, n+1]``."""
    out = []
    span = range(0, n + 2)
    for k in span:
        for j in range(1, n + 2):
            out.append(Check("Hkj-shrink", n, {"k": k, "j": j},
                             h_ideal(n, k, j).issubset(h_ideal(n, k, j - 1))))
    for j in span:
        for v in span:
            for w in range(v, n + 2, 2):
                out.append(Check("Hkj-parity", n, {"v": v, "w": w, "j": j},
                                 h_ideal(n, v, j).issubset(h_ideal(n, w, j))))
    for k in span:
        for j in range(1, n + 2):
            if (k - j) % 2:
                continue
            a, b = h_ideal(n, k, j - 1), h_ideal(n, k, j)
            out.append(Check("Hkj-equal", n, {"k": k, "j": j}, a.issubset(b) and b.issubset(a)))
    for k in (n, n + 1):
        for j in range(1, n + 1):
            out.append(Check("Hnj-whole", n, {"k": k, "j": j}, h_ideal(n, k, j).rank == factorial(n)))
    return out


def s_plus_conjugation_checks(n: int) -> list[Check]:
    """``s_u^+ (i => v) = (i => v) s_{u-1}^+`` for ``i < u < v``."""
    out = []
    for i in range(1, n + 1):
        for u in range(i + 1, n + 1):
            for v in range(u + 1, n + 1):
                a = arrow_element(n, i, v)
                ok = s_plus(n, u).value * a == a * s_plus(n, u - 1).value
                out.append(Check("su+ip", n, {"i": i, "u": u, "v": v}, ok))
    return out


def increase_mu_witness(n: int, i: int, j: int, k: int) -> int | None:
    """Smallest ``l >= k+1`` with ``[t_i, t_j] mu_{k,j}`` in ``mu_{l,j} A``.

    Every ``l >= j`` gives ``mu_{l,j} = 0``, so ``j`` is returned when the
    product vanishes and no smaller ``l`` works. ``None`` means no witness.
    """
    t = family(n)
    x = commutator(t[i], t[j]) * mu(n, k, j).value
    for l in range(k + 1, j):
        if principal_right_ideal(mu(n, l, j).value).contains(x):
            return l
    return max(j, k + 1) if x.is_zero() else None


def abc_cab_checks(n: int) -> list[Check]:
    """``c [a, b] = [a, b] c`` with ``a = t_{j-1}``, ``b = t_j``, ``c = (k => j-2)``.

    Both hypotheses ``ca = ac`` and ``cb = bc`` are checked as well, so a
    passing row certifies the whole implication on that instance.
    """
    t = family(n)
    out = []
    for j in range(3, n + 1):
        a, b = t[j - 1], t[j]
        ab = commutator(a, b)
        for k in range(1, j - 1):
            c = arrow_element(n, k, j - 2)
            ok = c * a == a * c and c * b == b * c and c * ab == ab * c
            out.append(Check("abc=cab", n, {"j": j, "k": k}, ok))
    return out
