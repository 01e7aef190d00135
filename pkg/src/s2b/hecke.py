"""The type-A Hecke algebra H_q(S_n) over Z[q].

The basis is ``T_w`` for ``w`` in S_n, with ``T_x T_s = T_{xs}`` when the
length goes up and ``T_x T_s = q T_{xs} + (q - 1) T_x`` when it goes down.
General products are built by applying a reduced word of the right factor.

>>> s1 = HeckeElement.basis(simple_transposition(2, 1))
>>> print(s1 * s1)
q·[1,2] + (q − 1)·[2,1]
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import zip_longest
from typing import Iterable

from .exactla import member
from .galg import GroupAlgebraElement, power
from .perm import Permutation, arrow, simple_transposition  # noqa: F401  (doctest)

__all__ = [
    "QPolynomial",
    "Q",
    "HeckeElement",
    "reduced_word",
    "hecke_multiply",
    "hecke_shuffle",
    "hecke_family",
    "specialize",
    "HeckeCheck",
    "check_hecke_ti1ti",
    "check_q0_nonmembership",
    "degeneration_oracle",
    "ConjectureRecord",
    "conjecture_scan",
]


class QPolynomial:
    """An integer polynomial in ``q``; ``coefficients[d]`` multiplies ``q**d``."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int] = ()):
        c = [int(x) for x in coefficients]
        while c and c[-1] == 0:
            c.pop()
        self.coefficients = tuple(c)

    @classmethod
    def _raw(cls, c: tuple) -> QPolynomial:
        obj = cls.__new__(cls)
        while c and c[-1] == 0:
            c = c[:-1]
        obj.coefficients = c
        return obj

    @classmethod
    def coerce(cls, x) -> QPolynomial:
        if isinstance(x, QPolynomial):
            return x
        if isinstance(x, int):
            return cls._raw((x,))
        raise TypeError(f"cannot use {x!r} as a polynomial in q")

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coefficients) - 1

    def __bool__(self) -> bool:
        return bool(self.coefficients)

    def __eq__(self, other) -> bool:
        if isinstance(other, (QPolynomial, int)):
            return self.coefficients == QPolynomial.coerce(other).coefficients
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __add__(self, other):
        if not isinstance(other, (QPolynomial, int)):
            return NotImplemented
        other = QPolynomial.coerce(other)
        return QPolynomial._raw(
            tuple(a + b for a, b in zip_longest(self.coefficients, other.coefficients, fillvalue=0))
        )

    __radd__ = __add__

    def __neg__(self) -> QPolynomial:
        return QPolynomial._raw(tuple(-a for a in self.coefficients))

    def __sub__(self, other):
        if not isinstance(other, (QPolynomial, int)):
            return NotImplemented
        return self + (-QPolynomial.coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, (QPolynomial, int)):
            return NotImplemented
        return QPolynomial.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial._raw(tuple(a * other for a in self.coefficients)) if other else _ZERO
        if not isinstance(other, QPolynomial):
            return NotImplemented
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return _ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for k, y in enumerate(b):
                    out[i + k] += x * y
        return QPolynomial._raw(tuple(out))

    __rmul__ = __mul__

    def __call__(self, q):
        """Evaluate at ``q`` by Horner's rule."""
        out = 0
        for a in reversed(self.coefficients):
            out = out * q + a
        return out

    def to_json(self) -> list[int]:
        return list(self.coefficients)

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for d in range(len(self.coefficients) - 1, -1, -1):
            a = self.coefficients[d]
            if not a:
                continue
            mag = abs(a)
            mono = "" if d == 0 else ("q" if d == 1 else f"q^{d}")
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            parts.append(("−" if a < 0 else "+", body))
        sign, body = parts[0]
        out = ("−" if sign == "−" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"QPolynomial({list(self.coefficients)})"


_ZERO = QPolynomial()
Q = QPolynomial((0, 1))
_Q_MINUS_1 = QPolynomial((-1, 1))


def _as_q(c):
    return c if isinstance(c, QPolynomial) else QPolynomial.coerce(c)


class HeckeElement(GroupAlgebraElement):
    """A Z[q]-combination of the basis ``T_w``, keyed by ``w``."""

    __slots__ = ()

    def __init__(self, degree: int, terms=()):
        super().__init__(degree, terms)
        self._terms = {p: _as_q(c) for p, c in self._terms.items()}

    @classmethod
    def _from_dict(cls, degree: int, terms: dict) -> HeckeElement:
        obj = cls.__new__(cls)
        obj.degree = degree
        obj._terms = {p: _as_q(c) for p, c in terms.items()}
        return obj

    def _coerce(self, other):
        if isinstance(other, GroupAlgebraElement) and not isinstance(other, HeckeElement):
            raise TypeError("mixing Hecke and group algebra elements; use specialize()")
        return super()._coerce(other)

    def right_mul_simple(self, i: int) -> HeckeElement:
        """``self * T_{s_i}``."""
        acc: dict[Permutation, QPolynomial] = {}
        a, b = i - 1, i
        for x, c in self._terms.items():
            y = list(x)
            y[a], y[b] = y[b], y[a]
            xs = Permutation._trusted(y)
            if x[a] < x[b]:
                acc[xs] = acc[xs] + c if xs in acc else c
            else:
                acc[xs] = acc[xs] + Q * c if xs in acc else Q * c
                acc[x] = acc[x] + _Q_MINUS_1 * c if x in acc else _Q_MINUS_1 * c
        return self._like({p: c for p, c in acc.items() if c})

    def right_mul_basis(self, w: Permutation) -> HeckeElement:
        out = self
        for i in reduced_word(w):
            out = out.right_mul_simple(i)
        return out

    def _multiply(self, other: HeckeElement) -> HeckeElement:
        acc: dict[Permutation, QPolynomial] = {}
        for w, b in other._terms.items():
            for p, c in self.right_mul_basis(w)._terms.items():
                v = c * b
                acc[p] = acc[p] + v if p in acc else v
        return self._like({p: c for p, c in acc.items() if c})


@lru_cache(maxsize=None)
def reduced_word(w: Permutation, choice: str = "first") -> tuple[int, ...]:
    """A reduced word ``(i_1, ..., i_k)`` with ``w = s_{i_1} ... s_{i_k}``.

    Descents are stripped from the right, taking the leftmost (``"first"``)
    or rightmost (``"last"``) descent each time.

    >>> reduced_word(Permutation([3, 1, 2]))
    (2, 1)
    """
    if choice not in ("first", "last"):
        raise ValueError(f"unknown descent choice {choice!r}")
    x = list(w)
    stripped = []
    positions = range(len(x) - 1) if choice == "first" else range(len(x) - 2, -1, -1)
    while True:
        for a in positions:
            if x[a] > x[a + 1]:
                x[a], x[a + 1] = x[a + 1], x[a]
                stripped.append(a + 1)
                break
        else:
            break
    return tuple(reversed(stripped))


def hecke_multiply(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    return a * b


def hecke_shuffle(n: int, l: int) -> HeckeElement:
    """``t_l^H = T_{(l => l)} + T_{(l => l+1)} + ... + T_{(l => n)}``."""
    if not 1 <= l <= n:
        raise ValueError(f"t_{l}^H is undefined for n={n}")
    return hecke_family(n)[l - 1]


@lru_cache(maxsize=None)
def hecke_family(n: int) -> tuple[HeckeElement, ...]:
    return tuple(
        HeckeElement(n, ((arrow(n, l, w), 1) for w in range(l, n + 1))) for l in range(1, n + 1)
    )


def specialize(x: HeckeElement, q: int) -> GroupAlgebraElement:
    """Substitute an integer for ``q``; ``q = 1`` recovers the group algebra."""
    return GroupAlgebraElement(x.degree, ((p, c(q)) for p, c in x.items()))


@dataclass(frozen=True)
class HeckeCheck:
    identity: str
    n: int
    i: int
    passed: bool


def check_hecke_ti1ti(n: int) -> list[HeckeCheck]:
    """``q t_{i+1} t_i = (t_i - 1) t_i = t_i (t_i - 1)`` in H, symbolically in q."""
    if n < 2:
        raise ValueError("needs n >= 2")
    t = hecke_family(n)
    out = []
    for i in range(1, n):
        ti, tj = t[i - 1], t[i]
        lhs = (tj * ti).scale(Q)
        ok = lhs == (ti - 1) * ti and lhs == ti * (ti - 1)
        out.append(HeckeCheck("q*t_{i+1}t_i=(t_i-1)t_i=t_i(t_i-1)", n, i, ok))
    return out


def check_q0_nonmembership(n: int, q: int = 0) -> tuple[bool, list[tuple[int, bool]]]:
    """Is ``t_{i+1}^H t_i^H`` outside the span of ``1, t_i^H, (t_i^H)^2`` at ``q``?

    Returns the overall verdict (some ``i`` is outside) and the per-``i`` flags.
    """
    if n < 3:
        raise ValueError("needs n >= 3")
    t = hecke_family(n)
    rows = []
    for i in range(1, n):
        ti = t[i - 1]
        span = [specialize(HeckeElement.one(n), q), specialize(ti, q), specialize(ti * ti, q)]
        rows.append((i, not member(span, specialize(t[i] * ti, q))))
    return any(flag for _, flag in rows), rows


def _random_hecke(n: int, rng: random.Random, terms: int = 4) -> HeckeElement:
    perms = [Permutation(rng.sample(range(1, n + 1), n)) for _ in range(terms)]
    return HeckeElement(
        n, ((p, QPolynomial(rng.randint(-3, 3) for _ in range(rng.randint(1, 3)))) for p in perms)
    )


def degeneration_oracle(n: int, pairs: int = 100, seed: int = 0) -> tuple[int, int]:
    """Compare ``(ab)|_{q=1}`` with ``a|_{q=1} b|_{q=1}`` on random pairs.

    Returns ``(matches, pairs)``.
    """
    rng = random.Random(seed)
    ok = 0
    for _ in range(pairs):
        a, b = _random_hecke(n, rng), _random_hecke(n, rng)
        ok += specialize(a * b, 1) == specialize(a, 1) * specialize(b, 1)
    return ok, pairs


@dataclass(frozen=True)
class ConjectureRecord:
    n: int
    i: int
    j: int
    exponent: int
    vanishes: bool


def conjecture_scan(n: int) -> list[ConjectureRecord]:
    """Does ``[t_i^H, t_j^H]`` vanish at the smaller of the two group-algebra exponents?"""
    if n > 5:
        raise ValueError("the symbolic Hecke scan is limited to n <= 5")
    t = hecke_family(n)
    out = []
    for j in range(1, n + 1):
        for i in range(1, j):
            m = min(j - i + 1, math.ceil((n - j) / 2) + 1)
            c = t[i - 1] * t[j - 1] - t[j - 1] * t[i - 1]
            out.append(ConjectureRecord(n, i, j, m, power(c, m).is_zero()))
    return out

