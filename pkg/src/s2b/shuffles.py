"""Somewhere-to-below shuffles and the elements built from them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .galg import GroupAlgebraElement, linear_combine
from .perm import arrow, simple_transposition

__all__ = [
    "ShuffleFamily",
    "family",
    "shuffle",
    "one_sided",
    "b_product",
    "minimal_polynomial_eval",
    "s",
    "arrow_element",
    "s_word",
]


@dataclass(frozen=True)
class ShuffleFamily:
    """The elements ``t_1, ..., t_n`` of k[S_n]; index with ``family[l]``."""

    degree: int
    elements: tuple[GroupAlgebraElement, ...]

    def __getitem__(self, l: int) -> GroupAlgebraElement:
        if not 1 <= l <= self.degree:
            raise ValueError(f"t_{l} is undefined for n={self.degree}")
        return self.elements[l - 1]

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return self.degree


def _build_shuffle(n: int, l: int) -> GroupAlgebraElement:
    return GroupAlgebraElement(n, ((arrow(n, l, w), 1) for w in range(l, n + 1)))


@lru_cache(maxsize=None)
def family(n: int) -> ShuffleFamily:
    if n < 1:
        raise ValueError("degree must be positive")
    return ShuffleFamily(n, tuple(_build_shuffle(n, l) for l in range(1, n + 1)))


def shuffle(n: int, l: int) -> GroupAlgebraElement:
    """``t_l = (l => l) + (l => l+1) + ... + (l => n)``."""
    if not 1 <= l <= n:
        raise ValueError(f"t_{l} is undefined for n={n}")
    return family(n)[l]


def one_sided(n: int, coefficients: Sequence) -> GroupAlgebraElement:
    """The one-sided cycle shuffle ``sum(c_l * t_l)``."""
    if len(coefficients) != n:
        raise ValueError(f"need {n} coefficients, got {len(coefficients)}")
    return linear_combine(zip(coefficients, family(n)))


def b_product(n: int, i: int) -> GroupAlgebraElement:
    """``B_i = t_1 (t_1 - 1) ... (t_1 - (i - 1))``, multiplied left to right."""
    if not 0 <= i <= n:
        raise ValueError(f"B_{i} needs 0 <= i <= n={n}")
    t1 = family(n)[1]
    out = GroupAlgebraElement.one(n)
    for k in range(i):
        out = out * (t1 - k)
    return out


def minimal_polynomial_eval(n: int, l: int) -> GroupAlgebraElement:
    """Evaluate ``x (x-1) ... (x-(n-l-1)) * (x-(n-l+1))`` at ``x = t_l``.

    The result should vanish: ``t_l`` is a relabelled top-to-random shuffle
    of ``S_{n-l+1}``, whose minimal polynomial this is.
    """
    t = shuffle(n, l)
    out = GroupAlgebraElement.one(n)
    for k in range(n - l):
        out = out * (t - k)
    return out * (t - (n - l + 1))


@lru_cache(maxsize=None)
def s(n: int, i: int) -> GroupAlgebraElement:
    """The simple transposition ``s_i`` as an element of k[S_n]."""
    return GroupAlgebraElement.basis(simple_transposition(n, i))


def arrow_element(n: int, v: int, w: int) -> GroupAlgebraElement:
    return GroupAlgebraElement.basis(arrow(n, v, w))


def s_word(n: int, start: int, stop: int) -> GroupAlgebraElement:
    """``s_start s_{start+1} ... s_stop`` (the unit when ``stop < start``)."""
    out = GroupAlgebraElement.one(n)
    for k in range(start, stop + 1):
        out = out * s(n, k)
    return out
