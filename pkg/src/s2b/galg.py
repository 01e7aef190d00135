"""Sparse elements of the group algebra k[S_n].

An element is a finite mapping ``Permutation -> coefficient`` with no zero
coefficients stored. Coefficients can be anything that behaves like an exact
commutative ring element (``int``, ``fractions.Fraction``, or the q-polynomials
of :mod:`s2b.hecke`); nothing here ever touches floating point.

>>> from s2b.perm import simple_transposition
>>> s1 = GroupAlgebraElement.basis(simple_transposition(2, 1))
>>> (1 + s1) * (1 - s1)
GroupAlgebraElement(2, 0)
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from operator import itemgetter
from typing import Any, Iterable, Mapping

from .perm import Permutation, identity, parse as parse_permutation, rank

__all__ = [
    "GroupAlgebraElement",
    "linear_combine",
    "multiply",
    "commutator",
    "power",
    "parse_coefficient",
]


def _is_scalar(x) -> bool:
    return isinstance(x, Rational) or (
        not isinstance(x, (GroupAlgebraElement, Permutation))
        and hasattr(x, "__mul__")
        and hasattr(x, "__add__")
        and not isinstance(x, (tuple, list, str))
    )


class GroupAlgebraElement:
    """An element of k[S_n] in canonical sparse form."""

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping[Permutation, Any] | Iterable = ()):
        if degree < 1:
            raise ValueError("degree must be positive")
        self.degree = degree
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Permutation, Any] = {}
        for p, c in items:
            if not isinstance(p, Permutation):
                p = Permutation(p)
            if len(p) != degree:
                raise ValueError(f"{p} does not lie in S_{degree}")
            acc[p] = acc[p] + c if p in acc else c
        self._terms = {p: c for p, c in acc.items() if c}

    @classmethod
    def _from_dict(cls, degree: int, terms: dict) -> GroupAlgebraElement:
        # caller guarantees canonical form (Permutation keys, no zeros)
        obj = cls.__new__(cls)
        obj.degree = degree
        obj._terms = terms
        return obj

    def _like(self, terms: dict):
        return type(self)._from_dict(self.degree, terms)

    @classmethod
    def zero(cls, n: int):
        return cls._from_dict(n, {})

    @classmethod
    def one(cls, n: int, coefficient=1):
        return cls._from_dict(n, {identity(n): coefficient} if coefficient else {})

    @classmethod
    def basis(cls, p: Permutation, coefficient=1):
        return cls._from_dict(len(p), {p: coefficient} if coefficient else {})

    # -- mapping-like access ------------------------------------------------

    @property
    def terms(self) -> dict[Permutation, Any]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, p: Permutation):
        return self._terms.get(p, 0)

    def support(self) -> list[Permutation]:
        return sorted(self._terms, key=rank)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other) -> bool:
        if isinstance(other, GroupAlgebraElement):
            return self.degree == other.degree and self._terms == other._terms
        if _is_scalar(other):
            return self == self.one(self.degree, other)
        return NotImplemented

    __hash__ = None

    # -- arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, GroupAlgebraElement):
            if other.degree != self.degree:
                raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
            return other
        if isinstance(other, Permutation):
            return self.basis(other) if len(other) == self.degree else self._coerce_fail(other)
        if _is_scalar(other):
            return self.one(self.degree, other)
        return None

    def _coerce_fail(self, other):
        raise ValueError(f"degree mismatch: {self.degree} vs {len(other)}")

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        terms = dict(self._terms)
        for p, c in other._terms.items():
            s = terms[p] + c if p in terms else c
            if s:
                terms[p] = s
            else:
                terms.pop(p, None)
        return self._like(terms)

    __radd__ = __add__

    def __neg__(self):
        return self._like({p: -c for p, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c):
        if not c:
            return self._like({})
        terms = {}
        for p, a in self._terms.items():
            v = c * a
            if v:
                terms[p] = v
        return self._like(terms)

    def __mul__(self, other):
        if _is_scalar(other) and not isinstance(other, GroupAlgebraElement):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._multiply(other)

    def __rmul__(self, other):
        if _is_scalar(other):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other._multiply(self)

    def _multiply(self, other):
        n = self.degree
        if n == 1:
            c = sum(self._terms.values()) * sum(other._terms.values()) if self and other else 0
            return self.one(1, c)
        right = [(itemgetter(*(i - 1 for i in q)), b) for q, b in other._terms.items()]
        acc: dict[tuple, Any] = {}
        get = acc.get
        for p, a in self._terms.items():
            for g, b in right:
                key = g(p)  # p o q in one-line notation
                acc[key] = get(key, 0) + a * b
        trusted = Permutation._trusted
        return self._like({trusted(k): c for k, c in acc.items() if c})

    def __pow__(self, m: int):
        return power(self, m)

    def map_coefficients(self, f, cls=None):
        """Apply ``f`` to every coefficient, e.g. to specialise a parameter."""
        cls = cls or type(self)
        return cls(self.degree, ((p, f(c)) for p, c in self._terms.items()))

    # -- rendering ------------------------------------------------------------

    def to_text(self) -> str:
        """Deterministic rendering, terms sorted by rank: ``3·[1,2,3] − 1·[2,1,3]``."""
        if not self._terms:
            return "0"
        parts = []
        for p in self.support():
            c = self._terms[p]
            text, negative = _coefficient_text(c)
            sign = "−" if negative else "+"
            parts.append((sign, f"{text}·{p}"))
        first_sign, first = parts[0]
        out = ("−" if first_sign == "−" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list[list]:
        return [[list(p), _coefficient_json(self._terms[p])] for p in self.support()]

    @classmethod
    def from_json(cls, degree: int, data, coefficient_parser=None):
        coefficient_parser = coefficient_parser or parse_coefficient
        return cls(degree, ((Permutation(p), coefficient_parser(c)) for p, c in data))

    @classmethod
    def parse(cls, degree: int, text: str):
        """Inverse of :meth:`to_text` for integer and rational coefficients."""
        text = text.strip()
        if text == "0":
            return cls.zero(degree)
        terms = []
        for sign, coef, perm in _TERM.findall(text):
            c = parse_coefficient(coef)
            terms.append((parse_permutation(perm), -c if sign == "−" else c))
        element = cls(degree, terms)
        if element.to_text() != text:
            raise ValueError(f"cannot parse group algebra element from {text!r}")
        return element

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.degree}, {self.to_text()})"


_TERM = re.compile(r"(−?)\s*([0-9/]+)·(\[[0-9,]+\])")


def _coefficient_text(c) -> tuple[str, bool]:
    if isinstance(c, Rational):
        return str(abs(c)), c < 0
    text = str(c)
    return (f"({text})" if any(ch in text for ch in "+−- ") else text), False


def _coefficient_json(c):
    if isinstance(c, Rational):
        return str(c)
    to_json = getattr(c, "to_json", None)
    return to_json() if to_json else str(c)


def parse_coefficient(text: str):
    """Parse ``"3"``, ``"-2"`` or ``"5/7"`` into an ``int`` or ``Fraction``."""
    value = Fraction(str(text))
    return value.numerator if value.denominator == 1 else value


def linear_combine(pairs: Iterable[tuple[Any, GroupAlgebraElement]]) -> GroupAlgebraElement:
    """``sum(c * x for c, x in pairs)`` with degree checking."""
    pairs = list(pairs)
    if not pairs:
        raise ValueError("linear_combine needs at least one term to fix the degree")
    degree = pairs[0][1].degree
    cls = type(pairs[0][1])
    acc: dict[Permutation, Any] = {}
    for c, x in pairs:
        if x.degree != degree:
            raise ValueError(f"degree mismatch: {degree} vs {x.degree}")
        for p, a in x.items():
            acc[p] = acc[p] + c * a if p in acc else c * a
    return cls._from_dict(degree, {p: c for p, c in acc.items() if c})


def multiply(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    return a * b


def commutator(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """``[a, b] = ab - ba``."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} vs {b.degree}")
    return a * b - b * a


def power(a: GroupAlgebraElement, m: int) -> GroupAlgebraElement:
    """``a**m`` by repeated right multiplication; ``a**0`` is the unit."""
    if m < 0:
        raise ValueError("negative powers are not supported")
    result = a.one(a.degree)
    for _ in range(m):
        if not result:
            break
        result = result * a
    return result
