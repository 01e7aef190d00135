"""Permutations of ``[n] = {1, ..., n}`` in one-line notation.

Products are taken in the "continental" order, ``(p * q)(i) = p(q(i))``.

>>> p = cycle(3, [1, 2, 3])
>>> p
Permutation([2, 3, 1])
>>> p * cycle(3, [1, 2])
Permutation([3, 2, 1])
>>> rank(p), unrank(3, rank(p)) == p
(3, True)
"""

from __future__ import annotations

import itertools
import math
import re
from collections.abc import Iterable, Iterator, Sequence

__all__ = [
    "Permutation",
    "identity",
    "compose",
    "cycle",
    "arrow",
    "simple_transposition",
    "inverse",
    "rank",
    "unrank",
    "coxeter_length",
    "embed",
    "all_permutations",
    "parse",
]


class Permutation(tuple):
    """A bijection of ``[n]``, stored as the tuple ``(p(1), ..., p(n))``.

    Permutations are immutable and hash like tuples. ``p * q`` composes,
    ``p(i)`` evaluates.
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int]) -> Permutation:
        images = tuple(int(x) for x in images)
        n = len(images)
        if n == 0:
            raise ValueError("a permutation needs a positive degree")
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"{list(images)} is not a rearrangement of 1..{n}")
        return tuple.__new__(cls, images)

    @classmethod
    def _trusted(cls, images: Iterable[int]) -> Permutation:
        # callers guarantee bijectivity
        return tuple.__new__(cls, images)

    @property
    def degree(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self):
            raise ValueError(f"{i} is outside [1, {len(self)}]")
        return self[i - 1]

    def __mul__(self, other):
        if isinstance(other, Permutation):
            return compose(self, other)
        return NotImplemented

    def __rmul__(self, other):
        return NotImplemented

    def __add__(self, other):
        return NotImplemented

    def __radd__(self, other):
        return NotImplemented

    def inverse(self) -> Permutation:
        return inverse(self)

    def is_identity(self) -> bool:
        return all(x == i for i, x in enumerate(self, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial disjoint cycles, each starting at its smallest entry."""
        seen = set()
        out = []
        for start in range(1, len(self) + 1):
            if start in seen or self[start - 1] == start:
                continue
            cyc = [start]
            seen.add(start)
            x = self[start - 1]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self[x - 1]
            out.append(tuple(cyc))
        return out

    def one_line(self) -> str:
        return "one-line: " + str(self)

    def cycle_string(self) -> str:
        """Render as a product of disjoint cycles, e.g. ``cyc(1,2,3)``."""
        cycles = self.cycles()
        if not cycles:
            return "id"
        return "".join("cyc(" + ",".join(map(str, c)) + ")" for c in cycles)

    def __str__(self) -> str:
        return "[" + ",".join(map(str, self)) + "]"

    def __repr__(self) -> str:
        return f"Permutation([{', '.join(map(str, self))}])"


def identity(n: int) -> Permutation:
    if n < 1:
        raise ValueError("degree must be positive")
    return Permutation._trusted(range(1, n + 1))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Return ``p * q``, the map ``i -> p(q(i))``."""
    if len(p) != len(q):
        raise ValueError(f"degree mismatch: {len(p)} vs {len(q)}")
    return Permutation._trusted([p[i - 1] for i in q])


def cycle(n: int, support: Sequence[int]) -> Permutation:
    """The cycle sending ``support[0] -> support[1] -> ... -> support[0]``."""
    support = [int(x) for x in support]
    if len(set(support)) != len(support):
        raise ValueError(f"cycle support {support} has repeated entries")
    if any(not 1 <= x <= n for x in support):
        raise ValueError(f"cycle support {support} leaves [1, {n}]")
    images = list(range(1, n + 1))
    for a, b in zip(support, support[1:] + support[:1]):
        images[a - 1] = b
    return Permutation._trusted(images)


def arrow(n: int, v: int, w: int) -> Permutation:
    """The cycle ``v -> v+1 -> ... -> w -> v`` (identity when ``v == w``)."""
    if not 1 <= v <= w <= n:
        raise ValueError(f"arrow needs 1 <= v <= w <= n, got v={v}, w={w}, n={n}")
    images = list(range(1, n + 1))
    for k in range(v, w):
        images[k - 1] = k + 1
    images[w - 1] = v
    return Permutation._trusted(images)


def simple_transposition(n: int, i: int) -> Permutation:
    """``s_i``, swapping ``i`` and ``i + 1``."""
    if not 1 <= i < n:
        raise ValueError(f"s_{i} is undefined in S_{n}")
    return arrow(n, i, i + 1)


def inverse(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for i, x in enumerate(p, 1):
        out[x - 1] = i
    return Permutation._trusted(out)


def rank(p: Permutation) -> int:
    """Position of ``p`` among all of ``S_n`` in lexicographic order (Lehmer code)."""
    n = len(p)
    r = 0
    for i in range(n):
        smaller = sum(1 for x in p[i + 1:] if x < p[i])
        r = r * (n - i) + smaller
    return r


def unrank(n: int, r: int) -> Permutation:
    """Inverse of :func:`rank`."""
    if n < 1:
        raise ValueError("degree must be positive")
    if not 0 <= r < math.factorial(n):
        raise ValueError(f"rank {r} is outside [0, {n}! - 1]")
    digits = []
    for base in range(1, n + 1):
        r, d = divmod(r, base)
        digits.append(d)
    remaining = list(range(1, n + 1))
    return Permutation._trusted(remaining.pop(d) for d in reversed(digits))


def coxeter_length(p: Permutation) -> int:
    """Number of inversions ``i < j`` with ``p(i) > p(j)``."""
    return sum(1 for a, b in itertools.combinations(p, 2) if a > b)


def embed(p: Permutation, m: int) -> Permutation:
    """Extend ``p`` to ``S_m`` by fixing ``n+1, ..., m``."""
    if m < len(p):
        raise ValueError(f"cannot embed S_{len(p)} into S_{m}")
    return Permutation._trusted(tuple(p) + tuple(range(len(p) + 1, m + 1)))


def all_permutations(n: int) -> Iterator[Permutation]:
    """All of ``S_n`` in lexicographic (= rank) order."""
    for images in itertools.permutations(range(1, n + 1)):
        yield Permutation._trusted(images)


_ONE_LINE = re.compile(r"^\s*(?:one-line:\s*)?\[\s*([0-9,\s]*)\]\s*$")


def parse(text: str) -> Permutation:
    """Parse ``"[2,3,1]"`` or ``"one-line: [2,3,1]"``."""
    m = _ONE_LINE.match(text)
    if not m:
        raise ValueError(f"cannot parse permutation from {text!r}")
    return Permutation(int(x) for x in m.group(1).split(",") if x.strip())
