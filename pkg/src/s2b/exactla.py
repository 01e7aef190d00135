"""Exact linear algebra on the n!-dimensional coordinate space of k[S_n].

Coordinates are indexed by permutation rank (lexicographic order). Vectors
hold exact integers or rationals: ``int64`` is used only while a bound proves
that no intermediate value can overflow, otherwise arithmetic moves to Python
integers (``dtype=object``). No floating point is ever involved.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from numbers import Integral, Rational
from typing import Iterable, Sequence

import numpy as np

from .galg import GroupAlgebraElement
from .perm import Permutation
from .shuffles import family

__all__ = [
    "Coordinates",
    "coordinates",
    "DenseVector",
    "EchelonBasis",
    "ClosureResult",
    "span_basis",
    "member",
    "principal_right_ideal",
    "right_multiple_of",
    "left_ideal",
    "left_ideal_member",
    "subalgebra_closure",
    "subalgebra_dimension",
    "quadratic_span_dimension",
    "dimension_table_csv",
]

# int64 is used only while every intermediate magnitude stays below this
_SAFE = 1 << 62


class Coordinates:
    """Rank indexing of ``S_n`` plus the index maps of left/right translation."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("degree must be positive")
        self.degree = n
        self.size = math.factorial(n)
        # rows of 0-based one-line notations, lexicographic
        perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
        self.perms = perms.astype(np.int64)
        self._weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
        self._codes = self.perms @ self._weights

    def rank_rows(self, rows: np.ndarray) -> np.ndarray:
        """Ranks of a stack of 0-based one-line notations."""
        return np.searchsorted(self._codes, rows @ self._weights).astype(np.int32)

    def permutation(self, r: int) -> Permutation:
        return Permutation._trusted((self.perms[r] + 1).tolist())

    def rank(self, p: Permutation) -> int:
        return int(self.rank_rows(np.asarray(p, dtype=np.int64)[None, :] - 1)[0])

    def right_index(self, p: Permutation) -> np.ndarray:
        """``idx[r] = rank(perm_r * p)``."""
        return _right_index(self.degree, tuple(p))

    def left_index(self, p: Permutation) -> np.ndarray:
        """``idx[r] = rank(p * perm_r)``."""
        return _left_index(self.degree, tuple(p))


@lru_cache(maxsize=None)
def coordinates(n: int) -> Coordinates:
    return Coordinates(n)


@lru_cache(maxsize=256)
def _right_index(n: int, p: tuple) -> np.ndarray:
    c = coordinates(n)
    cols = np.asarray(p, dtype=np.int64) - 1
    out = c.rank_rows(c.perms[:, cols])
    out.setflags(write=False)
    return out


@lru_cache(maxsize=256)
def _left_index(n: int, p: tuple) -> np.ndarray:
    c = coordinates(n)
    table = np.asarray(p, dtype=np.int64) - 1
    out = c.rank_rows(table[c.perms])
    out.setflags(write=False)
    return out


def _max_abs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    return int(max(a.max(), -a.min()))


def _integer_array(values: Sequence) -> np.ndarray:
    arr = np.array(list(values), dtype=object) if not isinstance(values, np.ndarray) else values
    if arr.dtype != object:
        return arr.astype(np.int64)
    if arr.size and _max_abs(arr) < _SAFE:
        return arr.astype(np.int64)
    return arr


class DenseVector:
    """Coordinates of an element of k[S_n], indexed by permutation rank."""

    __slots__ = ("degree", "entries")

    def __init__(self, degree: int, entries: np.ndarray):
        if len(entries) != math.factorial(degree):
            raise ValueError(f"expected {math.factorial(degree)} entries, got {len(entries)}")
        self.degree = degree
        self.entries = entries

    @classmethod
    def zeros(cls, n: int) -> DenseVector:
        return cls(n, np.zeros(math.factorial(n), dtype=np.int64))

    @classmethod
    def from_element(cls, x: GroupAlgebraElement) -> DenseVector:
        n = x.degree
        c = coordinates(n)
        coefs = [v for _, v in x.items()]
        integral = all(isinstance(v, Integral) for v in coefs)
        if integral and all(abs(v) < _SAFE for v in coefs):
            out = np.zeros(c.size, dtype=np.int64)
        else:
            out = np.zeros(c.size, dtype=object)
            out[:] = 0
        for p, v in x.items():
            out[c.rank(p)] = v
        return cls(n, out)

    def to_element(self) -> GroupAlgebraElement:
        c = coordinates(self.degree)
        terms = {}
        for r in np.flatnonzero(self.entries).tolist():
            v = self.entries[r]
            v = int(v) if isinstance(v, (np.integer, Integral)) else v
            terms[c.permutation(r)] = v
        return GroupAlgebraElement._from_dict(self.degree, terms)

    def is_zero(self) -> bool:
        return not np.any(self.entries)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, DenseVector):
            return NotImplemented
        return self.degree == other.degree and bool(np.all(self.entries == other.entries))

    __hash__ = None

    def max_abs(self) -> int:
        return _max_abs(self.entries)

    def _with_headroom(self, factor: int) -> np.ndarray:
        e = self.entries
        if e.dtype != object and self.max_abs() * factor >= _SAFE:
            return e.astype(object)
        return e

    def __add__(self, other: DenseVector) -> DenseVector:
        a, b = self._with_headroom(2), other._with_headroom(2)
        return DenseVector(self.degree, a + b)

    def __sub__(self, other: DenseVector) -> DenseVector:
        a, b = self._with_headroom(2), other._with_headroom(2)
        return DenseVector(self.degree, a - b)

    def __neg__(self) -> DenseVector:
        return DenseVector(self.degree, -self.entries)

    def scale(self, c) -> DenseVector:
        if isinstance(c, Integral):
            return DenseVector(self.degree, self._with_headroom(abs(int(c)) + 1) * int(c))
        return DenseVector(self.degree, self.entries.astype(object) * c)

    def _translate(self, y: GroupAlgebraElement, side: str) -> DenseVector:
        if y.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {y.degree}")
        coefs = [c for _, c in y.items()]
        if all(isinstance(c, Integral) for c in coefs):
            x = self._with_headroom(sum(abs(c) for c in coefs) + 1)
        else:
            x = self.entries.astype(object)
        out = np.zeros_like(x)
        if x.dtype == object:
            out[:] = 0
        coords = coordinates(self.degree)
        index = coords.right_index if side == "right" else coords.left_index
        for p, c in y.items():
            # basis vector r moves to idx[r]; idx is a bijection
            out[index(p)] += x if c == 1 else c * x
        return DenseVector(self.degree, out)

    def right_mul(self, y: GroupAlgebraElement) -> DenseVector:
        """``self * y``."""
        return self._translate(y, "right")

    def left_mul(self, y: GroupAlgebraElement) -> DenseVector:
        """``y * self``."""
        return self._translate(y, "left")

    def right_mul_commutator(self, a: GroupAlgebraElement, b: GroupAlgebraElement) -> DenseVector:
        """``self * [a, b]`` computed as ``(self a) b - (self b) a``."""
        return self.right_mul(a).right_mul(b) - self.right_mul(b).right_mul(a)

    def __repr__(self) -> str:
        return f"DenseVector({self.degree}, nonzero={int(np.count_nonzero(self.entries))})"


def _as_vector(x, n: int) -> np.ndarray:
    if isinstance(x, GroupAlgebraElement):
        if x.degree != n:
            raise ValueError(f"degree mismatch: {n} vs {x.degree}")
        x = DenseVector.from_element(x)
    if isinstance(x, DenseVector):
        if x.degree != n:
            raise ValueError(f"degree mismatch: {n} vs {x.degree}")
        x = x.entries
    x = np.asarray(x)
    if x.dtype == object:
        vals = x.tolist()
        if any(not isinstance(v, Integral) for v in vals):
            # clear denominators; membership is invariant under scaling
            fr = [Fraction(v) for v in vals]
            lcm = math.lcm(*(f.denominator for f in fr)) if fr else 1
            vals = [int(f * lcm) for f in fr]
        return _integer_array(vals)
    return x.astype(np.int64)


class EchelonBasis:
    """A growing family of vectors kept in reduced row-echelon form.

    Row ``k`` is stored as an integer numerator vector over a positive
    denominator ``d_k``; its entry at its pivot equals ``d_k`` (so the rational
    pivot is 1), and every other row vanishes at that pivot.
    """

    def __init__(self, degree: int):
        self.degree = degree
        self.size = math.factorial(degree)
        self.pivots: list[int] = []
        # row storage grows geometrically; _num is a view of the filled rows
        self._buf = np.zeros((0, self.size), dtype=np.int64)
        self._den: list[int] = []
        self._row_max: list[int] = []

    @property
    def _num(self) -> np.ndarray:
        return self._buf[: len(self.pivots)]

    def _to_object(self) -> None:
        if self._buf.dtype != object:
            self._buf = self._buf.astype(object)

    def _append(self, w: np.ndarray) -> None:
        r = len(self.pivots)
        if r == len(self._buf):
            grown = np.zeros((max(8, 2 * r), self.size), dtype=self._buf.dtype)
            if grown.dtype == object:
                grown[:] = 0
            grown[:r] = self._buf[:r]
            self._buf = grown
        self._buf[r] = w

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def __len__(self) -> int:
        return len(self.pivots)

    def _residue(self, v: np.ndarray) -> np.ndarray:
        """``L * (v - projection of v)`` for a positive integer ``L``."""
        if not self.pivots:
            return v
        c = v[self.pivots]
        used = np.flatnonzero(c)
        if used.size == 0:
            return v
        dens = [self._den[k] for k in used.tolist()]
        lcm = math.lcm(*dens)
        coef = [int(c[k]) * (lcm // d) for k, d in zip(used.tolist(), dens)]
        rows = self._num[used]
        bound = lcm * _max_abs(v) + sum(abs(x) for x in coef) * max(self._row_max[k] for k in used.tolist())
        if bound < _SAFE and rows.dtype != object and v.dtype != object:
            return lcm * v - np.asarray(coef, dtype=np.int64) @ rows
        return lcm * v.astype(object) - np.asarray(coef, dtype=object) @ rows.astype(object)

    def reduce(self, x) -> np.ndarray:
        """A nonzero multiple of ``x`` minus its projection onto the span."""
        return self._residue(_as_vector(x, self.degree))

    def contains(self, x) -> bool:
        return not np.any(self.reduce(x))

    __contains__ = contains

    def insert(self, x) -> bool:
        """Add ``x`` to the span; return whether the rank grew."""
        w = self.reduce(x)
        nz = np.flatnonzero(w)
        if nz.size == 0:
            return False
        p = int(nz[0])
        w = w // _content(w)
        if w[p] < 0:
            w = -w
        wp = int(w[p])
        w_max = _max_abs(w)
        if w.dtype == object:
            self._to_object()
        elif self._buf.dtype == object:
            w = w.astype(object)
        num = self._num
        touched = np.flatnonzero(num[:, p])
        if touched.size and num.dtype != object:
            # rows whose update provably fits in int64 are done in one shot
            ck = num[touched, p]
            safe = np.array(
                [self._row_max[k] * wp + abs(int(c)) * w_max < _SAFE for k, c in zip(touched.tolist(), ck.tolist())]
            )
            if safe.any():
                self._eliminate_int64(touched[safe], ck[safe], w, wp)
            touched = touched[~safe]
        if touched.size:
            self._eliminate_object(touched, w, wp, p)
        self._append(w)
        self.pivots.append(p)
        self._den.append(wp)
        self._row_max.append(w_max)
        if self._buf.dtype == object and max(self._row_max) < _SAFE:
            self._buf = self._buf.astype(np.int64)
        return True

    def _eliminate_int64(self, touched: np.ndarray, ck: np.ndarray, w: np.ndarray, wp: int) -> None:
        num = self._num
        new = num[touched] * wp - ck[:, None] * w
        dk = np.array([self._den[k] for k in touched.tolist()], dtype=np.int64) * wp
        g = np.gcd(np.gcd.reduce(np.abs(new), axis=1), dk)
        new //= g[:, None]
        num[touched] = new
        for k, d, m in zip(touched.tolist(), (dk // g).tolist(), np.abs(new).max(axis=1).tolist()):
            self._den[k] = d
            self._row_max[k] = m

    def _eliminate_object(self, touched: np.ndarray, w: np.ndarray, wp: int, p: int) -> None:
        w = w.astype(object)
        results = []
        for k in touched.tolist():
            row = self._num[k].astype(object)
            new = row * wp - int(row[p]) * w
            dk = self._den[k] * wp
            gk = math.gcd(_content(new), dk)
            new = new // gk
            results.append((k, new, dk // gk, _max_abs(new)))
        if self._buf.dtype != object and any(m >= _SAFE for *_, m in results):
            self._to_object()
        num = self._num
        for k, new, d, m in results:
            num[k] = new
            self._den[k] = d
            self._row_max[k] = m

    def extend(self, xs: Iterable) -> int:
        """Insert every vector; return how many raised the rank."""
        return sum(1 for x in xs if self.insert(x))

    def rows(self) -> list[DenseVector]:
        """The echelon rows with exact rational entries."""
        out = []
        for k in range(self.rank):
            d = self._den[k]
            num = self._num[k].tolist()
            vals = np.empty(self.size, dtype=object)
            vals[:] = [Fraction(int(v), d) if d != 1 else int(v) for v in num]
            out.append(DenseVector(self.degree, vals))
        return out

    def __repr__(self) -> str:
        return f"EchelonBasis(degree={self.degree}, rank={self.rank})"


def _content(w: np.ndarray) -> int:
    """gcd of the entries (positive)."""
    if w.dtype != object:
        return int(np.gcd.reduce(np.abs(w[w != 0]))) or 1
    g = 0
    for v in w.tolist():
        if v:
            g = math.gcd(g, v)
            if g == 1:
                break
    return g or 1


def _degree_of(xs: Sequence, fallback=None) -> int:
    for x in xs:
        return x.degree
    if fallback is not None:
        return fallback.degree
    raise ValueError("cannot infer the degree of an empty family")


def span_basis(span: Sequence[GroupAlgebraElement], degree: int | None = None) -> EchelonBasis:
    n = degree if degree is not None else _degree_of(span)
    basis = EchelonBasis(n)
    for x in span:
        if x.degree != n:
            raise ValueError(f"degree mismatch: {n} vs {x.degree}")
        basis.insert(x)
    return basis


def member(span: Sequence[GroupAlgebraElement], x: GroupAlgebraElement) -> bool:
    """Whether ``x`` lies in the rational span of ``span``."""
    return span_basis(span, x.degree).contains(x)


def principal_right_ideal(y: GroupAlgebraElement) -> EchelonBasis:
    """Echelon basis of ``y * A`` as the span of ``y * w`` over ``w`` in ``S_n``."""
    n = y.degree
    coords = coordinates(n)
    base = DenseVector.from_element(y).entries
    basis = EchelonBasis(n)
    for r in range(coords.size):
        out = np.zeros_like(base)
        out[coords.right_index(coords.permutation(r))] = base
        basis.insert(out)
        if basis.rank == coords.size:
            break
    return basis


def right_multiple_of(x: GroupAlgebraElement, y: GroupAlgebraElement) -> bool:
    """Whether ``x = y * z`` for some ``z`` in k[S_n] (over the rationals)."""
    if x.degree != y.degree:
        raise ValueError(f"degree mismatch: {x.degree} vs {y.degree}")
    return principal_right_ideal(y).contains(x)


def left_ideal(generators: Sequence[GroupAlgebraElement], degree: int) -> EchelonBasis:
    """Echelon basis of ``sum(A * g)``, spanned by ``w * g``."""
    coords = coordinates(degree)
    basis = EchelonBasis(degree)
    for g in generators:
        if g.degree != degree:
            raise ValueError(f"degree mismatch: {degree} vs {g.degree}")
        base = DenseVector.from_element(g).entries
        for r in range(coords.size):
            if basis.rank == coords.size:
                return basis
            out = np.zeros_like(base)
            out[coords.left_index(coords.permutation(r))] = base
            basis.insert(out)
    return basis


def left_ideal_member(generators: Sequence[GroupAlgebraElement], x: GroupAlgebraElement) -> bool:
    return left_ideal(generators, x.degree).contains(x)


@dataclass
class ClosureResult:
    """Outcome of a subalgebra closure run."""

    degree: int
    dimension: int
    passes: int
    rank_after_pass: list[int] = field(default_factory=list)
    basis: EchelonBasis | None = field(default=None, repr=False)


def subalgebra_closure(
    n: int, generators: Sequence[GroupAlgebraElement], side: str = "right"
) -> ClosureResult:
    """Close ``{1} | generators`` under multiplication by the generators.

    Every element that enlarges the span is multiplied by every generator
    exactly once (on the chosen side); the loop stops after a pass that adds
    nothing. ``rank_after_pass[0]`` is the rank of the seed family.
    """
    if side not in ("right", "left"):
        raise ValueError("side must be 'right' or 'left'")
    for g in generators:
        if g.degree != n:
            raise ValueError(f"degree mismatch: {n} vs {g.degree}")
    basis = EchelonBasis(n)
    frontier = []
    for x in [GroupAlgebraElement.one(n), *generators]:
        v = DenseVector.from_element(x)
        if basis.insert(v):
            frontier.append(v)
    ranks = [basis.rank]
    passes = 0
    while frontier:
        passes += 1
        new = []
        for v in frontier:
            for g in generators:
                w = v.right_mul(g) if side == "right" else v.left_mul(g)
                if basis.insert(w):
                    new.append(w)
        ranks.append(basis.rank)
        frontier = new
    return ClosureResult(n, basis.rank, passes, ranks, basis)


def subalgebra_dimension(n: int, generators: Sequence[GroupAlgebraElement], side: str = "right") -> int:
    """Dimension over the rationals of the unital subalgebra generated."""
    return subalgebra_closure(n, generators, side).dimension


def quadratic_span_dimension(n: int) -> int:
    """Rank of ``{t_i t_j : i, j in [n]}``."""
    t = family(n)
    basis = EchelonBasis(n)
    for i in range(1, n + 1):
        vi = DenseVector.from_element(t[i])
        for j in range(1, n + 1):
            basis.insert(vi.right_mul(t[j]))
    return basis.rank


def dimension_table_csv(rows: Iterable[tuple[int, int]]) -> str:
    lines = ["n,dim"] + [f"{n},{d}" for n, d in rows]
    return "\n".join(lines) + "\n"
