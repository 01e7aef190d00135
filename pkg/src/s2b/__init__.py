"""Exact computations with somewhere-to-below shuffles in k[S_n]."""

from .galg import GroupAlgebraElement, commutator, linear_combine, multiply, power
from .perm import Permutation, arrow, cycle, identity, simple_transposition
from .shuffles import b_product, family, minimal_polynomial_eval, one_sided, shuffle

__version__ = "0.1.0"

__all__ = [
    "GroupAlgebraElement",
    "Permutation",
    "arrow",
    "b_product",
    "commutator",
    "cycle",
    "family",
    "identity",
    "linear_combine",
    "minimal_polynomial_eval",
    "multiply",
    "one_sided",
    "power",
    "shuffle",
    "simple_transposition",
]
