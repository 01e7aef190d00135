"""
The algebra generated by the shuffles
=====================================

Closes {t_1, ..., t_n} under multiplication and prints its dimension,
next to the dimension of the whole group algebra.
"""

import math

from s2b.exactla import subalgebra_closure
from s2b.shuffles import family

for n in range(1, 7):
    result = subalgebra_closure(n, list(family(n)))
    print(f"n={n}: dim {result.dimension:>3} of {math.factorial(n):>3} (ranks by pass {result.rank_after_pass})")
