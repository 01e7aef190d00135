"""
A first look at the shuffles t_1, ..., t_n
==========================================

Builds the family in the group algebra of S_4, checks a few products,
and measures how quickly commutators die.
"""

from s2b import commutator, family, power
from s2b.perm import Permutation

n = 4
t = family(n)

# t_1 is the top-to-random shuffle: one cycle per landing position
print("t_1 =", t[1])
print("t_4 =", t[4])

# neighbours interact through a single correction term
lhs = t[2] * t[1]
rhs = (t[1] - 1) * t[1]
print("t_2 t_1 == (t_1 - 1) t_1:", lhs == rhs)

# every commutator is nilpotent
for i in range(1, n + 1):
    for j in range(i + 1, n + 1):
        c = commutator(t[i], t[j])
        m = 1
        while not power(c, m).is_zero():
            m += 1
        print(f"[t_{i}, t_{j}] vanishes at power {m}")

# basis elements are permutations in one-line notation
p = Permutation([2, 3, 1, 4])
print(p.one_line(), "=", p.cycle_string())
