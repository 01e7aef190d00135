"""
Shuffles in the Hecke algebra
=============================

The q-analogue of t_{i+1} t_i = (t_i - 1) t_i picks up a factor of q,
and at q = 0 the product leaves the span of 1, t_i, t_i^2.
"""

from s2b.hecke import Q, check_q0_nonmembership, hecke_family, specialize

t1, t2, t3 = hecke_family(3)
print("q t_2 t_1      =", Q * (t2 * t1))
print("(t_1 - 1) t_1  =", (t1 - 1) * t1)

# q = 1 recovers the group algebra
print("at q = 1:", specialize(t2 * t1, 1))

for n in (3, 4, 5):
    outside, rows = check_q0_nonmembership(n)
    print(f"n={n}, q=0:", {i: ("outside" if f else "inside") for i, f in rows})
