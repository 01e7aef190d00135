"""
An unexpected right multiple
============================

At n = 6 the ideal (t_1 - 6)A has codimension one, and t_4 (t_1 - 6)
lands inside it. This recomputes the membership and checks the stored
certificate z with (t_1 - 6) z = t_4 (t_1 - 6).
"""

import json
import math
from pathlib import Path

from s2b import GroupAlgebraElement, family
from s2b.exactla import principal_right_ideal

n = 6
t = family(n)
ideal = principal_right_ideal(t[1] - 6)
print(f"rank of (t_1 - 6)A: {ideal.rank} of {math.factorial(n)}")
print("t_4 (t_1 - 6) inside:", ideal.contains(t[4] * (t[1] - 6)))

# the augmentation sum of coefficients separates every other l
for l in range(13):
    x = t[4] * (t[1] - l)
    print(f"l={l:>2}: augmentation {sum(c for _, c in x.items()):>4}")

data = json.loads((Path(__file__).parent.parent / "tests" / "data" / "right_multiple_certificate.json").read_text())
z = GroupAlgebraElement.from_json(n, data["z"])
print(f"certificate with {len(z)} terms verifies:", (t[1] - 6) * z == t[4] * (t[1] - 6))
