"""
Singular cubics: cone or rational
=================================

"""

import random

from hodgeloci import PolyRing
from hodgeloci.singular_cubics import (
    birational_map,
    decompose,
    line_through_sings,
    pullback,
    random_two_node_cubic,
    sing_equations,
)

R = PolyRing(4)
f = R.parse("x0*x1*x2 + x1^3 + x2^3 + x3^3")
sc = decompose(f)
print("f2 =", sc.f2, "  f3 =", sc.f3)
print("inverse of projection:", [str(g) for g in birational_map(sc)])
print("pullback vanishes:", pullback(sc).is_zero())
print("Sing(X):", [str(g) for g in sing_equations(sc)])

# a cone over a plane cubic
print("cone:", decompose(R.parse("x1^3 + x2^3 + x3^3")).is_cone)

# a cubic with two nodes contains the line through them
f, p, q = random_two_node_cubic(3, random.Random(0))
print("nodes", p, q, "line on X:", line_through_sings(f, p, q))
