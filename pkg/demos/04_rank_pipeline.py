"""
Period-matrix ranks away from the Fermat point
==============================================

f = sum l_i g_i contains {l_i = 0}; detjac of (l, g) gives its period
polynomial.  The rank of Pd * R_i modulo J, R_i running over the degree-3
quotient basis, is the codimension of T V_[Z].
"""

import time

from hodgeloci import FamilySpec, rank_pipeline, stacked_rank
from hodgeloci.kloosterman import prepare

# Fermat, n = 6: 7 for the sum of two cycles, 8 for both separately
spec = FamilySpec(6, "fermat")
prep = prepare(spec)
print("fermat n=6:", [rank_pipeline(spec.with_ab(a, b), prepared=prep).rank
                      for a, b in [(1, 1), (1, 0), (1, -1)]], stacked_rank(spec, prepared=prep))

# a random member of the n = 6 family (seed 2 is smooth)
t = time.time()
spec = FamilySpec(6, "random", seed=2)
prep = prepare(spec)
print("random n=6:", rank_pipeline(spec, prepared=prep).rank, stacked_rank(spec, prepared=prep),
      f"({time.time() - t:.1f}s)")

# the explicit tenfold: 39 for generic (a, b), 38 at (1, 1)
spec = FamilySpec(10, "kloosterman")
prep = prepare(spec)
for ab in [(1, 1), (1, -1), (2, 3)]:
    print("kloosterman n=10", ab, rank_pipeline(spec.with_ab(*ab), prepared=prep).rank)
print("stacked", stacked_rank(spec, prepared=prep))

# why (1, 1) drops: swapping x_i and x_{i+3} (i < 3) fixes f and sends P1 to -P2
x = prep.family.ring.gens()
swap = [x[(j + 3) % 6] if j < 6 else x[j] for j in range(12)]
print("f fixed:", prep.family.f.substitute(swap) == prep.family.f,
      " P1 -> -P2:", prep.d1.substitute(swap) == -prep.d2)
