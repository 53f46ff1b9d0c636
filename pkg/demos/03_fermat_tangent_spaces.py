"""
Tangent spaces at the Fermat cubic
==================================

Two linear cycles P, P' meeting in a P^{n/2-3}.  The tangent space of the
locus where Z = r P + rr P' stays Hodge is (J : r P1 + rr P2)_3; the
tangent space of V_Z is the intersection of (J : P1)_3 and (J : P2)_3.
"""

from hodgeloci import LinearCycleSpec, prop_A1_report
from hodgeloci.fermat_hodge import (
    ag_ideal_piece,
    fermat_ring,
    linear_cycle_equations,
    linear_cycle_polys,
    pencil_check,
    subspace_polys,
    zero_locus,
)

for n in (6, 8, 10):
    rep = prop_A1_report(LinearCycleSpec(n), 1, 1)
    print(f"n={n}: codim T V_Z = {rep.codim_TVZ}, codim T V_[Z] = {rep.codim_TVZcycle}")

# every two members of the pencil meet in T V_Z
print("pencil:", pencil_check(LinearCycleSpec(6), [(1, 1), (1, 2), (2, 1)]))

# the degree-one part of the Artinian Gorenstein ideal recovers the cycle
spec = LinearCycleSpec(6)
R = fermat_ring(spec)
P1 = linear_cycle_polys(spec, R)[3]
lin = subspace_polys(R, ag_ideal_piece(spec, P1, 1), 1)
for g in lin:
    print("  ", g)
print("same plane:", zero_locus(R, lin) == zero_locus(R, linear_cycle_equations(spec, 1, R)))
