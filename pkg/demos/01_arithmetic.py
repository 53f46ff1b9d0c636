"""
Exact arithmetic: cyclotomic numbers, polynomials, subspaces
============================================================

"""

from hodgeloci import Mat, PolyRing, Subspace, cyclotomic_field, rank

# Q(zeta_6): z^2 = z - 1, z^3 = -1
F = cyclotomic_field(6)
z = F.gen()
print("z^2 =", z * z, "  z^3 =", z ** 3, "  1/(z+1) =", (z + 1).inverse())

# polynomials over F, degrevlex order
R = PolyRing(4, F)
f = R.parse("x0^3 + x1^3 + x2^3 + x3^3")
g = R.parse("x0 - (z)*x1")
print("f =", f)
print("f restricted to x0 = z x1 ->", f.substitute([R.gen(1).scale(z), R.gen(1), R.gen(2), R.gen(3)]))

# exact rank and kernels
m = Mat.from_rows(F, [[1, z, z * z], [z, z * z, z ** 3], [1, 0, 1]])
print("rank", rank(m))
U = Subspace.from_basis(F, 3, [[1, z, 0]])
W = Subspace.from_basis(F, 3, [[1, 0, 0], [0, 1, 0]])
print("U <= W:", U <= W, " dim(U + W) =", U.sum(W).dim)
