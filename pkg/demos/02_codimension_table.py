"""
Codimension table for cubic n-folds
===================================

dim(T), the range of codimensions, L and M are computed; CS, QS, V are
stored constants.
"""

from hodgeloci import hodge_numbers, table1
from hodgeloci.cli import render_table
from hodgeloci.enumerative import c_underline_a, codim_VZ, fano_dim, min_codim

print(render_table(table1([4, 6, 8, 10, 12]), "md"))

# L two ways: closed form and inclusion-exclusion over 1^{k+1} 2^{k+1}
for n in (4, 6, 8, 10, 12):
    k = n // 2
    print(n, min_codim(n), c_underline_a(n, 3, [1] * (k + 1) + [2] * (k + 1)), codim_VZ(n, 3, k - 3))

# Hodge numbers beyond the table
print("n=14:", hodge_numbers(14, 3))

# planes of dimension n/2 - 1 on a generic cubic: finitely many exactly at n = 10
print([(n, fano_dim(n, 1, 3, n // 2 - 1)) for n in range(4, 17, 2)])
