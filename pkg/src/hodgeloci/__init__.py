"""Exact computations around Hodge loci of cubic hypersurfaces.

Arithmetic is exact over cyclotomic fields Q(zeta_m).  The layers are
``numberfield`` (fields), ``polyring`` (sparse polynomials), ``linalg``
(exact subspaces), ``gradedideal`` (graded pieces, Groebner bases, colon
ideals), and on top of them ``fermat_hodge`` (tangent spaces at the Fermat
cubic), ``enumerative`` (closed-form codimensions), ``kloosterman`` (period
matrix ranks) and ``singular_cubics``.
"""

from .errors import (
    AmbientMismatch,
    ConeCase,
    FieldMismatch,
    HodgeLociError,
    InverseOfZero,
    MathError,
    NotHomogeneous,
    NotSingularAt,
    NotZeroDimensional,
    ParseError,
    RingMismatch,
    SingularHypersurface,
    SizeMismatch,
    UnsupportedDegree,
)
from .numberfield import QQ, CycField, CycNum, cyclotomic_field, zeta_pow
from .polyring import Poly, PolyRing, parse_poly, print_poly
from .linalg import Mat, Subspace, kernel_basis, rank
from .gradedideal import GradedIdeal, colon_piece, hilbert_function, jacobian_ideal, normal_form
from .fermat_hodge import (
    FermatSpec,
    LinearCycleSpec,
    hodge_numbers,
    prop_A1_report,
    tangent_hodge_locus,
    tangent_VZ,
)
from .enumerative import c_underline_a, codim_VZ, fano_dim, min_codim, table1
from .kloosterman import FamilySpec, rank_pipeline, stacked_rank
from .singular_cubics import birational_map, decompose, line_through_sings, sing_equations

__version__ = "0.1.0"
