"""Hodge loci at the Fermat variety.

At the Fermat point the tangent space of the Hodge locus of a cycle with
period polynomial P is the colon piece (J^F : P)_d, where J^F is the
Jacobian ideal <x_i^(d-1)>.  For two linear cycles P^{n/2} and its twist,
meeting in a P^{n/2-3}, the period polynomials are P_i = R_i Q with

    Q   = prod_{k >= 6 even} (x_k + z x_{k+1})
    R_1 = c1 (x0 + z x1)(x2 + z x3)(x4 + z x5)
    R_2 = c2 (x0 + z^a x1)(x2 + z^a x3)(x4 + z^a x5)

where z is a primitive 6th root of unity and a is odd.
"""

from dataclasses import dataclass, field as dc_field

from .errors import UnsupportedDegree
from .gradedideal import GradedIdeal, colon_piece
from .linalg import Subspace
from .numberfield import CycNum, cyclotomic_field, zeta_pow
from .polyring import PolyRing, count_monomials, monomials_of_degree

__all__ = [
    "FermatSpec",
    "LinearCycleSpec",
    "PeriodPolynomial",
    "TangentReport",
    "fermat_ring",
    "fermat_poly",
    "fermat_jacobian",
    "hodge_numbers",
    "linear_cycle_polys",
    "linear_cycle_equations",
    "period_polynomial",
    "tangent_hodge_locus",
    "tangent_VZ",
    "prop_A1_report",
    "pencil_check",
    "ag_ideal_piece",
    "subspace_polys",
    "zero_locus",
    "colon_Q_generators",
]


@dataclass(frozen=True)
class FermatSpec:
    n: int
    d: int = 3

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2 or self.n % 2:
            raise ValueError(f"n must be an even integer >= 2, got {self.n!r}")
        if not isinstance(self.d, int) or self.d < 3:
            raise ValueError(f"d must be an integer >= 3, got {self.d!r}")

    @property
    def nvars(self):
        return self.n + 2

    @property
    def sigma(self):
        """Socle degree of the Artinian Gorenstein ideal of a Hodge cycle."""
        return (self.n // 2 + 1) * (self.d - 2)

    @property
    def socle(self):
        """Socle degree of the Jacobian ring."""
        return (self.n + 2) * (self.d - 2)


@dataclass(frozen=True)
class LinearCycleSpec:
    n: int
    d: int = 3
    alpha: int = 3
    c1: object = 1
    c2: object = 1

    def __post_init__(self):
        FermatSpec(self.n, self.d)
        if self.d != 3:
            raise UnsupportedDegree("explicit linear-cycle polynomials exist only for cubics")
        if self.n < 6:
            raise ValueError("two linear cycles meeting in P^{n/2-3} need n >= 6")
        if self.alpha % 2 == 0 or not 3 <= self.alpha <= 2 * self.d - 1:
            raise ValueError(f"alpha must be odd in [3, {2 * self.d - 1}], got {self.alpha}")
        F = cyclotomic_field(2 * self.d)
        for c in (self.c1, self.c2):
            if not CycNum.coerce(F, c):
                raise ValueError("c1 and c2 must be nonzero")

    @property
    def fermat(self):
        return FermatSpec(self.n, self.d)


@dataclass
class PeriodPolynomial:
    """Homogeneous polynomial of degree sigma standing for the class of a cycle."""

    P: object
    provenance: tuple = ()

    def __post_init__(self):
        if not self.P:
            raise ValueError("period polynomial must be nonzero")
        self.P.homogeneous_degree()

    @property
    def degree(self):
        return self.P.homogeneous_degree()


@dataclass
class TangentReport:
    n: int
    d: int
    m: int
    r: int
    rr: int
    moduli_dim: int  # dim of the Jacobian-ring degree-d piece
    dim_TVZ: int  # inside C[x]_d
    dim_TVZcycle: int
    codim_TVZ: int
    codim_TVZcycle: int
    difference: int = dc_field(init=False)

    def __post_init__(self):
        self.difference = self.dim_TVZcycle - self.dim_TVZ

    def as_dict(self):
        return {
            "n": self.n,
            "d": self.d,
            "m": self.m,
            "r": self.r,
            "rr": self.rr,
            "moduli_dim": self.moduli_dim,
            "dim_TV_Z": self.dim_TVZ,
            "dim_TV_[Z]": self.dim_TVZcycle,
            "dim_TV_Z_codim": self.codim_TVZ,
            "dim_TV_[Z]_codim": self.codim_TVZcycle,
            "difference": self.difference,
        }


def _spec(spec):
    return spec.fermat if isinstance(spec, LinearCycleSpec) else spec


def fermat_ring(spec):
    """Ring in n+2 variables over Q(zeta_{2d})."""
    spec = _spec(spec)
    return PolyRing(spec.nvars, cyclotomic_field(2 * spec.d))


def fermat_poly(spec, ring=None):
    spec = _spec(spec)
    ring = ring or fermat_ring(spec)
    exps = []
    for i in range(spec.nvars):
        e = [0] * spec.nvars
        e[i] = spec.d
        exps.append((tuple(e), 1))
    return ring.from_terms(exps)


def fermat_jacobian(spec, ring=None):
    """J^F = <x_0^(d-1), ..., x_{n+1}^(d-1)> (the common factor d removed)."""
    spec = _spec(spec)
    ring = ring or fermat_ring(spec)
    gens = []
    for i in range(spec.nvars):
        e = [0] * spec.nvars
        e[i] = spec.d - 1
        gens.append(ring.monomial(tuple(e)))
    return GradedIdeal(ring, gens)


def hodge_numbers(n, d):
    """h^{n,0}, ..., h^{0,n} of a smooth degree-d hypersurface of dimension n.

    The primitive part h^{n-k+1,k-1} counts monomials of degree k d - n - 2
    with exponents at most d - 2; the middle entry gets the polarization.
    """
    FermatSpec(n, d)
    out = [count_monomials(n + 2, k * d - n - 2, cap=d - 2) for k in range(1, n + 2)]
    out[n // 2] += 1
    return out


def _linear(ring, coeffs):
    terms = []
    for i, c in coeffs:
        e = [0] * ring.nvars
        e[i] = 1
        terms.append((tuple(e), c))
    return ring.from_terms(terms)


def linear_cycle_polys(spec, ring=None):
    """(Q, R1, R2, P1, P2) for the pair of linear cycles."""
    if not isinstance(spec, LinearCycleSpec):
        raise TypeError("expected a LinearCycleSpec")
    ring = ring or fermat_ring(spec)
    F = ring.field
    z = zeta_pow(F, 1)
    za = zeta_pow(F, spec.alpha)
    Q = ring.one()
    for k in range(6, spec.n + 1, 2):
        Q = Q * _linear(ring, [(k, 1), (k + 1, z)])
    R1 = ring.const(spec.c1)
    R2 = ring.const(spec.c2)
    for i in range(3):
        R1 = R1 * _linear(ring, [(2 * i, 1), (2 * i + 1, z)])
        R2 = R2 * _linear(ring, [(2 * i, 1), (2 * i + 1, za)])
    return Q, R1, R2, R1 * Q, R2 * Q


def linear_cycle_equations(spec, which=1, ring=None):
    """Linear forms cutting out P^{n/2} (which=1) or its twist (which=2)."""
    ring = ring or fermat_ring(spec)
    F = ring.field
    z = zeta_pow(F, 1)
    zt = zeta_pow(F, spec.alpha if which == 2 else 1)
    out = []
    for k in range(0, spec.n + 1, 2):
        c = zt if k < 6 else z
        out.append(_linear(ring, [(k, 1), (k + 1, -c)]))
    return out


def period_polynomial(spec, r, rr, ring=None):
    """P = r P1 + rr P2 for the cycle r P^{n/2} + rr (twisted P^{n/2})."""
    if r == 0 and rr == 0:
        raise ValueError("(r, rr) must not both vanish")
    _, _, _, P1, P2 = linear_cycle_polys(spec, ring)
    return PeriodPolynomial(P1.scale(r) + P2.scale(rr), provenance=(r, rr))


def _as_poly(P):
    return P.P if isinstance(P, PeriodPolynomial) else P


def tangent_hodge_locus(spec, P, jacobian=None):
    """(J^F : P)_d as a Subspace of C[x]_d (coordinates: ``monomials_of_degree``)."""
    spec = _spec(spec)
    P = _as_poly(P)
    if P.homogeneous_degree() != spec.sigma:
        raise ValueError(f"period polynomial must have degree {spec.sigma}")
    J = jacobian or fermat_jacobian(spec, P.ring)
    return colon_piece(J, P, spec.d)


def tangent_VZ(spec, P1, P2, jacobian=None):
    return tangent_hodge_locus(spec, P1, jacobian).intersect(tangent_hodge_locus(spec, P2, jacobian))


def prop_A1_report(spec, r=1, rr=1):
    """Dimensions of the tangent spaces of V_[Z] and V_Z at the Fermat point."""
    if not isinstance(spec, LinearCycleSpec):
        spec = LinearCycleSpec(spec.n, spec.d)
    if r == 0 or rr == 0:
        raise ValueError("both r and rr must be nonzero")
    ring = fermat_ring(spec)
    J = fermat_jacobian(spec, ring)
    _, _, _, P1, P2 = linear_cycle_polys(spec, ring)
    fs = spec.fermat
    Tz = tangent_hodge_locus(fs, P1.scale(r) + P2.scale(rr), J)
    Tvz = tangent_hodge_locus(fs, P1, J).intersect(tangent_hodge_locus(fs, P2, J))
    return TangentReport(
        n=spec.n,
        d=spec.d,
        m=spec.n // 2 - 3,
        r=r,
        rr=rr,
        moduli_dim=count_monomials(spec.n + 2, spec.d, cap=spec.d - 2),
        dim_TVZ=Tvz.dim,
        dim_TVZcycle=Tz.dim,
        codim_TVZ=Tvz.codim,
        codim_TVZcycle=Tz.codim,
    )


def pencil_check(spec, ratios):
    """True when the tangent spaces for every two distinct ratios r:rr meet
    exactly in the tangent space of V_Z."""
    if not isinstance(spec, LinearCycleSpec):
        spec = LinearCycleSpec(spec.n, spec.d)
    ratios = [tuple(x) for x in ratios]
    if not ratios:
        raise ValueError("need at least one ratio")
    ring = fermat_ring(spec)
    J = fermat_jacobian(spec, ring)
    _, _, _, P1, P2 = linear_cycle_polys(spec, ring)
    fs = spec.fermat
    Tvz = tangent_VZ(fs, P1, P2, J)
    spaces = {}
    for r, rr in ratios:
        key = _ratio_key(r, rr)
        if key not in spaces:
            spaces[key] = tangent_hodge_locus(fs, P1.scale(r) + P2.scale(rr), J)
    keys = list(spaces)
    if len(keys) == 1:
        T = spaces[keys[0]]
        return T.intersect(T) == T
    for i in range(len(keys)):
        for j in range(i + 1, len(keys)):
            if spaces[keys[i]].intersect(spaces[keys[j]]) != Tvz:
                return False
    return True


def _ratio_key(r, rr):
    from fractions import Fraction

    if r == 0:
        return (0, 1)
    return (1, Fraction(rr) / Fraction(r))


def ag_ideal_piece(spec, P, a, jacobian=None):
    """Degree-a piece of the Artinian Gorenstein ideal of the cycle with
    period polynomial P: (J^F : P)_a for a <= sigma, everything above."""
    spec = _spec(spec)
    P = _as_poly(P)
    if a < 0:
        raise ValueError("a must be non-negative")
    ring = P.ring
    if a > spec.sigma:
        return Subspace.full(ring.field, count_monomials(ring.nvars, a))
    J = jacobian or fermat_jacobian(spec, ring)
    return colon_piece(J, P, a)


def subspace_polys(ring, sub, degree):
    """Basis vectors of a Subspace of C[x]_degree, as polynomials."""
    mons = monomials_of_degree(ring.nvars, degree, order=ring.order)
    return [ring.from_terms([(mons[c], CycNum(ring.field, v)) for c, v in vec.items()])
            for vec in sub.basis()]


def zero_locus(ring, linear_forms):
    """Common zeros of linear forms, as a Subspace of the coordinate space C^N."""
    rows = []
    for g in linear_forms:
        if g and g.homogeneous_degree() != 1:
            raise ValueError("zero_locus expects linear forms")
        rows.append({e.index(1): c for e, c in g.terms.items()})
    return Subspace.from_equations(ring.field, ring.nvars, rows)


def colon_Q_generators(spec, ring=None):
    """The ideal <x0^2..x5^2, x6 - z x7, x7^2, ..., x_n - z x_{n+1}, x_{n+1}^2>,
    expected to equal (J^F : Q)."""
    if not isinstance(spec, LinearCycleSpec):
        spec = LinearCycleSpec(spec.n, spec.d)
    ring = ring or fermat_ring(spec)
    z = zeta_pow(ring.field, 1)
    x = ring.gens()
    gens = [x[i] ** 2 for i in range(6)]
    for k in range(6, spec.n + 1, 2):
        gens.append(x[k] - x[k + 1].scale(z))
        gens.append(x[k + 1] ** 2)
    return GradedIdeal(ring, gens)
