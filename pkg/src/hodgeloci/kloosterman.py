"""Rank test for the tangent spaces of V_Z and V_[Z] at a chosen cubic.

A cubic of the shape f = sum_i l_i g_i with l_i linear contains the linear
cycle {l_i = 0}; the determinant of the Jacobian matrix of the list
(l_0, ..., l_k, g_0, ..., g_k) is its period polynomial.  Two such lists
I1, I2 give Pd = a detjac(I1) + b detjac(I2), and the rank of

    M[i, :] = coefficients of NF(Pd * R_i) in the quotient basis,

with R_i running over the degree-3 quotient monomials, is the codimension
of the tangent space of the Hodge locus of a [P] + b [P'] in the moduli.

Three families are built (0-based variables x0 .. x{n+1}, k = n/2, c = 3):

* ``fermat``: the Fermat cubic with the pair of linear cycles
  x_{2i} = z x_{2i+1} (z^alpha for i < 3 in the second cycle);
* ``kloosterman``: Q diagonal with Q_ii = x_i + x_{i+3} + x_{i+6} and
  h_i = x_{i-3}(x_{i-3} + x_i) for k+c+1 <= i <= 2k+1, so that
  f = sum_{i<3} x_i x_{i+3} Q_ii + sum_i x_i h_i;
* ``random``: Q a 3x3 matrix of random linear forms and random quadrics h,
  coefficients drawn from {-1, 0, 1}.
"""

import multiprocessing
import os
import random
import time
from dataclasses import dataclass, field as dc_field

from .enumerative import codim_VZ, min_codim
from .errors import SingularHypersurface, SizeMismatch
from .fermat_hodge import LinearCycleSpec, fermat_poly, fermat_ring, linear_cycle_polys
from .gradedideal import GradedIdeal, jacobian_ideal
from .linalg import Mat, rank as exact_rank
from .numberfield import QQ, cyclotomic_field, zeta_pow
from .polyring import PolyRing, random_poly

__all__ = [
    "FamilySpec",
    "Family",
    "RankReport",
    "detjac",
    "build_family",
    "rank_pipeline",
    "stacked_rank",
    "detjac_constant",
    "expected_rank",
    "smoothness_certificate",
    "prepare",
    "Prepared",
    "dual_degree",
]

SOURCES = ("fermat", "kloosterman", "random")


@dataclass(frozen=True)
class FamilySpec:
    n: int
    source: str = "fermat"
    a: int = 1
    b: int = 1
    seed: int = 2
    alpha: int = 3
    c: int = 3
    d: int = 3
    kloosterman_overflow: str = "wrap"

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 6 or self.n % 2:
            raise ValueError(f"n must be an even integer >= 6, got {self.n!r}")
        if self.source not in SOURCES:
            raise ValueError(f"source must be one of {SOURCES}, got {self.source!r}")
        if self.c != 3 or self.d != 3:
            raise ValueError("only cubics with c = 3 are supported")
        if self.a == 0 and self.b == 0:
            raise ValueError("(a, b) must not both vanish")
        if self.kloosterman_overflow not in ("wrap", "drop"):
            raise ValueError("kloosterman_overflow must be 'wrap' or 'drop'")

    @property
    def k(self):
        return self.n // 2

    @property
    def nvars(self):
        return self.n + 2

    def with_ab(self, a, b):
        return FamilySpec(self.n, self.source, a, b, self.seed, self.alpha, self.c, self.d,
                          self.kloosterman_overflow)


@dataclass
class Family:
    spec: FamilySpec
    f: object
    I1: list
    I2: list

    @property
    def ring(self):
        return self.f.ring


@dataclass
class RankReport:
    n: int
    source: str
    a: int
    b: int
    kbase_dim: int
    rank: int
    expected: int
    seed: object = None
    codim_VZ: int = None
    table_M: int = None
    wall_time_ms: int = 0
    extra: dict = dc_field(default_factory=dict)

    @property
    def match(self):
        return self.rank == self.expected

    def as_dict(self, timing=True):
        out = {
            "schema": "1",
            "n": self.n,
            "source": self.source,
            "seed": self.seed,
            "a": self.a,
            "b": self.b,
            "kbase_dim": self.kbase_dim,
            "rank": self.rank,
            "expected": self.expected,
            "match": self.match,
            "delta_codim_VZ": None if self.codim_VZ is None else self.rank - self.codim_VZ,
            "delta_table_M": None if self.table_M is None else self.rank - self.table_M,
        }
        out.update(self.extra)
        if timing:
            out["wall_time_ms"] = self.wall_time_ms
        return out


# --- determinant of the Jacobian matrix --------------------------------------


def detjac(polys):
    """det(d F_i / d x_j) for a list of N polynomials in N variables.

    Laplace expansion along rows, memoised on the set of columns used, so
    the cost is about N 2^N polynomial products (most entries vanish for
    the structured lists used here).
    """
    if not polys:
        raise SizeMismatch("empty list")
    ring = polys[0].ring
    N = ring.nvars
    if len(polys) != N:
        raise SizeMismatch(f"need {N} polynomials, got {len(polys)}")
    D = [[p.diff(j) for j in range(N)] for p in polys]
    # layer[mask] = signed sum over placements of the first popcount(mask) rows
    layer = {0: ring.one()}
    for i in range(N):
        row = D[i]
        nxt = {}
        for mask, val in layer.items():
            for j in range(N):
                if mask >> j & 1 or not row[j]:
                    continue
                # sign of placing column j after the columns already in mask
                above = bin(mask >> (j + 1)).count("1")
                term = val * row[j]
                if above % 2:
                    term = -term
                key = mask | (1 << j)
                nxt[key] = nxt[key] + term if key in nxt else term
        layer = {m: v for m, v in nxt.items() if v}
        if not layer:
            return ring.zero()
    return layer.get((1 << N) - 1, ring.zero())


# --- families ----------------------------------------------------------------


def _lin(ring, pairs):
    terms = []
    for i, c in pairs:
        e = [0] * ring.nvars
        e[i] = 1
        terms.append((tuple(e), c))
    return ring.from_terms(terms)


def _fermat_family(spec):
    ring = fermat_ring(LinearCycleSpec(spec.n))
    F = ring.field
    x = ring.gens()

    def cycle(twist):
        lin, cof = [], []
        for i in range(spec.k + 1):
            z = zeta_pow(F, spec.alpha if (twist and i < 3) else 1)
            u, v = x[2 * i], x[2 * i + 1]
            lin.append(u - v.scale(z))
            # (u - z v)(u^2 + z u v + z^2 v^2) = u^3 - z^3 v^3 = u^3 + v^3
            cof.append(u * u + (u * v).scale(z) + (v * v).scale(z * z))
        return lin + cof

    return Family(spec, fermat_poly(LinearCycleSpec(spec.n), ring), cycle(False), cycle(True))


def _cycle_lists(spec, ring, Qm, h):
    x = ring.gens()
    c, k = spec.c, spec.k
    tail = list(range(k + c + 1, 2 * k + 2))
    I1 = [x[i] for i in range(c)] + [x[i] for i in tail]
    for i in range(c):
        I1.append(sum((x[j] * Qm[i][j - c] for j in range(c, 2 * c)), ring.zero()))
    I1 += h
    I2 = [x[j] for j in range(c, 2 * c)] + [x[i] for i in tail]
    for j in range(c, 2 * c):
        I2.append(sum((x[i] * Qm[i][j - c] for i in range(c)), ring.zero()))
    I2 += h
    f = ring.zero()
    for i in range(c):
        for j in range(c, 2 * c):
            f = f + x[i] * x[j] * Qm[i][j - c]
    for t, i in enumerate(tail):
        f = f + x[i] * h[t]
    return f, I1, I2


def _kloosterman_family(spec):
    ring = PolyRing(spec.nvars, QQ)
    x = ring.gens()
    c, k, N = spec.c, spec.k, spec.nvars

    def var(i):
        # the listing's x(i+6) runs past x{n+1} when n < 8
        if i < N:
            return x[i]
        return x[i % N] if spec.kloosterman_overflow == "wrap" else ring.zero()

    Qm = [[ring.zero() for _ in range(c)] for _ in range(c)]
    for i in range(c):
        Qm[i][i] = var(i) + var(i + 3) + var(i + 6)
    h = [x[i - 3] * (x[i - 3] + x[i]) for i in range(k + c + 1, 2 * k + 2)]
    f, I1, I2 = _cycle_lists(spec, ring, Qm, h)
    return Family(spec, f, I1, I2)


def _random_family(spec):
    ring = PolyRing(spec.nvars, QQ)
    rng = random.Random(spec.seed)
    c, k = spec.c, spec.k
    Qm = [[random_poly(ring, spec.d - 2, rng) for _ in range(c)] for _ in range(c)]
    h = [random_poly(ring, spec.d - 1, rng) for _ in range(k - c + 1)]
    f, I1, I2 = _cycle_lists(spec, ring, Qm, h)
    return Family(spec, f, I1, I2)


def build_family(spec):
    """(f, I1, I2) for the requested source; f lies in both cycle ideals."""
    if spec.source == "fermat":
        return _fermat_family(spec)
    if spec.source == "kloosterman":
        return _kloosterman_family(spec)
    return _random_family(spec)


# --- the pipeline -------------------------------------------------------------


def _jacobian(family):
    if family.spec.source == "fermat":
        return jacobian_ideal(family.f)
    return jacobian_ideal(family.f, engine="groebner", modular_trace=True)


def smoothness_certificate(J):
    """Degree above which C[x]/J vanishes; raises SingularHypersurface if it
    does not vanish by the complete-intersection socle degree + 1.

    Over Q the quotient is first reduced modulo large primes: agreement
    with the complete-intersection Hilbert function proves smoothness, and
    failure at two primes is reported as singular (a singular point mod p
    for two unrelated large primes almost always comes from one over Q).
    """
    bound = J.artinian_bound(exact=False)
    if bound is None:
        raise SingularHypersurface(
            "Jacobian quotient is not Artinian (checked modulo two large primes): "
            "the hypersurface is singular")
    return bound


def expected_rank(n, source, a, b):
    """Codimension predicted for the tangent space of the Hodge locus."""
    if a == 0 or b == 0:
        return min_codim(n)
    full = codim_VZ(n, 3, n // 2 - 3)
    if source == "fermat" or n <= 8:
        return full - 1
    return full


# globals handed to forked workers
_WORK = {}


def _row_worker(i):
    J, Pd, rows, cols = _WORK["J"], _WORK["Pd"], _WORK["rows"], _WORK["cols"]
    nf = J.normal_form(Pd.mul_monomial(rows[i]))
    return {cols[e]: c for e, c in nf.terms.items()}


def _resolve_threads(threads):
    if threads is None:
        threads = int(os.environ.get("HODGELOCI_THREADS", "1") or 1)
    return max(1, int(threads))


def _matrix(J, Pd, rows, cols, threads):
    index = {e: i for i, e in enumerate(cols)}
    threads = _resolve_threads(threads)
    if threads > 1 and len(rows) > 1 and "fork" in multiprocessing.get_all_start_methods():
        _WORK.update(J=J, Pd=Pd, rows=rows, cols=index)
        try:
            with multiprocessing.get_context("fork").Pool(threads) as pool:
                out = pool.map(_row_worker, range(len(rows)))
        finally:
            _WORK.clear()
    else:
        out = []
        for r in rows:
            nf = J.normal_form(Pd.mul_monomial(r))
            out.append({index[e]: c for e, c in nf.terms.items()})
    return Mat(J.ring.field, len(rows), len(cols), out)


@dataclass
class Prepared:
    """Data shared by several rank computations on one family.

    ``rows`` are the quotient monomials of degree ``degree`` (3 for the
    direct route, the complementary degree for the dual one) and ``cols``
    those of degree ``degree + sigma``.
    """

    family: Family
    J: object
    d1: object
    d2: object
    route: str
    degree: int
    rows: list
    cols: list
    kbase3: int


def dual_degree(n, d=3):
    """Degree s with s + sigma + d equal to the socle degree of the Jacobian ring."""
    sigma = (n // 2 + 1) * (d - 2)
    return (n + 2) * (d - 2) - sigma - d


def _choose_route(spec, route):
    if route not in ("auto", "direct", "dual"):
        raise ValueError(f"route must be auto, direct or dual, got {route!r}")
    if route != "auto":
        return route
    return "dual" if dual_degree(spec.n, spec.d) < spec.d else "direct"


def _prepare(spec, route="auto"):
    route = _choose_route(spec, route)
    fam = build_family(spec)
    J = _jacobian(fam)
    smoothness_certificate(J)
    d1, d2 = detjac(fam.I1), detjac(fam.I2)
    sigma = d1.homogeneous_degree()
    degree = spec.d if route == "direct" else dual_degree(spec.n, spec.d)
    top = degree + sigma
    if J.engine == "groebner" and not J.is_monomial:
        J.groebner(max_degree=top)
    rows = J.kbase_piece(degree)
    cols = J.kbase_piece(top)
    kbase3 = len(rows) if degree == spec.d else len(J.kbase_piece(spec.d))
    return Prepared(fam, J, d1, d2, route, degree, rows, cols, kbase3)


def _rank_for(prep, a, b, threads):
    J = prep.J
    Pd = J.normal_form(prep.d1.scale(a) + prep.d2.scale(b))
    if not Pd:
        return 0
    return exact_rank(_matrix(J, Pd, prep.rows, prep.cols, threads))


def rank_pipeline(spec, threads=None, prepared=None, route="auto"):
    """Rank of the matrix of normal forms of Pd * R_i, R_i degree-3 quotient monomials.

    The Jacobian ring is Gorenstein, so multiplication by Pd from degree 3
    and from the complementary degree s (3 + sigma + s = socle degree) are
    transpose to each other under the socle pairing and have the same rank.
    The dual route uses degree s when it is smaller.
    """
    t0 = time.perf_counter()
    prep = prepared or _prepare(spec, route)
    rk = _rank_for(prep, spec.a, spec.b, threads)
    full = codim_VZ(spec.n, 3, spec.k - 3)
    return RankReport(
        n=spec.n,
        source=spec.source,
        a=spec.a,
        b=spec.b,
        seed=spec.seed if spec.source == "random" else None,
        kbase_dim=prep.kbase3,
        rank=rk,
        expected=expected_rank(spec.n, spec.source, spec.a, spec.b),
        codim_VZ=full,
        table_M=full - 1,
        wall_time_ms=int(1000 * (time.perf_counter() - t0)),
        extra={"route": prep.route, "matrix_shape": [len(prep.rows), len(prep.cols)]},
    )


def stacked_rank(spec, threads=None, prepared=None, route="auto"):
    """codim T_0 V_Z: rank of q -> (q P1, q P2) on degree-3 quotient elements.

    On the dual route this is the rank of the two single-cycle matrices
    stacked vertically; on the direct route they are placed side by side.
    """
    prep = prepared or _prepare(spec, route)
    J = prep.J
    m1 = _matrix(J, J.normal_form(prep.d1), prep.rows, prep.cols, threads)
    m2 = _matrix(J, J.normal_form(prep.d2), prep.rows, prep.cols, threads)
    if prep.route == "dual":
        return exact_rank(m1.vstack(m2))
    return exact_rank(m1.hstack(m2))


def prepare(spec, route="auto"):
    """Shared data for several rank computations on one family."""
    return _prepare(spec, route)


def detjac_constant(n, alpha=3):
    """The scalars c_i with detjac(I_i) = c_i P_i at the Fermat point."""
    spec = FamilySpec(n, "fermat", alpha=alpha)
    fam = build_family(spec)
    _, _, _, P1, P2 = linear_cycle_polys(LinearCycleSpec(n, alpha=alpha), fam.ring)
    out = []
    for I, P in ((fam.I1, P1), (fam.I2, P2)):
        D = detjac(I)
        lm = P.lead_monomial()
        c = D.coefficient(lm) / P.coefficient(lm)
        if D != P.scale(c):
            raise ArithmeticError("detjac is not proportional to the period polynomial")
        out.append(c)
    return tuple(out)
