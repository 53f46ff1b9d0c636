"""Homogeneous ideals, handled one degree at a time.

Three normal-form engines share one interface:

* monomial ideals: drop every term divisible by a generator;
* ``"macaulay"``: echelonise the Macaulay matrix of I_e with columns in
  decreasing monomial order, so pivots are the leading monomials of I_e and
  the non-pivot monomials form the quotient basis (kbase);
* ``"groebner"``: a degree-truncated homogeneous Buchberger basis.

For the same monomial order both non-trivial engines pick the same kbase,
which is what makes them comparable term by term.
"""

import heapq
from dataclasses import dataclass, field as dc_field
from math import comb

from .errors import NotHomogeneous, NotZeroDimensional, RingMismatch
from .linalg import Subspace, _Echelon
from .polyring import Poly, monomials_of_degree

__all__ = [
    "GradedIdeal",
    "DegreePiece",
    "HilbertData",
    "GroebnerBasis",
    "jacobian_ideal",
    "piece",
    "kbase_piece",
    "colon_piece",
    "colon_hilbert_function",
    "normal_form",
    "hilbert_function",
    "buchberger",
]


@dataclass
class DegreePiece:
    """I_e inside C[x]_e, with the quotient monomial basis."""

    degree: int
    monomials: list  # basis of C[x]_e, decreasing order
    subspace: Subspace  # I_e in coordinates of ``monomials``
    complement: list  # kbase monomials of degree e
    _echelon: object = dc_field(default=None, repr=False)

    @property
    def dim(self):
        return self.subspace.dim

    @property
    def quotient_dim(self):
        return len(self.complement)

    def reduce(self, poly):
        """Normal form of a homogeneous polynomial of this degree."""
        index = {m: i for i, m in enumerate(self.monomials)}
        vec = {index[e]: c for e, c in poly.terms.items()}
        r = self._echelon.reduce(vec)
        mons = self.monomials
        return Poly(poly.ring, {mons[i]: c for i, c in r.items()})


@dataclass
class HilbertData:
    values: list

    def __getitem__(self, e):
        return self.values[e] if 0 <= e < len(self.values) else 0

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def socle_degree(self):
        """Top degree with a nonzero value (None if identically zero)."""
        nz = [e for e, v in enumerate(self.values) if v]
        return nz[-1] if nz else None

    def is_symmetric(self):
        top = self.socle_degree()
        if top is None:
            return True
        vals = self.values[: top + 1]
        return vals == vals[::-1]


def _dedupe(gens):
    out, seen = [], set()
    for g in gens:
        if not g:
            continue
        key = g.monic()
        if key in seen:
            continue
        seen.add(key)
        out.append(g)
    return out


class GradedIdeal:
    """Ideal generated by homogeneous polynomials of one ring.

    Zero and duplicate (up to scalar) generators are dropped.  ``engine``
    selects how non-monomial ideals are reduced.
    """

    def __init__(self, ring, generators, engine="macaulay", modular_trace=False):
        self.ring = ring
        self.modular_trace = modular_trace
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatch("generator outside the ideal's ring")
            if g and not g.is_homogeneous():
                raise NotHomogeneous(f"generator {g} is not homogeneous")
            gens.append(g)
        self.generators = _dedupe(gens)
        if engine not in ("macaulay", "groebner"):
            raise ValueError(f"unknown engine {engine!r}")
        self.engine = engine
        self.is_monomial = all(g.is_monomial() for g in self.generators)
        self._lead_mons = [g.lead_monomial() for g in self.generators] if self.is_monomial else None
        self._pieces = {}
        self._gb = None

    def __repr__(self):
        return f"GradedIdeal({len(self.generators)} generators in {self.ring.nvars} variables)"

    @property
    def nvars(self):
        return self.ring.nvars

    def min_degree(self):
        return min((g.homogeneous_degree() for g in self.generators), default=None)

    # pieces ------------------------------------------------------------------
    def piece(self, e):
        """Macaulay-matrix piece I_e (cached)."""
        if e not in self._pieces:
            self._pieces[e] = self._build_piece(e)
        return self._pieces[e]

    def _build_piece(self, e):
        F = self.ring.field
        mons = monomials_of_degree(self.nvars, e, order=self.ring.order)
        index = {m: i for i, m in enumerate(mons)}
        ech = _Echelon(F)
        for g in self.generators:
            dg = g.homogeneous_degree()
            if dg > e:
                continue
            for m in monomials_of_degree(self.nvars, e - dg, order=self.ring.order):
                ech.add({index[tuple(a + b for a, b in zip(t, m))]: c for t, c in g.terms.items()})
        rows, piv = ech.rows(), ech.pivots()
        sub = Subspace(F, len(mons), basis=(rows, piv))
        pivset = set(piv)
        comp = [m for i, m in enumerate(mons) if i not in pivset]
        return DegreePiece(e, mons, sub, comp, ech)

    # Groebner ----------------------------------------------------------------
    def groebner(self, max_degree=None, modular_trace=None, reduced=True):
        """Degree-truncated Groebner basis, cached and extended as needed."""
        if self._gb is None or not self._gb.covers(max_degree):
            if modular_trace is None:
                modular_trace = self.modular_trace
            self._gb = buchberger(self, max_degree=max_degree, modular_trace=modular_trace,
                                  reduced=reduced)
        return self._gb

    # normal forms and bases ------------------------------------------------
    def _divisible(self, e):
        for lm in self._lead_mons:
            if all(a <= b for a, b in zip(lm, e)):
                return True
        return False

    def normal_form(self, p):
        if p.ring != self.ring:
            raise RingMismatch("polynomial outside the ideal's ring")
        if not p:
            return p
        if self.is_monomial:
            return Poly(self.ring, {e: c for e, c in p.terms.items() if not self._divisible(e)})
        if self.engine == "groebner":
            return self.groebner(max_degree=p.degree()).normal_form(p)
        result = self.ring.zero()
        for deg in sorted(p.degrees()):
            result = result + self.piece(deg).reduce(p.homogeneous_part(deg))
        return result

    def contains(self, p):
        return not self.normal_form(p)

    def kbase_piece(self, e):
        """Monomials whose classes form a basis of (C[x]/I)_e, decreasing order."""
        if e < 0:
            return []
        if self.is_monomial:
            return _standard_monomials(self.nvars, e, self._lead_mons, self.ring.order)
        if self.engine == "groebner":
            return self.groebner(max_degree=e).standard_monomials(e)
        return list(self.piece(e).complement)

    def is_artinian(self):
        if self.is_monomial:
            pure = set()
            for lm in self._lead_mons:
                nz = [i for i, k in enumerate(lm) if k]
                if len(nz) == 1:
                    pure.add(nz[0])
            return len(pure) == self.nvars
        return self.artinian_bound() is not None

    def artinian_bound(self, limit=None, exact=True):
        """Smallest degree D with (C[x]/I)_D = 0, or None if none up to ``limit``.

        For an Artinian quotient (C[x]/I)_D = 0 forces every higher degree
        to vanish, so this certifies finite dimension.  With at most nvars
        rational generators the bound is first sought modulo large primes:
        the Hilbert function over Q lies between the complete-intersection
        bound and its value modulo p, so agreement of the two settles it.
        With ``exact=False`` two disagreeing primes are taken as the answer
        None instead of falling back to a Groebner basis over the field.
        """
        degs = [g.homogeneous_degree() for g in self.generators]
        if limit is None:
            if len(degs) < self.nvars:
                return None
            # a regular sequence has socle degree sum(d_i - 1)
            limit = sum(sorted(degs)[: self.nvars]) - self.nvars + 1
        if self.is_monomial or self.engine == "macaulay":
            for e in range(limit + 1):
                if not self.kbase_piece(e):
                    return e
            return None
        if len(degs) <= self.nvars and _has_rational_coefficients(self):
            lower = [complete_intersection_bound(degs, self.nvars, e) for e in range(limit + 1)]
            failures = 0
            for prime in MODULAR_PRIMES:
                try:
                    vals, _ = modular_hilbert(self, limit, prime)
                except ZeroDivisionError:
                    continue
                if vals == lower:
                    zeros = [e for e, v in enumerate(vals) if v == 0]
                    return zeros[0] if zeros else None
                failures += 1
            if failures == len(MODULAR_PRIMES) and not exact:
                return None
        return self.groebner(max_degree=limit).pure_power_bound()

    def kbase(self):
        """All quotient monomials (the quotient must be Artinian)."""
        if not self.is_artinian():
            raise NotZeroDimensional("quotient is not certified finite-dimensional")
        out = []
        e = 0
        while True:
            part = self.kbase_piece(e)
            if not part:
                return out
            out.extend(part)
            e += 1

    def hilbert_function(self, emax):
        return HilbertData([len(self.kbase_piece(e)) for e in range(emax + 1)])


def _standard_monomials(nvars, e, lead_mons, order):
    caps = [None] * nvars
    for lm in lead_mons:
        nz = [i for i, k in enumerate(lm) if k]
        if len(nz) == 1:
            i = nz[0]
            caps[i] = lm[i] - 1 if caps[i] is None else min(caps[i], lm[i] - 1)
    out = []

    def rec(i, left, prefix):
        if i == nvars - 1:
            if caps[i] is None or left <= caps[i]:
                out.append(tuple(prefix + [left]))
            return
        top = left if caps[i] is None else min(left, caps[i])
        for k in range(top, -1, -1):
            prefix.append(k)
            rec(i + 1, left - k, prefix)
            prefix.pop()

    rec(0, e, [])
    others = [lm for lm in lead_mons if sum(1 for k in lm if k) > 1]
    if others:
        out = [m for m in out if not any(all(a <= b for a, b in zip(lm, m)) for lm in others)]
    out.sort(key=order.key, reverse=True)
    return out


# --- module-level functional interface ---------------------------------------


def jacobian_ideal(f, engine="macaulay", modular_trace=False):
    """Ideal of the partial derivatives of f; zero partials are dropped.

    For a sum of pure powers the generators are made monic, so the Fermat
    polynomial gives <x_0^(d-1), ..., x_{N-1}^(d-1)>.
    """
    deg = f.homogeneous_degree()
    if deg < 2:
        raise ValueError("need a homogeneous polynomial of degree >= 2")
    parts = [f.diff(i) for i in range(f.ring.nvars)]
    pure_power_sum = all(sum(1 for k in e if k) == 1 for e in f.terms)
    if pure_power_sum:
        parts = [p.monic() for p in parts]
    return GradedIdeal(f.ring, parts, engine=engine, modular_trace=modular_trace)


def piece(ideal, e):
    if e < 0:
        raise ValueError("degree must be non-negative")
    return ideal.piece(e)


def kbase_piece(ideal, e):
    return ideal.kbase_piece(e)


def normal_form(p, ideal):
    return ideal.normal_form(p)


def hilbert_function(ideal, emax):
    return ideal.hilbert_function(emax)


def colon_piece(ideal, P, a):
    """(I : P)_a as a Subspace of C[x]_a (coordinates: monomials_of_degree order).

    Computed as the kernel of q -> NF(q P) from C[x]_a into the quotient
    piece of degree a + deg P.
    """
    if not P:
        raise ValueError("P must be nonzero")
    P.homogeneous_degree()
    ring = ideal.ring
    F = ring.field
    source = monomials_of_degree(ring.nvars, a, order=ring.order)
    nfP = ideal.normal_form(P)
    eqs = {}
    for j, q in enumerate(source):
        img = ideal.normal_form(nfP.mul_monomial(q)) if nfP else nfP
        for t, c in img.terms.items():
            row = eqs.get(t)
            if row is None:
                eqs[t] = {j: c}
            else:
                row[j] = c
    return Subspace.from_equations(F, len(source), list(eqs.values()))


def colon_hilbert_function(ideal, P, emax):
    """Hilbert function of C[x]/(I:P) in degrees 0..emax."""
    return HilbertData([colon_piece(ideal, P, e).codim for e in range(emax + 1)])


# --- Buchberger -------------------------------------------------------------


def _neg_key(key):
    deg, tail = key
    return (-deg, tuple(-t for t in tail))


class GroebnerBasis:
    """Homogeneous Groebner basis, complete up to ``max_degree``."""

    def __init__(self, ring, polys, max_degree, trace=None):
        self.ring = ring
        self.polys = polys  # monic term dicts
        self.max_degree = max_degree
        self.lead = [max(p, key=ring._key) for p in polys]
        self.trace = trace

    def covers(self, degree):
        return self.max_degree is None or (degree is not None and degree <= self.max_degree)

    def as_polys(self):
        return [Poly(self.ring, dict(p)) for p in self.polys]

    def normal_form(self, p):
        if self.max_degree is not None and p.degree() > self.max_degree:
            raise ValueError("Groebner basis truncated below the requested degree")
        return Poly(self.ring, _reduce(self.ring.field, self.ring._key, p.terms, self.lead, self.polys))

    def standard_monomials(self, e):
        return _standard_monomials(self.ring.nvars, e, self.lead, self.ring.order)

    def hilbert_value(self, e):
        return _count_standard(self.lead, self.ring.nvars, e)

    def pure_power_bound(self):
        """Degree at which the quotient vanishes, when every variable has a
        pure-power leading monomial and the basis reaches that degree; else None."""
        return _vanishing_degree(self.lead, self.ring.nvars, self.max_degree)


def _vanishing_degree(leads, nvars, max_degree):
    pure = set()
    for lm in leads:
        nz = [i for i, k in enumerate(lm) if k]
        if len(nz) == 1:
            pure.add(nz[0])
    if len(pure) < nvars:
        return None
    num = _hilbert_numerator(leads, nvars)
    e = 0
    while _coefficient(num, nvars, e):
        e += 1
    if max_degree is not None and e > max_degree:
        return None
    return e


# --- Hilbert series of monomial ideals ---------------------------------------


def _minimalize(gens):
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _poly_add(a, b):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] += x
    return out


def _hilbert_numerator(gens, nvars):
    """K(t) with HS(C[x]/<gens>) = K(t) / (1-t)^nvars, by pivoting on a variable."""
    gens = _minimalize(gens)
    if not gens:
        return [1]
    supports = [frozenset(i for i, k in enumerate(g) if k) for g in gens]
    seen = set()
    coprime = True
    for sup in supports:
        if seen & sup:
            coprime = False
            break
        seen |= sup
    if coprime:
        num = [1]
        for g in gens:
            d = sum(g)
            nxt = num + [0] * d
            for i, c in enumerate(num):
                nxt[i + d] -= c
            num = nxt
        return num
    # pivot on the variable occurring in the most non-linear generators
    counts = [0] * nvars
    for g in gens:
        if sum(g) > 1:
            for i, k in enumerate(g):
                if k:
                    counts[i] += 1
    v = max(range(nvars), key=lambda i: counts[i])
    xv = tuple(1 if i == v else 0 for i in range(nvars))
    with_v = _hilbert_numerator(gens + [xv], nvars)
    colon = [tuple(k - 1 if i == v and k else k for i, k in enumerate(g)) for g in gens]
    rest = _hilbert_numerator(colon, nvars)
    return _poly_add(with_v, [0] + rest)


def _coefficient(num, nvars, e):
    total = 0
    for j, c in enumerate(num):
        if c and j <= e:
            total += c * comb(nvars - 1 + e - j, nvars - 1)
    return total


def _count_standard(leads, nvars, e):
    return _coefficient(_hilbert_numerator(list(leads), nvars), nvars, e)


def complete_intersection_bound(degrees, nvars, e):
    """Coefficient of t^e in prod(1 - t^d_i) / (1 - t)^nvars.

    For at most ``nvars`` homogeneous generators of the given degrees this is
    a lower bound for the Hilbert function of the quotient (the Macaulay
    matrix of any such ideal is a specialisation of the generic one, which
    is a complete intersection), with equality exactly for a complete
    intersection.
    """
    num = [1]
    for d in degrees:
        nxt = num + [0] * d
        for i, c in enumerate(num):
            nxt[i + d] -= c
        num = nxt
    return _coefficient(num, nvars, e)


# --- coefficient arithmetic modulo a prime ----------------------------------


class PrimeOps:
    """Raw arithmetic in F_p with the interface used by the reduction code."""

    def __init__(self, p):
        self.p = p
        self.zero = 0
        self.one = 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def is_zero(self, a):
        return not a

    def submul(self, a, b, c):
        return (a - b * c) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero modulo p")
        return pow(a, -1, self.p)

    def lift(self, raw, field):
        """Image of a raw field element; rational coefficients only."""
        if field.phi != 1 and not field.is_rational(raw):
            raise ValueError("modular images are only taken of rational coefficients")
        q = raw[0]
        den = int(q.denominator)
        if den % self.p == 0:
            raise ZeroDivisionError("denominator divisible by p")
        return int(q.numerator) * pow(den, -1, self.p) % self.p


DEFAULT_PRIME = (1 << 61) - 1
MODULAR_PRIMES = (DEFAULT_PRIME, (1 << 31) - 1)


def _has_rational_coefficients(ideal):
    F = ideal.ring.field
    return all(F.is_rational(c) for g in ideal.generators for c in g.terms.values())


# --- Buchberger ---------------------------------------------------------------


def _find_reducer(m, leads, cache):
    """Index of the first lead dividing m.  ``cache`` maps m to a found index,
    or to -(number of leads already ruled out) - 1."""
    hit = cache.get(m) if cache is not None else None
    start = 0
    if hit is not None:
        if hit >= 0:
            return hit
        start = -hit - 1
    for idx in range(start, len(leads)):
        for a, b in zip(leads[idx], m):
            if a > b:
                break
        else:
            if cache is not None:
                cache[m] = idx
            return idx
    if cache is not None:
        cache[m] = -len(leads) - 1
    return None


def _reduce(F, key, terms, leads, polys, full=True, cache=None):
    """Fully reduce a term dict modulo polys (monic, with leading monomials ``leads``).

    ``cache`` may be shared between calls as long as ``leads`` only grows.
    """
    mul, submul, neg, is_zero = F.mul, F.submul, F.neg, F.is_zero
    p = dict(terms)
    heap = [(_neg_key(key(m)), m) for m in p]
    heapq.heapify(heap)
    inheap = set(p)
    rem = {}
    while heap:
        _, m = heapq.heappop(heap)
        inheap.discard(m)
        c = p.pop(m, None)
        if c is None:
            continue
        red = _find_reducer(m, leads, cache)
        if red is None:
            rem[m] = c
            if not full:
                rem.update(p)
                return rem
            continue
        lm, g = leads[red], polys[red]
        shift = tuple(b - a for a, b in zip(lm, m))
        for e, v in g.items():
            if e == lm:
                continue
            t = tuple(a + b for a, b in zip(e, shift))
            w = p.get(t)
            if w is None:
                p[t] = neg(mul(c, v))
                if t not in inheap:
                    inheap.add(t)
                    heapq.heappush(heap, (_neg_key(key(t)), t))
            else:
                w = submul(w, c, v)
                if is_zero(w):
                    del p[t]
                else:
                    p[t] = w
    return rem


def _monic(F, key, p):
    lm = max(p, key=key)
    inv = F.inv(p[lm])
    if inv == F.one:
        return p
    return {e: F.mul(c, inv) for e, c in p.items()}


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a, b):
    return all(not (x and y) for x, y in zip(a, b))


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _spoly(F, G, leads, i, j, L):
    si = tuple(a - b for a, b in zip(L, leads[i]))
    sj = tuple(a - b for a, b in zip(L, leads[j]))
    s = {}
    for e, c in G[i].items():
        s[tuple(a + b for a, b in zip(e, si))] = c
    for e, c in G[j].items():
        t = tuple(a + b for a, b in zip(e, sj))
        w = s.get(t)
        if w is None:
            s[t] = F.neg(c)
        else:
            w = F.sub(w, c)
            if F.is_zero(w):
                del s[t]
            else:
                s[t] = w
    return s


def _buchberger_core(F, key, nvars, gens, max_degree, target=None, trace=None):
    """Degree-by-degree homogeneous Buchberger on raw term dicts.

    ``target(e)``, when given, is a lower bound for the number of standard
    monomials in degree e; once the current leading monomials reach it, the
    remaining S-pairs of that degree are known to reduce to zero and are
    skipped.  ``trace`` maps a degree to the pairs worth trying first (as
    recorded by an earlier run, e.g. modulo a prime).  Returns
    (basis, leads, record) where record lists the productive pairs.
    """
    G, leads = [], []
    alive = {}  # (i, j) -> lcm
    heap = []  # (degree, i, j)
    pending = sorted(((sum(next(iter(g))), g) for g in gens), key=lambda t: t[0])
    record = {}
    cache = {}
    # standard-monomial count of the current degree: each new element of
    # degree d contributes exactly one new leading monomial in degree d
    count = {}

    def add(h):
        h = _monic(F, key, h)
        lh = max(h, key=key)
        k = len(G)
        new = [(i, _lcm(leads[i], lh)) for i in range(k)]
        kept = []
        for idx, (i, L) in enumerate(new):
            if _coprime(leads[i], lh):
                continue
            dominated = False
            for jdx, (j, L2) in enumerate(new):
                if jdx != idx and _divides(L2, L) and (L2 != L or jdx < idx):
                    dominated = True
                    break
            if not dominated:
                kept.append((i, L))
        for (i, j), L in list(alive.items()):
            if _divides(lh, L) and _lcm(leads[i], lh) != L and _lcm(leads[j], lh) != L:
                del alive[(i, j)]
        G.append(h)
        leads.append(lh)
        for i, L in kept:
            d = sum(L)
            if max_degree is not None and d > max_degree:
                continue
            alive[(i, k)] = L
            heapq.heappush(heap, (d, i, k))

    def reached(d):
        if target is None:
            return False
        if d not in count:
            count[d] = _count_standard(leads, nvars, d)
        return count[d] <= target(d)

    def added(d):
        if d in count:
            count[d] -= 1

    while pending or heap:
        while heap and (heap[0][1], heap[0][2]) not in alive:
            heapq.heappop(heap)
        d_gen = pending[0][0] if pending else None
        d_pair = heap[0][0] if heap else None
        cands = [x for x in (d_gen, d_pair) if x is not None]
        if not cands:
            break
        d = min(cands)
        if max_degree is not None and d > max_degree:
            break
        while pending and pending[0][0] == d:
            h = _reduce(F, key, pending.pop(0)[1], leads, G, cache=cache)
            if h:
                add(h)
                added(d)
        batch = []
        while heap and heap[0][0] == d:
            _, i, j = heapq.heappop(heap)
            if (i, j) in alive:
                batch.append((i, j))
        if trace and d in trace:
            first = [ij for ij in trace[d] if ij in batch]
            batch = first + [ij for ij in batch if ij not in set(first)]
            checkpoint = len(first)
        else:
            checkpoint = None
        done = reached(d) if batch and checkpoint is None and target is not None else False
        for pos, ij in enumerate(batch):
            if done:
                break
            if checkpoint is not None and pos == checkpoint:
                if reached(d):
                    break
            L = alive.pop(ij, None)
            if L is None:
                continue
            h = _reduce(F, key, _spoly(F, G, leads, ij[0], ij[1], L), leads, G, cache=cache)
            if h:
                add(h)
                added(d)
                record.setdefault(d, []).append(ij)
                if checkpoint is None and reached(d):
                    done = True
        for ij in batch:
            alive.pop(ij, None)
    return G, leads, record


def _finish(F, key, G, leads, reduced):
    keep = []
    for i, lm in enumerate(leads):
        if any(j != i and _divides(leads[j], lm) and (leads[j] != lm or j < i) for j in range(len(leads))):
            continue
        keep.append(i)
    polys = [G[i] for i in keep]
    lms = [leads[i] for i in keep]
    if reduced:
        out = []
        for idx, (g, lm) in enumerate(zip(polys, lms)):
            tail = {e: c for e, c in g.items() if e != lm}
            tail = _reduce(F, key, tail, lms[:idx] + lms[idx + 1:], polys[:idx] + polys[idx + 1:])
            tail[lm] = F.one
            out.append(tail)
        polys = out
    order = sorted(range(len(polys)), key=lambda i: key(lms[i]))
    return [polys[i] for i in order]


def _targets(ideal):
    degs = [g.homogeneous_degree() for g in ideal.generators]
    if len(degs) > ideal.nvars:
        return None
    return lambda e: complete_intersection_bound(degs, ideal.nvars, e)


def modular_image(ideal, p=DEFAULT_PRIME):
    ops = PrimeOps(p)
    F = ideal.ring.field
    gens = []
    for g in ideal.generators:
        img = {e: ops.lift(c, F) for e, c in g.terms.items()}
        img = {e: c for e, c in img.items() if c}
        if img:
            gens.append(img)
    return ops, gens


def modular_hilbert(ideal, max_degree, p=DEFAULT_PRIME):
    """Hilbert function of the reduction of the ideal modulo p, degrees 0..max_degree.

    For generators with rational coefficients and p not dividing any
    denominator this bounds the Hilbert function over Q from above.
    Returns (values, record) where record lists productive S-pairs.
    """
    ops, gens = modular_image(ideal, p)
    key = ideal.ring._key
    G, leads, record = _buchberger_core(ops, key, ideal.nvars, gens, max_degree, _targets(ideal))
    leads = _minimalize(leads)
    num = _hilbert_numerator(leads, ideal.nvars)
    return [_coefficient(num, ideal.nvars, e) for e in range(max_degree + 1)], record


def buchberger(ideal, max_degree=None, hilbert=True, modular_trace=False, reduced=True):
    """Homogeneous Buchberger algorithm, processing S-pairs by degree.

    Pairs above ``max_degree`` are skipped, which yields a basis valid for
    normal forms up to that degree.  Uses the product and Gebauer-Moeller
    chain criteria.  With ``hilbert`` and at most nvars generators, the
    complete-intersection Hilbert function serves as a stopping bound per
    degree (never affecting correctness).  ``modular_trace`` first runs the
    computation modulo a large prime and tries the productive S-pairs of
    that run first.
    """
    ring = ideal.ring
    F, key = ring.field, ring._key
    target = _targets(ideal) if hilbert else None
    trace = None
    if modular_trace and max_degree is not None and _has_rational_coefficients(ideal):
        try:
            _, trace = modular_hilbert(ideal, max_degree)
        except ZeroDivisionError:
            trace = None
    gens = [dict(g.terms) for g in sorted(ideal.generators, key=lambda g: g.homogeneous_degree())]
    G, leads, record = _buchberger_core(F, key, ideal.nvars, gens, max_degree, target, trace)
    return GroebnerBasis(ring, _finish(F, key, G, leads, reduced), max_degree, trace=record)
