"""Sparse multivariate polynomials over a cyclotomic field.

A polynomial is a dict from exponent tuples to raw field elements (see
``numberfield``).  Terms iterate in decreasing monomial order.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import comb

from gmpy2 import mpq

from .errors import NotHomogeneous, ParseError, RingMismatch
from .numberfield import QQ, CycNum, ExprParser

__all__ = [
    "MonomialOrder",
    "PolyRing",
    "Poly",
    "monomials_of_degree",
    "count_monomials",
    "parse_poly",
    "print_poly",
    "mono_mul",
    "mono_divides",
]


@dataclass(frozen=True)
class MonomialOrder:
    """degrevlex, optionally with positive integer weights on the variables."""

    kind: str = "degrevlex"
    weights: tuple = None

    def __post_init__(self):
        if self.kind not in ("degrevlex", "weighted-degrevlex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "weighted-degrevlex":
            if not self.weights or any(w <= 0 for w in self.weights):
                raise ValueError("weighted-degrevlex needs positive weights")

    def key(self, exps):
        """Sort key: larger key means larger monomial."""
        if self.weights:
            deg = sum(w * e for w, e in zip(self.weights, exps))
        else:
            deg = sum(exps)
        return (deg, tuple(-e for e in reversed(exps)))


DEGREVLEX = MonomialOrder()


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True if x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def _compositions(nvars, deg, cap):
    if nvars == 1:
        return ((deg,),) if cap is None or deg <= cap else ()
    out = []
    top = deg if cap is None else min(deg, cap)
    for first in range(top, -1, -1):
        for rest in _compositions(nvars - 1, deg - first, cap):
            out.append((first,) + rest)
    return tuple(out)


def monomials_of_degree(nvars, deg, cap=None, order=DEGREVLEX):
    """Exponent vectors of total degree ``deg``, largest first.

    ``cap`` bounds every exponent (cap = d - 2 gives the monomial basis of
    the Jacobian ring of the degree-d Fermat polynomial).
    """
    if nvars < 1 or deg < 0:
        return []
    if cap is not None and cap == 1:
        # squarefree: faster via combinations
        out = []
        for idx in combinations(range(nvars), deg):
            e = [0] * nvars
            for i in idx:
                e[i] = 1
            out.append(tuple(e))
    else:
        out = list(_compositions(nvars, deg, cap))
    out.sort(key=order.key, reverse=True)
    return out


def count_monomials(nvars, deg, cap=None):
    """Number of monomials of degree ``deg`` with exponents <= cap."""
    if deg < 0 or nvars < 1:
        return 0
    if cap is None:
        return comb(nvars - 1 + deg, deg)
    # inclusion-exclusion over variables exceeding the cap
    total = 0
    for j in range(nvars + 1):
        rest = deg - j * (cap + 1)
        if rest < 0:
            break
        total += (-1) ** j * comb(nvars, j) * comb(nvars - 1 + rest, rest)
    return total


class PolyRing:
    """Ring context: number of variables, coefficient field, names, order."""

    def __init__(self, nvars, field=QQ, order=DEGREVLEX, names=None):
        self.nvars = nvars
        self.field = field
        self.order = order
        self.names = tuple(names) if names else tuple(f"x{i}" for i in range(nvars))
        if len(self.names) != nvars:
            raise ValueError("one name per variable")
        self._key = order.key

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.nvars == other.nvars
            and self.field == other.field
            and self.order == other.order
            and self.names == other.names
        )

    def __hash__(self):
        return hash((self.nvars, self.field, self.order, self.names))

    def __repr__(self):
        return f"PolyRing({self.nvars}, Q(zeta_{self.field.m}))"

    def zero(self):
        return Poly(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = self.coerce_coeff(c)
        if self.field.is_zero(c):
            return self.zero()
        return Poly(self, {(0,) * self.nvars: c})

    def gen(self, i):
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): self.field.one})

    def gens(self):
        return [self.gen(i) for i in range(self.nvars)]

    def monomial(self, exps, coeff=1):
        c = self.coerce_coeff(coeff)
        if self.field.is_zero(c):
            return self.zero()
        return Poly(self, {tuple(exps): c})

    def coerce_coeff(self, c):
        if isinstance(c, (CycNum, str)):
            return CycNum.coerce(self.field, c).coords
        if isinstance(c, tuple):
            return c
        return self.field.from_rational(c)

    def from_terms(self, terms):
        """Build a polynomial from (exps, coeff) pairs, summing duplicates."""
        F = self.field
        out = {}
        for e, c in terms:
            c = self.coerce_coeff(c)
            e = tuple(e)
            if e in out:
                out[e] = F.add(out[e], c)
            else:
                out[e] = c
        return Poly(self, {e: c for e, c in out.items() if not F.is_zero(c)})

    def with_field(self, field):
        return PolyRing(self.nvars, field, self.order, self.names)

    def parse(self, text, one_based=False):
        return parse_poly(text, self, one_based=one_based)


class Poly:
    """Immutable sparse polynomial; ``terms`` maps exponent tuple -> raw coeff."""

    __slots__ = ("ring", "terms", "_sorted")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._sorted = None

    # structure -------------------------------------------------------------
    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def sorted_terms(self):
        """Terms in decreasing monomial order."""
        if self._sorted is None:
            key = self.ring._key
            self._sorted = sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)
        return self._sorted

    def __iter__(self):
        return iter(self.sorted_terms())

    def monomials(self):
        return [e for e, _ in self.sorted_terms()]

    def lead_monomial(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        key = self.ring._key
        return max(self.terms, key=key)

    def lead_coeff(self):
        return CycNum(self.ring.field, self.terms[self.lead_monomial()])

    def coefficient(self, exps):
        c = self.terms.get(tuple(exps))
        if c is None:
            return CycNum(self.ring.field, self.ring.field.zero)
        return CycNum(self.ring.field, c)

    def degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degrees(self):
        return {sum(e) for e in self.terms}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def homogeneous_degree(self):
        """Degree of a nonzero homogeneous polynomial, else NotHomogeneous."""
        degs = self.degrees()
        if len(degs) != 1:
            raise NotHomogeneous(f"not a nonzero homogeneous polynomial: {self}")
        return next(iter(degs))

    def is_monomial(self):
        return len(self.terms) == 1

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def constant_value(self):
        if not self.terms:
            return CycNum(self.ring.field, self.ring.field.zero)
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return CycNum(self.ring.field, next(iter(self.terms.values())))

    def variables(self):
        used = set()
        for e in self.terms:
            used.update(i for i, k in enumerate(e) if k)
        return sorted(used)

    # arithmetic ------------------------------------------------------------
    def _check(self, other):
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring!r} vs {other.ring!r}")

    def _lift(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (CycNum, int)) or type(other).__name__ in ("mpq", "Fraction"):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        F = self.ring.field
        out = dict(self.terms)
        for e, c in other.terms.items():
            if e in out:
                s = F.add(out[e], c)
                if F.is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.field.neg
        return Poly(self.ring, {e: neg(c) for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (CycNum, int)) or type(other).__name__ in ("mpq", "Fraction"):
                return self.scale(other)
            return NotImplemented
        self._check(other)
        F = self.ring.field
        mul, add, is_zero = F.mul, F.add, F.is_zero
        out = {}
        small, big = (self, other) if len(self.terms) <= len(other.terms) else (other, self)
        for e1, c1 in small.terms.items():
            for e2, c2 in big.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                c = mul(c1, c2)
                if e in out:
                    out[e] = add(out[e], c)
                else:
                    out[e] = c
        return Poly(self.ring, {e: c for e, c in out.items() if not is_zero(c)})

    __rmul__ = __mul__

    def scale(self, c):
        F = self.ring.field
        c = self.ring.coerce_coeff(c)
        if F.is_zero(c):
            return self.ring.zero()
        return Poly(self.ring, {e: F.mul(v, c) for e, v in self.terms.items()})

    def mul_monomial(self, mono, coeff=None):
        F = self.ring.field
        if coeff is None:
            return Poly(self.ring, {tuple(x + y for x, y in zip(e, mono)): c for e, c in self.terms.items()})
        return Poly(self.ring, {tuple(x + y for x, y in zip(e, mono)): F.mul(c, coeff) for e, c in self.terms.items()})

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        """Division by a nonzero constant only."""
        if isinstance(other, Poly):
            other = other.constant_value()
        c = CycNum.coerce(self.ring.field, other)
        return self.scale(c.inverse())

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, CycNum)) or type(other).__name__ in ("mpq", "Fraction"):
            return self == self.ring.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def monic(self):
        if not self.terms:
            return self
        F = self.ring.field
        return self.scale(CycNum(F, F.inv(self.terms[self.lead_monomial()])))

    # calculus and substitution --------------------------------------------
    def diff(self, i):
        if not 0 <= i < self.ring.nvars:
            raise IndexError(f"variable index {i} out of range")
        F = self.ring.field
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                e2 = e[:i] + (k - 1,) + e[i + 1:]
                out[e2] = F.scale(c, mpq(k))
        return Poly(self.ring, out)

    def substitute(self, images):
        """Compose with ``images`` (one polynomial per variable)."""
        if len(images) != self.ring.nvars:
            raise RingMismatch(f"need {self.ring.nvars} images, got {len(images)}")
        rings = {im.ring for im in images if isinstance(im, Poly)}
        if len(rings) > 1:
            raise RingMismatch("images live in different rings")
        target = rings.pop() if rings else self.ring
        if target.field != self.ring.field:
            raise RingMismatch("images must share the coefficient field")
        images = [im if isinstance(im, Poly) else target.const(im) for im in images]
        powers = [dict() for _ in images]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = images[i] ** k
            return cache[k]

        result = target.zero()
        for e, c in self.terms.items():
            term = target.const(CycNum(self.ring.field, c))
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            result = result + term
        return result

    def evaluate(self, point):
        """Value at a point given as field elements / rationals."""
        F = self.ring.field
        pt = [self.ring.coerce_coeff(p) for p in point]
        if len(pt) != self.ring.nvars:
            raise RingMismatch("point has the wrong number of coordinates")
        total = F.zero
        for e, c in self.terms.items():
            v = c
            for i, k in enumerate(e):
                if k:
                    v = F.mul(v, F.power(pt[i], k))
            total = F.add(total, v)
        return CycNum(F, total)

    def homogeneous_part(self, deg):
        return Poly(self.ring, {e: c for e, c in self.terms.items() if sum(e) == deg})

    def to_ring(self, ring, index_map=None):
        """Re-embed into another ring; ``index_map[i]`` is the target index of variable i."""
        if index_map is None:
            index_map = list(range(self.ring.nvars))
        out = {}
        for e, c in self.terms.items():
            new = [0] * ring.nvars
            for i, k in enumerate(e):
                if k:
                    new[index_map[i]] += k
            out[tuple(new)] = ring.coerce_coeff(CycNum(self.ring.field, c))
        return Poly(ring, out)

    # text ------------------------------------------------------------------
    def __str__(self):
        return print_poly(self)

    def __repr__(self):
        return f"Poly({print_poly(self)!r})"


def _mono_str(e, names):
    parts = []
    for i, k in enumerate(e):
        if k == 1:
            parts.append(names[i])
        elif k:
            parts.append(f"{names[i]}^{k}")
    return "*".join(parts)


def print_poly(p, names=None):
    """Canonical text: terms in decreasing order, rational coefficients bare,
    other coefficients parenthesised expressions in ``z``."""
    if not p.terms:
        return "0"
    F = p.ring.field
    names = names or p.ring.names
    pieces = []
    for e, c in p.sorted_terms():
        mono = _mono_str(e, names)
        if F.is_rational(c):
            q = c[0]
            neg = q < 0
            a = -q if neg else q
            if a.denominator == 1:
                cs = str(a.numerator)
            else:
                cs = f"({a.numerator}/{a.denominator})"
            if mono:
                body = mono if a == 1 else f"{cs}*{mono}"
            else:
                body = cs
        else:
            neg = False
            cs = f"({F.format_raw(c)})"
            body = f"{cs}*{mono}" if mono else cs
        pieces.append(("-" if neg else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out


def parse_poly(text, ring, one_based=False):
    """Parse the polynomial grammar (``coeff*xI^E*...`` terms joined by +/-).

    Variables are ``x0``, ``x1``, ...; with ``one_based`` the names ``x1``..
    ``x{N}`` refer to variables 0..N-1.  Coefficients may be rationals or
    parenthesised expressions in ``z``.
    """
    field = ring.field
    shift = 1 if one_based else 0
    by_name = {name: i for i, name in enumerate(ring.names)}

    def atom(name, pos):
        if name == "z":
            return ring.const(field.gen())
        if not one_based and name in by_name:
            return ring.gen(by_name[name])
        if name.startswith("x") and name[1:].isdigit():
            i = int(name[1:]) - shift
            if 0 <= i < ring.nvars:
                return ring.gen(i)
        raise ParseError(f"unknown variable {name!r}", text, pos)

    def divide(a, b, pos):
        if not b.is_constant() or not b:
            raise ParseError("can only divide by a nonzero constant", text, pos)
        return a / b

    return ExprParser(text, atom, ring.const, divide).parse()


def random_poly(ring, deg, rng, coeffs=(-1, 0, 1)):
    """Random homogeneous polynomial with coefficients drawn from ``coeffs``."""
    terms = []
    for e in monomials_of_degree(ring.nvars, deg, order=ring.order):
        c = rng.choice(coeffs)
        if c:
            terms.append((e, c))
    return ring.from_terms(terms)
