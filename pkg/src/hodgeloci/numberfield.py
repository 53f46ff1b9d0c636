"""Exact arithmetic in Q and in cyclotomic fields Q(z) = Q[z]/Phi_m(z).

Elements are stored densely in the power basis 1, z, ..., z^(phi-1) with
``gmpy2.mpq`` coordinates.  The hot loops elsewhere in the package work on
the bare coordinate tuples ("raw" elements) through the ``CycField``
methods; ``CycNum`` wraps a raw element for the public API.
"""

from fractions import Fraction
from functools import lru_cache
import re

from gmpy2 import mpq

from .errors import FieldMismatch, InverseOfZero, ParseError

__all__ = [
    "cyclotomic_polynomial",
    "euler_phi",
    "CycField",
    "CycNum",
    "cyclotomic_field",
    "QQ",
    "zeta_pow",
    "to_rational",
    "parse_cycnum",
]


def to_rational(x):
    """Coerce int / Fraction / mpq / 'p/q' strings to mpq."""
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, str):
        return mpq(x.strip())
    return mpq(x)


def _poly_divmod(num, den):
    """Exact division of integer/rational coefficient lists (low -> high)."""
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    lead = den[-1]
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        if c:
            c = c / lead if lead != 1 else c
            q[k] = c
            for i, dc in enumerate(den):
                num[k + i] -= c * dc
    rem = num[: len(den) - 1]
    while rem and not rem[-1]:
        rem.pop()
    return q, rem


@lru_cache(maxsize=None)
def _cyclotomic(m):
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num, rem = _poly_divmod(num, _cyclotomic(d))
            assert not rem
    return tuple(int(c) for c in num)


def cyclotomic_polynomial(m):
    """Coefficients (constant term first) of the m-th cyclotomic polynomial.

    Computed as (z^m - 1) divided by Phi_d for every proper divisor d.
    """
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"conductor must be a positive integer, got {m!r}")
    return list(_cyclotomic(m))


def euler_phi(m):
    result, k, p = m, m, 2
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1
    if k > 1:
        result -= result // k
    return result


class CycField:
    """The cyclotomic field Q(zeta_m).

    Use :func:`cyclotomic_field` rather than the constructor so that fields
    are shared; equality of fields is by conductor.
    """

    def __init__(self, m):
        self.m = m
        self.minpoly = cyclotomic_polynomial(m)
        self.phi = len(self.minpoly) - 1
        phi = self.phi
        self.zero = (mpq(0),) * phi
        self.one = (mpq(1),) + (mpq(0),) * (phi - 1)
        # z^k for phi <= k <= 2 phi - 2, in the power basis
        tail = [mpq(-c) for c in self.minpoly[:-1]]
        table = []
        cur = tail
        for _ in range(max(phi - 1, 0)):
            table.append(tuple(cur))
            top = cur[-1]
            cur = [mpq(0)] + cur[:-1]
            if top:
                cur = [a + top * t for a, t in zip(cur, tail)]
        self._table = table
        self._build_ops()
        self._powers = None

    def _build_ops(self):
        phi = self.phi
        if phi == 1:
            self.add = lambda a, b: (a[0] + b[0],)
            self.sub = lambda a, b: (a[0] - b[0],)
            self.mul = lambda a, b: (a[0] * b[0],)
            self.neg = lambda a: (-a[0],)
            self.is_zero = lambda a: not a[0]
            self.submul = lambda a, b, c: (a[0] - b[0] * c[0],)
        elif phi == 2:
            c0, c1 = (mpq(c) for c in self.minpoly[:2])

            def mul(a, b):
                a0, a1 = a
                b0, b1 = b
                t = a1 * b1
                if not t:
                    return (a0 * b0, a0 * b1 + a1 * b0)
                return (a0 * b0 - c0 * t, a0 * b1 + a1 * b0 - c1 * t)

            def submul(a, b, c):
                p0, p1 = mul(b, c)
                return (a[0] - p0, a[1] - p1)

            self.add = lambda a, b: (a[0] + b[0], a[1] + b[1])
            self.sub = lambda a, b: (a[0] - b[0], a[1] - b[1])
            self.mul = mul
            self.neg = lambda a: (-a[0], -a[1])
            self.is_zero = lambda a: not (a[0] or a[1])
            self.submul = submul
        else:
            table = self._table

            def mul(a, b):
                prod = [mpq(0)] * (2 * phi - 1)
                for i, ai in enumerate(a):
                    if ai:
                        for j, bj in enumerate(b):
                            if bj:
                                prod[i + j] += ai * bj
                res = prod[:phi]
                for k in range(phi, 2 * phi - 1):
                    c = prod[k]
                    if c:
                        row = table[k - phi]
                        for i in range(phi):
                            res[i] += c * row[i]
                return tuple(res)

            self.add = lambda a, b: tuple(x + y for x, y in zip(a, b))
            self.sub = lambda a, b: tuple(x - y for x, y in zip(a, b))
            self.mul = mul
            self.neg = lambda a: tuple(-x for x in a)
            self.is_zero = lambda a: not any(a)
            self.submul = lambda a, b, c: tuple(x - y for x, y in zip(a, mul(b, c)))

    # raw-element helpers -------------------------------------------------
    def from_rational(self, q):
        return (to_rational(q),) + (mpq(0),) * (self.phi - 1)

    def is_rational(self, a):
        return not any(a[1:])

    def scale(self, a, q):
        return tuple(x * q for x in a)

    def inv(self, a):
        """Inverse by the extended Euclidean algorithm against Phi_m."""
        if self.is_zero(a):
            raise InverseOfZero("inverse of zero in Q(zeta_%d)" % self.m)
        if self.phi == 1:
            return (1 / a[0],)
        # invariant: r_i = s_i * a  (mod Phi)
        r0, s0 = [mpq(c) for c in self.minpoly], [mpq(0)]
        r1, s1 = list(a), [mpq(1)]
        while r1 and not r1[-1]:
            r1.pop()
        while len(r1) > 1:
            q, rem = _poly_divmod(r0, r1)
            s2 = _poly_sub(s0, _poly_mul(q, s1))
            r0, s0, r1, s1 = r1, s1, rem, s2
        c = r1[0]
        out = [x / c for x in s1]
        return self.reduce(out)

    def reduce(self, coeffs):
        """Reduce an arbitrary coefficient list modulo Phi_m."""
        coeffs = [to_rational(c) for c in coeffs]
        phi = self.phi
        if len(coeffs) <= phi:
            return tuple(coeffs) + (mpq(0),) * (phi - len(coeffs))
        _, rem = _poly_divmod(coeffs, [mpq(c) for c in self.minpoly])
        return tuple(rem) + (mpq(0),) * (phi - len(rem))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def power(self, a, k):
        if k < 0:
            a, k = self.inv(a), -k
        result = self.one
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def zeta_raw(self, k=1):
        if self._powers is None:
            gen = self.reduce([0, 1])
            pw = [self.one]
            for _ in range(self.m - 1):
                pw.append(self.mul(pw[-1], gen))
            self._powers = pw
        return self._powers[k % self.m]

    # public constructors -------------------------------------------------
    def __call__(self, x):
        return CycNum.coerce(self, x)

    def gen(self):
        return CycNum(self, self.zeta_raw(1))

    def __eq__(self, other):
        return isinstance(other, CycField) and other.m == self.m

    def __hash__(self):
        return hash(("CycField", self.m))

    def __repr__(self):
        return f"CycField({self.m})"

    def format_raw(self, a):
        return _format_coords(a)

    def parse(self, text):
        return parse_cycnum(text, self)


def _poly_mul(a, b):
    out = [mpq(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [mpq(0)] * (n - len(a))
    b = list(b) + [mpq(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


@lru_cache(maxsize=None)
def cyclotomic_field(m):
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"conductor must be a positive integer, got {m!r}")
    return CycField(m)


QQ = cyclotomic_field(1)


def _fmt_rational(q, parens=True):
    if q.denominator == 1:
        return str(q.numerator)
    s = f"{q.numerator}/{q.denominator}"
    return f"({s})" if parens else s


def _format_coords(coords):
    parts = []
    for k in range(len(coords) - 1, -1, -1):
        c = coords[k]
        if not c:
            continue
        neg = c < 0
        a = -c if neg else c
        if k == 0:
            body = _fmt_rational(a, parens=len(parts) > 0)
        else:
            mono = "z" if k == 1 else f"z^{k}"
            body = mono if a == 1 else f"{_fmt_rational(a)}*{mono}"
        parts.append(("-" if neg else "+", body))
    if not parts:
        return "0"
    sign, body = parts[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class CycNum:
    """An element of Q(zeta_m), immutable and canonical."""

    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        if len(coords) != field.phi:
            coords = field.reduce(coords)
        self.field = field
        self.coords = tuple(to_rational(c) for c in coords)

    @classmethod
    def coerce(cls, field, x):
        if isinstance(x, CycNum):
            if x.field != field:
                if x.field.phi == 1 and x.field.m in (1, 2):
                    return cls(field, field.from_rational(x.coords[0]))
                raise FieldMismatch(f"{x.field!r} vs {field!r}")
            return x
        if isinstance(x, str):
            return parse_cycnum(x, field)
        return cls(field, field.from_rational(x))

    def _other(self, other):
        if isinstance(other, CycNum):
            if other.field != self.field:
                return CycNum.coerce(self.field, other).coords
            return other.coords
        if isinstance(other, (int, Fraction)) or type(other).__name__ == "mpq":
            return self.field.from_rational(other)
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return CycNum(self.field, self.field.add(self.coords, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return CycNum(self.field, self.field.sub(self.coords, b))

    def __rsub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return CycNum(self.field, self.field.sub(b, self.coords))

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return CycNum(self.field, self.field.mul(self.coords, b))

    __rmul__ = __mul__

    def __neg__(self):
        return CycNum(self.field, self.field.neg(self.coords))

    def inverse(self):
        return CycNum(self.field, self.field.inv(self.coords))

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return CycNum(self.field, self.field.div(self.coords, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return CycNum(self.field, self.field.div(b, self.coords))

    def __pow__(self, k):
        return CycNum(self.field, self.field.power(self.coords, int(k)))

    def __eq__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return False
        return self.coords == tuple(b)

    def __hash__(self):
        if self.field.is_rational(self.coords):
            return hash(self.coords[0])
        return hash((self.field.m, self.coords))

    def __bool__(self):
        return not self.field.is_zero(self.coords)

    def is_rational(self):
        return self.field.is_rational(self.coords)

    def to_rational(self):
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def __str__(self):
        return _format_coords(self.coords)

    def __repr__(self):
        return f"CycNum({self.field.m}, {self})"


def zeta_pow(field, k):
    """zeta_m^k with k reduced modulo m."""
    return CycNum(field, field.zeta_raw(k))


# --- a small recursive-descent expression parser, shared with polyring ----

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([-+*/^()])")


def tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        if m.group(1):
            tokens.append(("int", m.group(1), pos))
        elif m.group(2):
            tokens.append(("name", m.group(2), pos))
        else:
            tokens.append((m.group(3), m.group(3), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class ExprParser:
    """Parses sums of products with ^ powers and parentheses.

    ``atom(name, pos)`` maps identifiers to values, ``const(q)`` lifts an
    mpq, ``divide(a, b, pos)`` handles '/'.  Values must support + - * and
    ``**`` with a non-negative int.
    """

    def __init__(self, text, atom, const, divide):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.atom = atom
        self.const = const
        self.divide = divide

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1] or 'end of input'!r}", self.text, tok[2])
        self.i += 1
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            raise ParseError("empty expression", self.text, 0)
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected token {tok[1]!r}", self.text, tok[2])
        return value

    def expr(self):
        sign = 1
        while self.peek()[0] in ("+", "-"):
            if self.take()[0] == "-":
                sign = -sign
        value = self.term()
        if sign < 0:
            value = -value
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek()[0] in ("*", "/"):
            op, _, pos = self.take()
            rhs = self.factor()
            value = value * rhs if op == "*" else self.divide(value, rhs, pos)
        return value

    def factor(self):
        base = self.primary()
        if self.peek()[0] == "^":
            self.take()
            neg = False
            if self.peek()[0] == "-":
                self.take()
                neg = True
            tok = self.take("int")
            e = int(tok[1])
            if neg:
                raise ParseError("negative exponents are not supported", self.text, tok[2])
            base = base ** e
        return base

    def primary(self):
        tok = self.peek()
        if tok[0] == "int":
            self.take()
            return self.const(mpq(int(tok[1])))
        if tok[0] == "name":
            self.take()
            return self.atom(tok[1], tok[2])
        if tok[0] == "(":
            self.take()
            value = self.expr()
            self.take(")")
            return value
        if tok[0] == "-":
            self.take()
            return -self.factor()
        raise ParseError(f"unexpected token {tok[1] or 'end of input'!r}", self.text, tok[2])


def parse_cycnum(text, field):
    """Parse a polynomial expression in the symbol ``z``."""

    def atom(name, pos):
        if name != "z":
            raise ParseError(f"unknown symbol {name!r}", text, pos)
        return field.gen()

    def divide(a, b, pos):
        if not b:
            raise ParseError("division by zero", text, pos)
        return a / b

    return ExprParser(text, atom, lambda q: CycNum(field, field.from_rational(q)), divide).parse()
