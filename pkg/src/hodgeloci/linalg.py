"""Exact linear algebra over Q(zeta_m): echelon forms, rank, kernels, subspaces.

Vectors and matrix rows are sparse dicts ``{column: raw element}``.  The
main elimination is a sparse Gauss-Jordan that keeps its pivot rows fully
reduced at all times, so a new row only has to be swept once.  A
fraction-free Bareiss rank and a modular rank are kept alongside as
independent checks.
"""

from gmpy2 import mpq, is_prime, next_prime

from .errors import AmbientMismatch, SizeMismatch
from .numberfield import CycNum

__all__ = [
    "Mat",
    "Subspace",
    "echelon",
    "rank",
    "kernel_basis",
    "intersect",
    "rref_rows",
    "rank_fraction_free",
    "rank_hint_modular",
]


def _axpy(F, r, s, a):
    """r -= a * s, in place, dropping zeros."""
    mul, submul, neg, is_zero = F.mul, F.submul, F.neg, F.is_zero
    for c, v in s.items():
        w = r.get(c)
        if w is None:
            r[c] = neg(mul(a, v))
        else:
            w = submul(w, a, v)
            if is_zero(w):
                del r[c]
            else:
                r[c] = w


class _Echelon:
    """Incremental reduced row echelon form of sparse rows."""

    def __init__(self, field):
        self.F = field
        self.piv = {}  # pivot column -> normalized row

    def reduce(self, row):
        """Return a copy of ``row`` reduced against the current pivots."""
        r = dict(row)
        piv = self.piv
        for c in [c for c in r if c in piv]:
            _axpy(self.F, r, piv[c], r[c])
        return r

    def add(self, row):
        """Insert a row; returns True when the rank grew."""
        F = self.F
        r = self.reduce(row)
        if not r:
            return False
        c0 = min(r)
        inv = F.inv(r[c0])
        if inv != F.one:
            r = {c: F.mul(v, inv) for c, v in r.items()}
        r[c0] = F.one
        for prow in self.piv.values():
            a = prow.get(c0)
            if a is not None:
                _axpy(F, prow, r, a)
        self.piv[c0] = r
        return True

    @property
    def rank(self):
        return len(self.piv)

    def rows(self):
        return [self.piv[c] for c in sorted(self.piv)]

    def pivots(self):
        return sorted(self.piv)


def rref_rows(field, rows):
    """RREF of sparse rows: (rows sorted by pivot column, pivot columns)."""
    ech = _Echelon(field)
    for r in rows:
        ech.add(r)
    return ech.rows(), ech.pivots()


def _complement_rows(field, rref, pivots, ncols):
    """Basis of {v : r . v = 0 for every row r}, one vector per free column."""
    F = field
    pivset = set(pivots)
    out = {f: {f: F.one} for f in range(ncols) if f not in pivset}
    for p, row in zip(pivots, rref):
        for c, v in row.items():
            if c != p:
                out[c][p] = F.neg(v)
    return [out[f] for f in sorted(out)]


def _to_sparse(field, vec):
    if isinstance(vec, dict):
        return {c: v for c, v in vec.items() if not field.is_zero(v)}
    out = {}
    for c, v in enumerate(vec):
        if isinstance(v, tuple):
            raw = v
        elif isinstance(v, CycNum):
            raw = CycNum.coerce(field, v).coords
        else:
            raw = field.from_rational(v)
        if not field.is_zero(raw):
            out[c] = raw
    return out


class Mat:
    """Rectangular matrix with sparse rows over a cyclotomic field."""

    def __init__(self, field, nrows, ncols, rows=None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else [dict() for _ in range(nrows)]
        if len(self.rows) != nrows:
            raise SizeMismatch("row count does not match")

    @classmethod
    def from_rows(cls, field, rows, ncols=None):
        rows = [list(r) if not isinstance(r, dict) else r for r in rows]
        if ncols is None:
            ncols = max((len(r) for r in rows if not isinstance(r, dict)), default=0)
        for r in rows:
            if not isinstance(r, dict) and len(r) != ncols:
                raise SizeMismatch("rows must have equal length")
        return cls(field, len(rows), ncols, [_to_sparse(field, r) for r in rows])

    @classmethod
    def identity(cls, field, n):
        return cls(field, n, n, [{i: field.one} for i in range(n)])

    @classmethod
    def zeros(cls, field, nrows, ncols):
        return cls(field, nrows, ncols)

    def __getitem__(self, ij):
        i, j = ij
        return CycNum(self.field, self.rows[i].get(j, self.field.zero))

    def to_lists(self):
        return [[self[i, j] for j in range(self.ncols)] for i in range(self.nrows)]

    def transpose(self):
        cols = [dict() for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                cols[j][i] = v
        return Mat(self.field, self.ncols, self.nrows, cols)

    def vstack(self, other):
        if other.ncols != self.ncols:
            raise SizeMismatch("column counts differ")
        return Mat(self.field, self.nrows + other.nrows, self.ncols, self.rows + other.rows)

    def hstack(self, other):
        if other.nrows != self.nrows:
            raise SizeMismatch("row counts differ")
        off = self.ncols
        rows = [{**r1, **{off + c: v for c, v in r2.items()}} for r1, r2 in zip(self.rows, other.rows)]
        return Mat(self.field, self.nrows, self.ncols + other.ncols, rows)

    def permuted(self, row_perm=None, col_perm=None):
        rows = self.rows if row_perm is None else [self.rows[i] for i in row_perm]
        if col_perm is not None:
            inv = {old: new for new, old in enumerate(col_perm)}
            rows = [{inv[c]: v for c, v in r.items()} for r in rows]
        return Mat(self.field, self.nrows, self.ncols, [dict(r) for r in rows])

    def apply(self, vec):
        """Matrix-vector product with a sparse vector."""
        F = self.field
        vec = _to_sparse(F, vec)
        out = {}
        for i, r in enumerate(self.rows):
            acc = F.zero
            for c, v in r.items():
                w = vec.get(c)
                if w is not None:
                    acc = F.add(acc, F.mul(v, w))
            if not F.is_zero(acc):
                out[i] = acc
        return out

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and (self.nrows, self.ncols) == (other.nrows, other.ncols)
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"Mat({self.nrows}x{self.ncols} over Q(zeta_{self.field.m}))"


def echelon(m):
    """Reduced row echelon form and rank.

    Pivots are the leftmost nonzero columns; the result is the unique RREF,
    padded with zero rows to the original shape.
    """
    rows, _ = rref_rows(m.field, m.rows)
    rank_ = len(rows)
    padded = [dict(r) for r in rows] + [dict() for _ in range(m.nrows - rank_)]
    return Mat(m.field, m.nrows, m.ncols, padded), rank_


def rank(m):
    ech = _Echelon(m.field)
    for r in m.rows:
        ech.add(r)
    return ech.rank


def kernel_basis(m):
    """Right kernel {v : m v = 0} as a Subspace of the column space."""
    return Subspace.from_equations(m.field, m.ncols, m.rows)


def intersect(a, b):
    return a.intersect(b)


class Subspace:
    """A linear subspace of F^ambient.

    Held by its RREF basis, by the RREF of its annihilator (the equations
    cutting it out under the standard bilinear pairing), or both; each is
    derived from the other on demand.  Equality compares the canonical
    equation form.
    """

    def __init__(self, field, ambient, basis=None, equations=None):
        self.field = field
        self.ambient = ambient
        self._basis = basis  # (rows, pivots) in RREF
        self._eqs = equations  # (rows, pivots) in RREF
        if basis is None and equations is None:
            raise ValueError("need a basis or equations")

    @classmethod
    def from_basis(cls, field, ambient, vectors):
        rows, piv = rref_rows(field, [_to_sparse(field, v) for v in vectors])
        _check_cols(piv, rows, ambient)
        return cls(field, ambient, basis=(rows, piv))

    @classmethod
    def from_equations(cls, field, ambient, rows):
        rows, piv = rref_rows(field, [_to_sparse(field, r) for r in rows])
        _check_cols(piv, rows, ambient)
        return cls(field, ambient, equations=(rows, piv))

    @classmethod
    def full(cls, field, ambient):
        return cls(field, ambient, equations=([], []))

    @classmethod
    def zero(cls, field, ambient):
        return cls(field, ambient, basis=([], []))

    @property
    def dim(self):
        if self._basis is not None:
            return len(self._basis[0])
        return self.ambient - len(self._eqs[0])

    @property
    def codim(self):
        return self.ambient - self.dim

    def basis(self):
        """RREF basis rows (sparse dicts)."""
        if self._basis is None:
            rows, piv = self._eqs
            comp = _complement_rows(self.field, rows, piv, self.ambient)
            self._basis = rref_rows(self.field, comp)
        return self._basis[0]

    def equations(self):
        """RREF rows of the annihilator."""
        if self._eqs is None:
            rows, piv = self._basis
            comp = _complement_rows(self.field, rows, piv, self.ambient)
            self._eqs = rref_rows(self.field, comp)
        return self._eqs[0]

    def basis_matrix(self):
        b = self.basis()
        return Mat(self.field, len(b), self.ambient, [dict(r) for r in b])

    def contains(self, vec):
        F = self.field
        vec = _to_sparse(F, vec)
        for row in self.equations():
            acc = F.zero
            for c, v in row.items():
                w = vec.get(c)
                if w is not None:
                    acc = F.add(acc, F.mul(v, w))
            if not F.is_zero(acc):
                return False
        return True

    def __contains__(self, vec):
        return self.contains(vec)

    def issubspace(self, other):
        self._same_ambient(other)
        if self.dim > other.dim:
            return False
        return all(other.contains(v) for v in self.basis())

    def __le__(self, other):
        return self.issubspace(other)

    def _same_ambient(self, other):
        if self.ambient != other.ambient or self.field != other.field:
            raise AmbientMismatch(f"ambient {self.ambient} vs {other.ambient}")

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        self._same_ambient(other)
        if self.dim != other.dim:
            return False
        return self.equations() == other.equations()

    def __hash__(self):
        return hash((self.ambient, self.dim))

    def intersect(self, other):
        self._same_ambient(other)
        return Subspace.from_equations(self.field, self.ambient, self.equations() + other.equations())

    def sum(self, other):
        self._same_ambient(other)
        return Subspace.from_basis(self.field, self.ambient, self.basis() + other.basis())

    def quotient_dim(self, other):
        """dim(self / other) for other contained in self."""
        return self.dim - other.dim

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def _check_cols(piv, rows, ambient):
    for r in rows:
        if r and max(r) >= ambient:
            raise AmbientMismatch(f"vector entry beyond ambient dimension {ambient}")


# --- independent rank routes ---------------------------------------------


def _clear_denominators(F, row):
    """Scale a dense row of raw elements to integer coordinates."""
    from math import lcm

    den = 1
    for v in row:
        for q in v:
            den = lcm(den, int(q.denominator))
    return [tuple(mpq(int(q * den)) for q in v) for v in row]


def rank_fraction_free(m):
    """Rank by Bareiss fraction-free elimination over Z[zeta] (dense).

    Rows are first scaled to integral coordinates; every Bareiss quotient is
    then an exact division in Z[zeta], which is asserted.
    """
    F = m.field
    A = [_clear_denominators(F, [r.get(j, F.zero) for j in range(m.ncols)]) for r in m.rows]
    nrows, ncols = m.nrows, m.ncols
    prev = F.one
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if not F.is_zero(A[i][c])), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        piv = A[r][c]
        inv_prev = F.inv(prev)
        for i in range(r + 1, nrows):
            a = A[i][c]
            row_i = A[i]
            row_r = A[r]
            new = list(row_i)
            for j in range(c, ncols):
                v = F.sub(F.mul(piv, row_i[j]), F.mul(a, row_r[j]))
                v = F.mul(v, inv_prev)
                assert all(q.denominator == 1 for q in v), "Bareiss quotient not integral"
                new[j] = v
            # columns left of c are already zero in rows below r
            A[i] = new
        prev = piv
        r += 1
    return r


def _prime_for(m, start):
    p = int(next_prime(start))
    while (p - 1) % m:
        p = int(next_prime(p))
    return p


def _root_of_unity_mod(F, p):
    for a in range(2, p):
        r = pow(a, (p - 1) // F.m, p)
        val = 0
        for c in reversed(F.minpoly):
            val = (val * r + c) % p
        if val == 0:
            return r
    raise ValueError("no primitive root of unity found")


def rank_hint_modular(m, p=None):
    """Rank of the image of ``m`` modulo a prime p = 1 (mod conductor).

    zeta is sent to a root of Phi_m mod p.  The result never exceeds the
    exact rank; it is a hint, never a certificate.
    """
    F = m.field
    if p is None:
        p = _prime_for(F.m, 2**31)
    if not is_prime(p) or (p - 1) % F.m:
        raise ValueError("p must be a prime congruent to 1 modulo the conductor")
    r = _root_of_unity_mod(F, p)
    pw = [pow(r, i, p) for i in range(F.phi)]

    def red(v):
        acc = 0
        for q, w in zip(v, pw):
            if q:
                num, den = int(q.numerator), int(q.denominator)
                if den % p == 0:
                    raise ZeroDivisionError("denominator divisible by p")
                acc += num * pow(den, -1, p) * w
        return acc % p

    piv = {}
    for row in m.rows:
        rr = {c: red(v) for c, v in row.items()}
        rr = {c: v for c, v in rr.items() if v}
        for c in sorted(k for k in rr if k in piv):
            a = rr.get(c)
            if not a:
                continue
            for cc, v in piv[c].items():
                rr[cc] = (rr.get(cc, 0) - a * v) % p
            rr = {k: v for k, v in rr.items() if v}
        if not rr:
            continue
        c0 = min(rr)
        inv = pow(rr[c0], -1, p)
        rr = {k: v * inv % p for k, v in rr.items()}
        for prow in piv.values():
            a = prow.get(c0)
            if a:
                for cc, v in rr.items():
                    prow[cc] = (prow.get(cc, 0) - a * v) % p
                for k in [k for k, v in prow.items() if not v]:
                    del prow[k]
        piv[c0] = rr
    return len(piv)
