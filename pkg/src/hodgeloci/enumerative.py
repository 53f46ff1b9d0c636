"""Closed-form combinatorics for cubic Hodge loci.

``c_underline_a`` counts the degree-d piece of a complete intersection of
hypersurfaces of degrees a_1, ..., a_s in P^{n+1}; the codimension of V_Z,
the minimal codimension of Hodge loci and the Fano-scheme dimension are all
binomial expressions built on it.  ``table1`` assembles the table of
codimensions for cubic hypersurfaces of dimension 4..12.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .fermat_hodge import hodge_numbers

__all__ = [
    "c_underline_a",
    "codim_VZ",
    "cubic_closed_form",
    "min_codim",
    "fano_dim",
    "fano_report",
    "FanoReport",
    "Table1Row",
    "table1",
    "STORED_COLUMNS",
]


def _check_even(n):
    if not isinstance(n, int) or n < 0 or n % 2:
        raise ValueError(f"n must be a non-negative even integer, got {n!r}")


def c_underline_a(n, d, a):
    """C(n+1+d, n+1) minus the inclusion-exclusion over the entries of ``a``.

    The inner sum runs over unordered choices of k *positions* of ``a`` (so
    repeated values count as distinct entries), keeping only those whose
    values sum to at most d.  Equivalently this is the coefficient of t^d in
    prod(1 - t^a_i) / (1 - t)^(n+2).
    """
    a = sorted(int(x) for x in a)
    if not a:
        raise ValueError("a must be a nonempty multiset")
    if any(x < 0 for x in a):
        raise ValueError("entries of a must be natural numbers")
    total = comb(n + 1 + d, n + 1)
    # group positions by value so identical entries are counted by binomials
    # instead of enumerating every index subset
    values = sorted(set(a))
    mult = [a.count(v) for v in values]

    def rec(i, k, s, weight):
        # weight = number of index subsets realising the chosen counts
        if i == len(values):
            if k:
                acc[0] += (-1) ** (k - 1) * weight * comb(n + 1 + d - s, n + 1)
            return
        v = values[i]
        for c in range(mult[i] + 1):
            if s + c * v > d:
                break
            rec(i + 1, k + c, s + c * v, weight * comb(mult[i], c))

    acc = [0]
    rec(0, 0, 0, 1)
    return total - acc[0]


def _c_by_index_subsets(n, d, a):
    """Literal transcription: enumerate index subsets one by one (slow oracle)."""
    total = comb(n + 1 + d, n + 1)
    for k in range(1, len(a) + 1):
        for idx in combinations(range(len(a)), k):
            s = sum(a[i] for i in idx)
            if s <= d:
                total -= (-1) ** (k - 1) * comb(n + 1 + d - s, n + 1)
    return total


def codim_VZ(n, d, m):
    """2 C_{1^{n/2+1},(d-1)^{n/2+1}} - C_{1^{n-m+1},(d-1)^{m+1}}."""
    _check_even(n)
    if not -1 <= m <= n // 2 - 1:
        raise ValueError(f"m must lie in [-1, {n // 2 - 1}], got {m}")
    h = n // 2 + 1
    first = c_underline_a(n, d, [1] * h + [d - 1] * h)
    second = c_underline_a(n, d, [1] * (n - m + 1) + [d - 1] * (m + 1))
    return 2 * first - second


def cubic_closed_form(k, x):
    """(1/6)k^3 - (1/2)k^2 x + ((1/2)x^2 - 1/6)k - (1/6)x(x-1)(x+1).

    Equals C_{1^{k+1+x}, 2^{k+1-x}} for cubics with n = 2k.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    k, x = Fraction(k), Fraction(x)
    return (k**3 / 6 - k * k * x / 2 + (x * x / 2 - Fraction(1, 6)) * k
            - x * (x - 1) * (x + 1) / 6)


def min_codim(n):
    """(1/6)(k+1)k(k-1) with k = n/2: codimension of cubics containing a P^{n/2}."""
    _check_even(n)
    k = n // 2
    return (k + 1) * k * (k - 1) // 6


@dataclass(frozen=True)
class FanoReport:
    n: int
    r: int
    dlist: tuple
    k: int
    delta: int

    @property
    def empty(self):
        """For a generic complete intersection a negative delta means no k-planes."""
        return self.delta < 0

    def as_dict(self):
        return {"n": self.n, "r": self.r, "d": list(self.dlist), "k": self.k,
                "delta": self.delta, "empty": self.empty}


def fano_dim(n, r, dlist, k):
    """delta = (k+1)(n+r-k) - sum_j C(d_j+k, k): expected dimension of the
    variety of k-planes in a generic complete intersection of multidegree
    ``dlist`` and dimension n in P^{n+r}.  May be negative."""
    if isinstance(dlist, int):
        dlist = [dlist] * r
    dlist = list(dlist)
    if r < 1 or k < 0:
        raise ValueError("need r >= 1 and k >= 0")
    if len(dlist) != r:
        raise ValueError(f"expected {r} degrees, got {len(dlist)}")
    return (k + 1) * (n + r - k) - sum(comb(dj + k, k) for dj in dlist)


def fano_report(n, r, dlist, k):
    if isinstance(dlist, int):
        dlist = [dlist] * r
    return FanoReport(n, r, tuple(dlist), k, fano_dim(n, r, dlist, k))


# Columns for generalized cubic scrolls (CS), quartic scrolls (QS) and
# Veronese-type cycles (V): no formula is available, these are recorded
# values from the published table.
STORED_COLUMNS = {
    4: (1, 1, 1),
    6: (6, 8, 10),
    8: (16, 23, 25),
    10: (32, 45, 47),
    12: (55, 75, 77),
}


@dataclass
class Table1Row:
    n: int
    dimT: int
    range: tuple
    L: int
    CS: object
    M: int
    QS: object
    V: object
    hodge: list
    provenance: dict = field(default_factory=dict)

    def as_dict(self):
        return {
            "n": self.n,
            "dimT": self.dimT,
            "range": list(self.range),
            "L": self.L,
            "CS": self.CS,
            "M": self.M,
            "QS": self.QS,
            "V": self.V,
            "hodge": list(self.hodge),
            "provenance": dict(self.provenance),
        }


_COMPUTED = "computed"
_STORED = "stored constant"


def table1(n_list):
    """Rows of the codimension table for cubic hypersurfaces of even dimension n >= 4.

    M is codim V_Z - 1 with m = n/2 - 3 (for n = 4 that m is -1).
    """
    rows = []
    for n in n_list:
        _check_even(n)
        if n < 4:
            raise ValueError("table rows start at n = 4")
        k = n // 2
        stored = STORED_COLUMNS.get(n)
        cs, qs, v = stored if stored else (None, None, None)
        prov = {c: _COMPUTED for c in ("dimT", "range", "L", "M", "hodge")}
        for c in ("CS", "QS", "V"):
            prov[c] = _STORED if stored else "unavailable"
        rows.append(Table1Row(
            n=n,
            dimT=comb(n + 2, 3),
            range=(comb(k + 1, 3), comb(n + 2, min(3, k - 2))),
            L=min_codim(n),
            CS=cs,
            M=codim_VZ(n, 3, k - 3) - 1,
            QS=qs,
            V=v,
            hodge=hodge_numbers(n, 3),
            provenance=prov,
        ))
    return rows
