"""Singular cubic hypersurfaces: cone or rational.

Moving a singular point p of a cubic X = {f = 0} to [1:0:...:0] writes
f = x0*f2 - f3 with f2, f3 forms in x1..x_{n+1}.  If f2 vanishes X is a cone
with vertex p; otherwise projecting from p is inverted by
[x] -> [f3(x) : x*f2(x)], so X is rational.  Points carry exact coordinates
in the coefficient field.
"""

from dataclasses import dataclass

from .errors import ConeCase, NotHomogeneous, NotSingularAt, RingMismatch
from .numberfield import CycNum
from .polyring import Poly, PolyRing, monomials_of_degree

__all__ = [
    "SingularCubic",
    "ConeCertificate",
    "is_singular_at",
    "decompose",
    "birational_map",
    "pullback",
    "sing_equations",
    "line_through_sings",
    "line_restriction",
    "random_nodal_cubic",
    "random_two_node_cubic",
]


def _point(ring, p):
    if len(p) != ring.nvars:
        raise RingMismatch(f"point needs {ring.nvars} coordinates, got {len(p)}")
    pt = tuple(CycNum.coerce(ring.field, c) for c in p)
    if not any(pt):
        raise ValueError("the zero vector is not a projective point")
    return pt


def _check_cubic(f):
    if f.is_zero() or f.homogeneous_degree() != 3:
        raise NotHomogeneous("expected a nonzero homogeneous cubic")


def is_singular_at(f, p):
    """f(p) = 0 and every partial derivative vanishes at p."""
    pt = _point(f.ring, p)
    if f.evaluate(pt):
        return False
    return all(not f.diff(i).evaluate(pt) for i in range(f.ring.nvars))


@dataclass(frozen=True)
class SingularCubic:
    """f in the chart where p = [1:0:...:0]: g = x0*f2 - f3.

    ``images[j]`` expresses the original variable x_j as a linear form in the
    new coordinates, so g = f(images).
    """

    f: object
    p: tuple
    images: tuple
    g: object
    f2: object
    f3: object

    @property
    def is_cone(self):
        return False

    @property
    def n(self):
        return self.f.ring.nvars - 2

    def to_original(self, vector):
        """Apply the coordinate change to a list of polynomials (a point of X in new coordinates)."""
        ring = self.f.ring
        out = []
        for im in self.images:
            acc = ring.zero()
            for i, v in enumerate(vector):
                c = im.coefficient(tuple(1 if k == i else 0 for k in range(ring.nvars)))
                if c:
                    acc = acc + v.scale(c)
            out.append(acc)
        return out


@dataclass(frozen=True)
class ConeCertificate(SingularCubic):
    """f2 vanishes: X is the cone with vertex p over {f3 = 0} in P^n."""

    @property
    def is_cone(self):
        return True

    @property
    def vertex(self):
        return self.p


def _chart(ring, pt):
    """Linear forms x_j = p_j*y0 + (y_k for j != i), with i the first nonzero index of p."""
    i = next(k for k, c in enumerate(pt) if c)
    y = ring.gens()
    others = [j for j in range(ring.nvars) if j != i]
    images = []
    for j in range(ring.nvars):
        im = y[0].scale(pt[j]) if pt[j] else ring.zero()
        if j != i:
            im = im + y[others.index(j) + 1]
        images.append(im)
    return images


def decompose(f, p=None):
    """Split a cubic singular at p as x0*f2 - f3 after moving p to [1:0:...:0].

    Returns a ConeCertificate when f2 vanishes, a SingularCubic otherwise.
    ``p`` defaults to [1:0:...:0].
    """
    _check_cubic(f)
    ring = f.ring
    if p is None:
        p = (1,) + (0,) * (ring.nvars - 1)
    pt = _point(ring, p)
    if not is_singular_at(f, pt):
        raise NotSingularAt(f"f is not singular at {[str(c) for c in pt]}")
    images = tuple(_chart(ring, pt))
    g = f.substitute(list(images))
    by_x0 = {}
    for e, c in g.terms.items():
        by_x0.setdefault(e[0], {})[(0,) + e[1:]] = c
    # a singular point kills the x0^3 and x0^2 parts
    assert 3 not in by_x0 and 2 not in by_x0
    f2 = Poly(ring, by_x0.get(1, {}))
    f3 = -Poly(ring, by_x0.get(0, {}))
    cls = ConeCertificate if f2.is_zero() else SingularCubic
    return cls(f, pt, images, g, f2, f3)


def birational_map(sc):
    """Components (f3, x1*f2, ..., x_{n+1}*f2) of the inverse of projection from p."""
    if sc.is_cone:
        raise ConeCase("f2 vanishes: X is a cone, not birational to P^n through p")
    x = sc.g.ring.gens()
    return [sc.f3] + [x[i] * sc.f2 for i in range(1, len(x))]


def pullback(sc):
    """g composed with the birational map; identically zero."""
    return sc.g.substitute(birational_map(sc))


def sing_equations(sc):
    """x0*f2 - f3, f2 and x0*df2/dx_i - df3/dx_i for i = 1..n+1."""
    x0 = sc.g.ring.gen(0)
    out = [x0 * sc.f2 - sc.f3, sc.f2]
    for i in range(1, sc.g.ring.nvars):
        out.append(x0 * sc.f2.diff(i) - sc.f3.diff(i))
    return out


def _proportional(p, q):
    n = len(p)
    return all(p[i] * q[j] == p[j] * q[i] for i in range(n) for j in range(i + 1, n))


def line_restriction(f, p, q):
    """f(s*p + t*q) as a binary form in (s, t)."""
    ring = f.ring
    pt, qt = _point(ring, p), _point(ring, q)
    line = PolyRing(2, ring.field, names=("s", "t"))
    s, t = line.gens()
    images = []
    for a, b in zip(pt, qt):
        im = line.zero()
        if a:
            im = im + s.scale(a)
        if b:
            im = im + t.scale(b)
        images.append(im)
    return f.substitute(images)


def line_through_sings(f, p, q):
    """True when f vanishes on the line through two distinct singular points."""
    _check_cubic(f)
    pt, qt = _point(f.ring, p), _point(f.ring, q)
    if _proportional(pt, qt):
        raise ValueError("p and q must be distinct projective points")
    for r in (pt, qt):
        if not is_singular_at(f, r):
            raise NotSingularAt(f"f is not singular at {[str(c) for c in r]}")
    return line_restriction(f, pt, qt).is_zero()


# --- random examples ------------------------------------------------------------


def _random_unimodular(n, rng, steps=None):
    """An integer matrix of determinant 1 and its inverse, as products of elementary moves."""
    ops = []
    for _ in range(steps if steps is not None else 2 * n):
        i, j = rng.sample(range(n), 2)
        ops.append((i, j, rng.choice((-1, 1))))
    a = [[int(r == c) for c in range(n)] for r in range(n)]
    inv = [row[:] for row in a]
    for i, j, c in ops:
        # a <- a * (I + c e_ij): column j += c * column i
        for r in range(n):
            a[r][j] += c * a[r][i]
    for i, j, c in reversed(ops):
        # inv <- inv * (I - c e_ij)
        for r in range(n):
            inv[r][j] -= c * inv[r][i]
    return a, inv


def _scatter(h, rng, points):
    """h(A^-1 x) and the images A*p of the given points."""
    ring = h.ring
    n = ring.nvars
    a, inv = _random_unimodular(n, rng)
    x = ring.gens()
    images = []
    for r in range(n):
        im = ring.zero()
        for c in range(n):
            if inv[r][c]:
                im = im + x[c].scale(inv[r][c])
        images.append(im)
    f = h.substitute(images)
    moved = [tuple(sum(a[r][c] * pt[c] for c in range(n)) for r in range(n)) for pt in points]
    return f, moved


def _random_form(ring, deg, rng, allowed, coeffs):
    terms = []
    for e in monomials_of_degree(ring.nvars, deg, order=ring.order):
        if allowed(e):
            c = rng.choice(coeffs)
            if c:
                terms.append((e, c))
    return ring.from_terms(terms)


def random_nodal_cubic(n, rng, coeffs=(-2, -1, 0, 1, 2), scatter=True):
    """(f, p): a random cubic in P^{n+1} singular at the rational point p."""
    ring = PolyRing(n + 2)
    while True:
        h = _random_form(ring, 3, rng, lambda e: e[0] <= 1, coeffs)
        if not h.is_zero():
            break
    p = (1,) + (0,) * (n + 1)
    if not scatter:
        return h, p
    f, (p,) = _scatter(h, rng, [p])
    return f, p


def random_two_node_cubic(n, rng, coeffs=(-2, -1, 0, 1, 2), scatter=True):
    """(f, p, q): a random cubic singular at two distinct rational points."""
    ring = PolyRing(n + 2)
    while True:
        h = _random_form(ring, 3, rng, lambda e: e[0] <= 1 and e[1] <= 1, coeffs)
        if not h.is_zero():
            break
    p = (1,) + (0,) * (n + 1)
    q = (0, 1) + (0,) * n
    if not scatter:
        return h, p, q
    f, (p, q) = _scatter(h, rng, [p, q])
    return f, p, q
