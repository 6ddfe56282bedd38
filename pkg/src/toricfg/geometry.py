"""Exact rational geometry for convex polygons in a rank-2 lattice.

Coordinates are ``int`` or ``fractions.Fraction`` throughout; nothing here
touches floating point.  Polygons carry both a vertex ring and a halfplane
list and are kept canonical (counterclockwise vertices starting at the
lexicographic minimum, irredundant halfplanes when full-dimensional), so
equality is plain tuple comparison and fixtures are deterministic.

Degenerate polygons (point, segment, empty set) are first-class values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

NEG_INF = float("-inf")


class UnboundedRegion(ValueError):
    """Halfplane intersection is feasible but not bounded."""


class DegeneratePolygon(ValueError):
    """Operation needs a two-dimensional polygon."""


def dot(u, w):
    return u[0] * w[0] + u[1] * w[1]


def det(u, w):
    return u[0] * w[1] - u[1] * w[0]


def rot90(u):
    """Rotate by +90 degrees: (x, y) -> (-y, x)."""
    return (-u[1], u[0])


def neg(u):
    return (-u[0], -u[1])


def vadd(u, w):
    return (u[0] + w[0], u[1] + w[1])


def vsub(u, w):
    return (u[0] - w[0], u[1] - w[1])


def vscale(c, u):
    return (c * u[0], c * u[1])


def frac2(p):
    if isinstance(p[0], float) or isinstance(p[1], float):
        raise TypeError("floating point is banned here; use int or Fraction")
    return (Fraction(p[0]), Fraction(p[1]))


def is_primitive(u) -> bool:
    return gcd(u[0], u[1]) == 1


def primitivize(u):
    """Primitive integer vector pointing the way of ``u`` (rational allowed)."""
    x, y = Fraction(u[0]), Fraction(u[1])
    if x == 0 and y == 0:
        raise ValueError("zero vector has no direction")
    den = (x.denominator * y.denominator) // gcd(x.denominator, y.denominator)
    a, b = int(x * den), int(y * den)
    g = gcd(a, b)
    return (a // g, b // g)


def ceil_frac(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def floor_frac(x: Fraction) -> int:
    return x.numerator // x.denominator


def _cross3(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points):
    """Counterclockwise hull, starting at the lexicographic minimum.

    Collinear inputs collapse to the two extreme points, a single point to
    itself.  Exact over Fractions.
    """
    pts = sorted(set(points))
    if len(pts) <= 1:
        return pts
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross3(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross3(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _normalize_halfplane(normal, offset):
    n = (int(normal[0]), int(normal[1]))
    if n == (0, 0):
        raise ValueError("halfplane normal must be nonzero")
    if isinstance(offset, float):
        raise TypeError("floating point is banned here; use int or Fraction")
    g = gcd(n[0], n[1])
    return ((n[0] // g, n[1] // g), Fraction(offset) / g)


@dataclass(frozen=True)
class RatPolygon:
    """Rational convex polygon with paired V- and H-representations.

    dim is -1 (empty), 0 (point), 1 (segment) or 2.  Vertices are Fraction
    pairs in counterclockwise order starting at the lexicographic minimum;
    halfplanes are (primitive integer normal, Fraction offset) meaning
    <u, normal> >= offset.
    """

    vertices: tuple
    halfplanes: tuple
    dim: int

    # -- construction ------------------------------------------------------

    @staticmethod
    def empty() -> "RatPolygon":
        return RatPolygon((), (), -1)

    @staticmethod
    def from_vertices(points) -> "RatPolygon":
        pts = [frac2(p) for p in points]
        if not pts:
            return RatPolygon.empty()
        hull = convex_hull(pts)
        return RatPolygon(tuple(hull), _halfplanes_of_hull(hull), _dim_of_hull(hull))

    @staticmethod
    def from_halfplanes(halfplanes) -> "RatPolygon":
        """Canonical polygon cut out by ``<u, n> >= o`` constraints.

        Returns the empty polygon when infeasible and raises
        UnboundedRegion when the feasible set is unbounded.
        """
        if not halfplanes:
            raise ValueError("need at least one halfplane")
        merged = {}
        for normal, offset in halfplanes:
            n, o = _normalize_halfplane(normal, offset)
            if n not in merged or merged[n] < o:
                merged[n] = o
        hps = sorted(merged.items())
        normals = [n for n, _ in hps]

        candidates = set()
        for i in range(len(hps)):
            ni, oi = hps[i]
            for j in range(i + 1, len(hps)):
                nj, oj = hps[j]
                d = det(ni, nj)
                if d == 0:
                    continue
                x = (oi * nj[1] - oj * ni[1]) / d
                y = (ni[0] * oj - nj[0] * oi) / d
                candidates.add((x, y))
        feasible = [p for p in candidates
                    if all(dot(p, n) >= o for n, o in hps)]

        if feasible:
            if _has_recession(normals):
                raise UnboundedRegion("feasible but unbounded halfplane intersection")
            return RatPolygon.from_vertices(feasible)
        if not _has_recession(normals):
            return RatPolygon.empty()  # bounded and vertex-free means empty
        if _helly_feasible(hps):
            raise UnboundedRegion("feasible but unbounded halfplane intersection")
        return RatPolygon.empty()

    # -- basic queries ------------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return self.dim < 0

    def contains(self, point) -> bool:
        if self.is_empty:
            return False
        p = frac2(point)
        return all(dot(p, n) >= o for n, o in self.halfplanes)

    def contains_polygon(self, other: "RatPolygon") -> bool:
        if other.is_empty:
            return True
        if self.is_empty:
            return False
        return all(self.contains(p) for p in other.vertices)

    def support_min(self, direction) -> Fraction:
        """min <p, direction> over the polygon (the support offset)."""
        return min(dot(p, direction) for p in self.vertices)

    def support_max(self, direction) -> Fraction:
        return max(dot(p, direction) for p in self.vertices)

    def translate(self, t) -> "RatPolygon":
        if self.is_empty:
            return self
        t = frac2(t)
        return RatPolygon(
            tuple(vadd(p, t) for p in self.vertices),
            tuple((n, o + dot(t, n)) for n, o in self.halfplanes),
            self.dim,
        )

    def dilate(self, factor) -> "RatPolygon":
        """Scale about the origin by a nonnegative rational factor."""
        c = Fraction(factor)
        if c < 0:
            raise ValueError("dilation factor must be nonnegative")
        if self.is_empty:
            return self
        if c == 0:
            return RatPolygon.from_vertices([(0, 0)])
        return RatPolygon(
            tuple((c * x, c * y) for x, y in self.vertices),
            tuple((n, o * c) for n, o in self.halfplanes),
            self.dim,
        )

    def area(self) -> Fraction:
        if self.dim < 2:
            return Fraction(0)
        total = Fraction(0)
        verts = self.vertices
        for i, p in enumerate(verts):
            q = verts[(i + 1) % len(verts)]
            total += p[0] * q[1] - q[0] * p[1]
        return total / 2

    def edges(self):
        """CCW (start, end) vertex pairs; empty for dim < 1."""
        if self.dim < 1:
            return []
        if self.dim == 1:
            return [(self.vertices[0], self.vertices[1])]
        verts = self.vertices
        return [(verts[i], verts[(i + 1) % len(verts)]) for i in range(len(verts))]


def _dim_of_hull(hull) -> int:
    if len(hull) == 1:
        return 0
    if len(hull) == 2:
        return 1
    return 2


def _halfplanes_of_hull(hull):
    if len(hull) == 1:
        (x, y) = hull[0]
        return (
            ((-1, 0), -x), ((0, -1), -y), ((0, 1), y), ((1, 0), x),
        )
    if len(hull) == 2:
        a, b = hull
        d = primitivize(vsub(b, a))
        n = rot90(d)
        return tuple(sorted([
            (n, Fraction(dot(a, n))),
            (neg(n), Fraction(dot(a, neg(n)))),
            (d, Fraction(dot(a, d))),
            (neg(d), Fraction(dot(b, neg(d)))),
        ]))
    out = []
    for i, a in enumerate(hull):
        b = hull[(i + 1) % len(hull)]
        n = primitivize(rot90(vsub(b, a)))
        out.append((n, Fraction(dot(a, n))))
    return tuple(out)


def _has_recession(normals) -> bool:
    # Extreme recession directions are perpendicular to some normal.
    for n in normals:
        for d in (rot90(n), neg(rot90(n))):
            if all(dot(d, m) >= 0 for m in normals):
                return True
    return False


def _helly_feasible(hps) -> bool:
    # In the plane an intersection of halfplanes is empty iff some pair of
    # antiparallel constraints or some positively spanning triple is.
    for i in range(len(hps)):
        ni, oi = hps[i]
        for j in range(i + 1, len(hps)):
            nj, oj = hps[j]
            if nj == neg(ni) and oi > -oj:
                return False
    for i in range(len(hps)):
        ni, oi = hps[i]
        for j in range(i + 1, len(hps)):
            nj, oj = hps[j]
            for k in range(j + 1, len(hps)):
                nk, ok = hps[k]
                l1, l2, l3 = det(nj, nk), det(nk, ni), det(ni, nj)
                if l1 > 0 and l2 > 0 and l3 > 0:
                    if l1 * oi + l2 * oj + l3 * ok > 0:
                        return False
                elif l1 < 0 and l2 < 0 and l3 < 0:
                    if l1 * oi + l2 * oj + l3 * ok < 0:
                        return False
    return True


# -- the polygon operations used downstream --------------------------------

def polygon_from_halfplanes(hps) -> RatPolygon:
    return RatPolygon.from_halfplanes(hps)


def colon(p: RatPolygon, q: RatPolygon) -> RatPolygon:
    """The colon polygon {u : u + q subset of p}.

    Computed purely on the H-representation: each offset of ``p`` rises by
    the support of ``q`` in that normal direction.  May be empty.
    """
    if p.is_empty or q.is_empty:
        raise ValueError("colon needs non-empty polygons")
    return RatPolygon.from_halfplanes(
        [(n, o - q.support_min(n)) for n, o in p.halfplanes]
    )


def minkowski_sum(p: RatPolygon, q: RatPolygon) -> RatPolygon:
    if p.is_empty or q.is_empty:
        raise ValueError("minkowski_sum needs non-empty polygons")
    return RatPolygon.from_vertices(
        [vadd(a, b) for a in p.vertices for b in q.vertices]
    )


def width(p: RatPolygon, v):
    """max <p, v> - min <p, v>, with wid(empty) = -inf."""
    if p.is_empty:
        return NEG_INF
    return p.support_max(v) - p.support_min(v)


def project_interval(p: RatPolygon, v):
    """The interval [min <p,v>, max <p,v>], or None for the empty polygon."""
    if p.is_empty:
        return None
    return (p.support_min(v), p.support_max(v))


def lattice_points(p: RatPolygon):
    """All integer points of a bounded polygon, lexicographically sorted.

    Scanline over integer x-columns; the y-range of each column comes from
    the halfplanes with exact rational bounds.
    """
    if p.is_empty:
        return []
    xs = [q[0] for q in p.vertices]
    out = []
    for x in range(ceil_frac(min(xs)), floor_frac(max(xs)) + 1):
        lo, hi = None, None
        ok = True
        for n, o in p.halfplanes:
            rest = o - n[0] * x
            if n[1] > 0:
                b = Fraction(rest, n[1])
                lo = b if lo is None or b > lo else lo
            elif n[1] < 0:
                b = Fraction(rest, n[1])
                hi = b if hi is None or b < hi else hi
            elif rest > 0:
                ok = False
                break
        if not ok:
            continue
        ylo = ceil_frac(lo) if lo is not None else None
        yhi = floor_frac(hi) if hi is not None else None
        if ylo is None or yhi is None:
            raise UnboundedRegion("lattice point scan over unbounded column")
        out.extend((x, y) for y in range(ylo, yhi + 1))
    return out


def polygon_area(p: RatPolygon) -> Fraction:
    return p.area()
