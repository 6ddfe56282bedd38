"""The valuation-semigroup layer: colon polytopes of an ample divisor
against the flag's nef segment polytope, section counts by projection,
semigroup slices, the cut construction, and the Newton-Okounkov body in
(q, t)-coordinates.

All (l, k) arguments may be rational; integral callers are unaffected and
the normalized polytope at slope q is just the (1, q) case.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cones import Cone2, cone, halfplane
from .fans import FlagData, Fan2, ToricDivisor, divisor_polytope, flag_data, is_ample
from .geometry import (
    RatPolygon,
    det,
    dot,
    floor_frac,
    lattice_points,
    minkowski_sum,
    neg,
    primitivize,
    project_interval,
    vsub,
    width,
)


class NotAmple(ValueError):
    """The semigroup layer is defined for ample divisors."""


class DegenerateTheta(ValueError):
    """The colon polytope is empty where a construction needs a point."""


@dataclass(frozen=True)
class FlagContext:
    """An ample divisor together with the flag data of a direction and the
    cached widths entering degree formulas."""

    divisor: ToricDivisor
    flag: FlagData
    p_d: RatPolygon
    width_p: Fraction
    width_n: Fraction

    @property
    def fan(self) -> Fan2:
        return self.divisor.fan


def make_context(divisor: ToricDivisor, v, require_ample: bool = True) -> FlagContext:
    if require_ample and not is_ample(divisor):
        raise NotAmple("divisor is not ample")
    fd = flag_data(divisor.fan, v)
    p_d = divisor_polytope(divisor)
    return FlagContext(
        divisor=divisor,
        flag=fd,
        p_d=p_d,
        width_p=width(p_d, fd.v),
        width_n=width(fd.nabla_prime, fd.v),
    )


def theta(ctx: FlagContext, l, k) -> RatPolygon:
    """The colon polytope (l*P_D : k*nabla'), directly from the fan's
    halfplane data; rational l, k are allowed."""
    l, k = Fraction(l), Fraction(k)
    if l < 0 or k < 0 or (l == 0 and k == 0):
        raise ValueError("need l, k >= 0 and not both zero")
    return RatPolygon.from_halfplanes(
        [
            (r, -l * a + k * c)
            for r, a, c in zip(ctx.fan.rays, ctx.divisor.coeffs, ctx.flag.cprime_coeffs)
        ]
    )


def e_bar(ctx: FlagContext, l: int, k: int) -> int:
    """Number of distinct pairings <u, v> over lattice points of the colon
    polytope; the dimension of the restricted section space."""
    t = theta(ctx, l, k)
    if t.is_empty:
        return 0
    return len({dot(u, ctx.flag.v) for u in lattice_points(t)})


def d_bar(ctx: FlagContext, l, k) -> Fraction:
    """l * wid_v(P_D) - k * wid_v(nabla'): the degree of the pulled-back
    line bundle on the normalized flag curve."""
    return Fraction(l) * ctx.width_p - Fraction(k) * ctx.width_n


def xi_interval(ctx: FlagContext, l, k):
    """One-dimensional colon of the projected intervals; contains the
    projection of the colon polytope, possibly strictly."""
    a, b = project_interval(ctx.p_d, ctx.flag.v)
    c, d = project_interval(ctx.flag.nabla_prime, ctx.flag.v)
    lo = Fraction(l) * a - Fraction(k) * c
    hi = Fraction(l) * b - Fraction(k) * d
    if lo > hi:
        return None
    return (lo, hi)


def d_of_q(ctx: FlagContext, q):
    """Width of the slope-q colon polytope; -inf when it is empty."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("slope must be nonnegative")
    if q == 0:
        return ctx.width_p
    return width(theta(ctx, 1, q), ctx.flag.v)


def q_hat(ctx: FlagContext) -> Fraction:
    """Largest slope with a non-empty colon polytope, from the parametric
    feasibility of the halfplane system (antiparallel pairs and positively
    spanning triples each bound q linearly)."""
    rays = ctx.fan.rays
    offs = [(-a, c) for a, c in zip(ctx.divisor.coeffs, ctx.flag.cprime_coeffs)]

    def offset(i, q):
        base, slope = offs[i]
        return base + q * slope

    bounds = []
    n = len(rays)
    for i in range(n):
        for j in range(i + 1, n):
            if rays[j] == neg(rays[i]):
                # feasible iff offset_i(q) <= -offset_j(q)
                base = offs[i][0] + offs[j][0]
                slope = offs[i][1] + offs[j][1]
                _collect_bound(bounds, base, slope)
            for k in range(j + 1, n):
                l1 = det(rays[j], rays[k])
                l2 = det(rays[k], rays[i])
                l3 = det(rays[i], rays[j])
                if not (l1 > 0 and l2 > 0 and l3 > 0) and not (
                    l1 < 0 and l2 < 0 and l3 < 0
                ):
                    continue
                if l1 < 0:
                    l1, l2, l3 = -l1, -l2, -l3
                base = l1 * offs[i][0] + l2 * offs[j][0] + l3 * offs[k][0]
                slope = l1 * offs[i][1] + l2 * offs[j][1] + l3 * offs[k][1]
                _collect_bound(bounds, base, slope)
    if not bounds:
        raise ValueError("slope is unbounded; divisor data cannot be ample")
    return min(bounds)


def _collect_bound(bounds, base, slope):
    # constraint: base + q * slope <= 0
    if slope > 0:
        bounds.append(Fraction(-base, slope))
    elif slope == 0 and base > 0:
        bounds.append(Fraction(0))  # infeasible already at q = 0; not ample


@dataclass(frozen=True)
class SemigroupSlice:
    """All semigroup data at a fixed level l: the pairs (k, e_bar(l, k))
    with at least one section, encoding the triples (l, k, delta) for
    0 <= delta <= e_bar - 1."""

    level: int
    entries: tuple

    def triples(self):
        for k, e in self.entries:
            for delta in range(e):
                yield (self.level, k, delta)


def semigroup_slice(ctx: FlagContext, l: int) -> SemigroupSlice:
    if l < 1:
        raise ValueError("level must be at least 1")
    kmax = floor_frac(Fraction(l) * q_hat(ctx))
    entries = []
    for k in range(kmax + 1):
        e = e_bar(ctx, l, k)
        if e > 0:
            entries.append((k, e))
    return SemigroupSlice(l, tuple(entries))


@dataclass(frozen=True)
class CutPieces:
    box_max: RatPolygon
    p_cut: RatPolygon
    box_min: RatPolygon
    v_plus: tuple
    v_minus: tuple


def cut_construction(ctx: FlagContext, l, k) -> CutPieces:
    """Cut l*P_D along the two translated Newton segments at the extreme
    pairing levels of the colon polytope.  The middle piece always equals
    the Minkowski sum of the colon polytope with the scaled Newton
    segment; this identity is asserted."""
    l, k = Fraction(l), Fraction(k)
    t = theta(ctx, l, k)
    if t.is_empty:
        raise DegenerateTheta("cut needs a non-empty colon polytope")
    v = ctx.flag.v
    big = ctx.p_d.dilate(l)
    lo, hi = t.support_min(v), t.support_max(v)
    band = RatPolygon.from_halfplanes(
        list(big.halfplanes) + [(v, lo), (neg(v), -hi)]
    )
    box_max = RatPolygon.from_halfplanes(list(big.halfplanes) + [(v, hi)])
    box_min = RatPolygon.from_halfplanes(list(big.halfplanes) + [(neg(v), -lo)])
    v_plus = min(p for p in t.vertices if dot(p, v) == hi)
    v_minus = min(p for p in t.vertices if dot(p, v) == lo)
    summed = minkowski_sum(t, ctx.flag.nabla.dilate(k)) if k > 0 else t
    assert summed == band, "cut identity failed: theta + k*nabla != middle piece"
    return CutPieces(box_max, band, box_min, v_plus, v_minus)


@dataclass(frozen=True)
class ThetaExtremal:
    """v-extremal faces of a colon polytope with their tangent cones.

    Tangent cones are strongly convex at a vertex and a halfplane along an
    extremal edge; for a zero-width polytope (a point, or a segment on one
    pairing level) there is no usable tangent data and ``degenerate``
    is set instead.
    """

    v_minus: tuple
    v_plus: tuple
    cone_minus: Cone2 | None
    cone_plus: Cone2 | None
    degenerate: bool


def theta_extremal(ctx: FlagContext, l, k=None, q=None) -> ThetaExtremal:
    if (k is None) == (q is None):
        raise ValueError("give exactly one of k or q")
    if k is None:
        k = Fraction(l) * Fraction(q)
    t = theta(ctx, l, k)
    if t.is_empty:
        raise DegenerateTheta("no extremal data for an empty colon polytope")
    v = ctx.flag.v
    lo, hi = t.support_min(v), t.support_max(v)
    if lo == hi:
        vm = min(t.vertices)
        return ThetaExtremal(vm, max(t.vertices), None, None, True)
    v_minus = min(p for p in t.vertices if dot(p, v) == lo)
    v_plus = min(p for p in t.vertices if dot(p, v) == hi)
    return ThetaExtremal(
        v_minus, v_plus, _tangent(t, v, lo), _tangent(t, v, hi), False
    )


def _tangent(t: RatPolygon, v, level) -> Cone2:
    face = [p for p in t.vertices if dot(p, v) == level]
    if len(face) > 1:
        d = primitivize(vsub(face[1], face[0]))
        other = next(p for p in t.vertices if dot(p, v) != level)
        return halfplane("M", d, vsub(other, face[0]))
    r = face[0]
    idx = t.vertices.index(r)
    nv = len(t.vertices)
    d1 = primitivize(vsub(t.vertices[(idx - 1) % nv], r))
    d2 = primitivize(vsub(t.vertices[(idx + 1) % nv], r))
    return cone("M", d1, d2)


@dataclass(frozen=True)
class NOBody:
    """Newton-Okounkov polygon in (q, t)-coordinates: q is the slope k/l,
    t the normalized vanishing order at the flag point.  The region is
    exactly {(q, t) : 0 <= t <= d(q)} and breakpoints lists the vertices
    along the graph of d."""

    polygon: RatPolygon
    breakpoints: tuple

    @property
    def vertices(self):
        return self.polygon.vertices


def newton_okounkov_body(ctx: FlagContext) -> NOBody:
    """Exact body under the concave roof d(q) on [0, q_hat].

    The roof is piecewise linear with kinks only where the active
    constraint combinatorics of the parametric colon polytope changes, so
    it suffices to evaluate d at every slope where three constraints meet
    (plus the endpoints) and take the convex hull.
    """
    qh = q_hat(ctx)
    rays = ctx.fan.rays
    offs = [
        (-a, Fraction(c))
        for a, c in zip(ctx.divisor.coeffs, ctx.flag.cprime_coeffs)
    ]
    candidates = {Fraction(0), qh}
    n = len(rays)
    for i in range(n):
        ni = rays[i]
        for j in range(i + 1, n):
            nj = rays[j]
            d = det(ni, nj)
            if d == 0:
                continue
            u0 = _cramer(ni, nj, offs[i][0], offs[j][0], d)
            u1 = _cramer(ni, nj, offs[i][1], offs[j][1], d)
            for k in range(n):
                if k in (i, j):
                    continue
                alpha = dot(u0, rays[k]) - offs[k][0]
                beta = dot(u1, rays[k]) - offs[k][1]
                if beta == 0:
                    continue
                q0 = -alpha / beta
                if 0 <= q0 <= qh:
                    candidates.add(q0)
    graph = [(q, d_of_q(ctx, q)) for q in sorted(candidates)]
    poly = RatPolygon.from_vertices([(Fraction(0), Fraction(0)), (qh, Fraction(0))] + graph)
    breakpoints = tuple(
        sorted(p for p in poly.vertices if p[1] == d_of_q(ctx, p[0]))
    )
    return NOBody(poly, breakpoints)


def _cramer(ni, nj, oi, oj, d):
    return ((oi * nj[1] - oj * ni[1]) / d, (ni[0] * oj - nj[0] * oi) / d)
