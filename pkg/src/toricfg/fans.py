"""Complete fans in the rank-2 one-parameter-subgroup lattice, toric
divisors with their polytopes, ampleness, and the flag data attached to a
primitive direction (orthogonal character, Newton segment, torus-invariant
curve replacement and its nef polytope)."""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .geometry import (
    RatPolygon,
    DegeneratePolygon,
    UnboundedRegion,
    det,
    dot,
    is_primitive,
    neg,
    primitivize,
    rot90,
    vsub,
)


class NonPrimitiveDirection(ValueError):
    """A flag direction must be a primitive lattice vector."""


class UnboundedPolytope(ValueError):
    """The divisor is not nef, so its polytope is unbounded."""


class InvalidFan(ValueError):
    """Ray data does not describe a complete fan."""


def _angle_class(r):
    # 0 for angles in [0, pi), 1 for [pi, 2pi); within a class the exact
    # order is by cross product.
    return 0 if (r[1] > 0 or (r[1] == 0 and r[0] > 0)) else 1


def _angular_cmp(a, b):
    ca, cb = _angle_class(a), _angle_class(b)
    if ca != cb:
        return ca - cb
    d = det(a, b)
    return 0 if d == 0 else (-1 if d > 0 else 1)


@dataclass(frozen=True)
class Fan2:
    """Complete fan given by its cyclically ordered primitive rays."""

    rays: tuple

    @staticmethod
    def from_rays(rays) -> "Fan2":
        rs = [(int(r[0]), int(r[1])) for r in rays]
        if len(rs) < 3:
            raise InvalidFan("a complete fan needs at least three rays")
        for r in rs:
            if r == (0, 0) or not is_primitive(r):
                raise InvalidFan(f"ray {r} is not primitive")
        if len(set(rs)) != len(rs):
            raise InvalidFan("duplicate rays")
        rs.sort(key=functools.cmp_to_key(_angular_cmp))
        for i, r in enumerate(rs):
            s = rs[(i + 1) % len(rs)]
            if det(r, s) <= 0:
                raise InvalidFan(
                    f"rays {r} and {s} span an angle of at least pi; fan not complete"
                )
        return Fan2(tuple(rs))

    @property
    def is_smooth(self) -> bool:
        rs = self.rays
        return all(det(rs[i], rs[(i + 1) % len(rs)]) == 1 for i in range(len(rs)))

    def index_of(self, ray) -> int:
        return self.rays.index((int(ray[0]), int(ray[1])))


@dataclass(frozen=True)
class ToricDivisor:
    """D = sum of a_rho * D_rho; coefficients aligned with fan.rays."""

    fan: Fan2
    coeffs: tuple

    @staticmethod
    def make(fan: Fan2, coeffs) -> "ToricDivisor":
        if isinstance(coeffs, dict):
            vals_in = coeffs.values()
        else:
            vals_in = coeffs
        if any(isinstance(a, float) for a in vals_in):
            raise TypeError("floating point is banned here; use int or Fraction")
        if isinstance(coeffs, dict):
            table = {(int(r[0]), int(r[1])): Fraction(a) for r, a in coeffs.items()}
            vals = tuple(table.get(r, Fraction(0)) for r in fan.rays)
            unknown = set(table) - set(fan.rays)
            if unknown:
                raise ValueError(f"coefficients given for non-rays {sorted(unknown)}")
        else:
            if len(coeffs) != len(fan.rays):
                raise ValueError("coefficient list does not match ray count")
            vals = tuple(Fraction(a) for a in coeffs)
        return ToricDivisor(fan, vals)

    def coeff(self, ray) -> Fraction:
        return self.coeffs[self.fan.index_of(ray)]

    def __add__(self, other: "ToricDivisor") -> "ToricDivisor":
        if self.fan != other.fan:
            raise ValueError("divisors live on different fans")
        return ToricDivisor(
            self.fan, tuple(a + b for a, b in zip(self.coeffs, other.coeffs))
        )


def divisor_polytope(d: ToricDivisor) -> RatPolygon:
    """P_D = {u : <u, rho> >= -a_rho for all rays}."""
    try:
        return RatPolygon.from_halfplanes(
            [(r, -a) for r, a in zip(d.fan.rays, d.coeffs)]
        )
    except UnboundedRegion as exc:
        raise UnboundedPolytope("divisor is not nef") from exc


def is_ample(d: ToricDivisor) -> bool:
    """True iff every ray of the fan supports an edge of P_D of positive
    length, i.e. the support function is strictly convex at every ray."""
    try:
        p = divisor_polytope(d)
    except UnboundedPolytope:
        return False
    if p.dim < 2:
        return False
    edge_offsets = dict(p.halfplanes)
    for r, a in zip(d.fan.rays, d.coeffs):
        if edge_offsets.get(r) != -a:
            return False
    return True


def normal_fan(p: RatPolygon) -> Fan2:
    """Inner normals of the edges, cyclically ordered and primitive."""
    if p.dim < 2:
        raise DegeneratePolygon("normal fan needs a two-dimensional polygon")
    return Fan2.from_rays([n for n, _ in p.halfplanes])


def divisor_from_polytope(p: RatPolygon) -> ToricDivisor:
    """The ample divisor on normal_fan(p) whose polytope is p."""
    fan = normal_fan(p)
    offsets = dict(p.halfplanes)
    return ToricDivisor.make(fan, {r: -offsets[r] for r in fan.rays})


@dataclass(frozen=True)
class FlagData:
    """Combinatorics of the flag given by a one-parameter subgroup.

    v is the primitive direction in N; m spans its orthogonal in M; nabla
    is the Newton segment conv(0, m) of the binomial cutting out the flag
    curve in the torus; cprime_coeffs are the coefficients of the
    torus-invariant replacement of that curve, and nabla_prime its nef
    polytope (the smallest polytope containing nabla whose normal fan is
    refined by the ambient fan).
    """

    v: tuple
    m: tuple
    nabla: RatPolygon
    cprime_coeffs: tuple
    nabla_prime: RatPolygon


def flag_data(fan: Fan2, v) -> FlagData:
    v = (int(v[0]), int(v[1]))
    if v == (0, 0) or not is_primitive(v):
        raise NonPrimitiveDirection(f"direction {v} is not primitive")
    m = rot90(v)
    nabla = RatPolygon.from_vertices([(0, 0), m])
    cprime = tuple(-min(0, dot(m, r)) for r in fan.rays)
    nabla_prime = RatPolygon.from_halfplanes(
        [(r, min(0, dot(m, r))) for r in fan.rays]
    )
    return FlagData(v, m, nabla, cprime, nabla_prime)


def cprime_divisor(fan: Fan2, flag: FlagData) -> ToricDivisor:
    return ToricDivisor(fan, tuple(Fraction(c) for c in flag.cprime_coeffs))


def _extremal_face(p: RatPolygon, v):
    """Vertices of p where <., v> is maximal."""
    top = p.support_max(v)
    return [q for q in p.vertices if dot(q, v) == top]


def glued_nef_polytope(p_d: RatPolygon, flag: FlagData) -> RatPolygon:
    """Rebuild nabla_prime by the gluing construction: translate the
    Newton segment into the vertex cone at each v-extremal vertex of P_D
    until it hits both rays, then glue the two resulting triangles along
    the segment.  Must agree with flag.nabla_prime."""
    if p_d.dim != 2:
        raise DegeneratePolygon("gluing needs a two-dimensional polytope")
    m = flag.m
    points = [(Fraction(0), Fraction(0)), (Fraction(m[0]), Fraction(m[1]))]
    for direction in (flag.v, neg(flag.v)):
        face = _extremal_face(p_d, direction)
        if len(face) != 1:
            continue  # extremal edge: this side degenerates onto nabla
        apex = face[0]
        idx = p_d.vertices.index(apex)
        nverts = len(p_d.vertices)
        d1 = primitivize(vsub(p_d.vertices[(idx - 1) % nverts], apex))
        d2 = primitivize(vsub(p_d.vertices[(idx + 1) % nverts], apex))
        dd = det(d1, d2)
        # t*d2 - s*d1 = m  (base corner on the d1-ray goes to the origin)
        s = Fraction(-det(m, d2), dd)
        t = Fraction(-det(m, d1), dd)
        if s >= 0 and t >= 0:
            points.append((-s * d1[0], -s * d1[1]))
            continue
        # t*d2 - s*d1 = -m  (base corner on the d2-ray goes to the origin)
        s, t = -s, -t
        if s >= 0 and t >= 0:
            points.append((m[0] - s * d1[0], m[1] - s * d1[1]))
        else:
            raise ValueError("Newton segment does not fit into the vertex cone")
    return RatPolygon.from_vertices(points)
