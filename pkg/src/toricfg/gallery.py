"""Worked input data used across tests, scripts and documentation."""

from __future__ import annotations

from .fans import Fan2, ToricDivisor, divisor_from_polytope
from .geometry import RatPolygon, rot90
from .semigroup import FlagContext, make_context


def slanted_quad_fan() -> Fan2:
    return Fan2.from_rays([(-1, 0), (0, -1), (1, 2), (0, 1)])


def slanted_quad_divisor() -> ToricDivisor:
    return ToricDivisor.make(slanted_quad_fan(), {(1, 2): 8, (0, 1): 3})


def slanted_quad_context() -> FlagContext:
    """Ample quadrilateral conv((0,0),(-8,0),(-2,-3),(0,-3)) with the
    direction (-2,3); the semigroup is not finitely generated."""
    return make_context(slanted_quad_divisor(), (-2, 3))


def sevengon() -> RatPolygon:
    """A 7-gon whose blow-up surface carries infinitely many negative
    curves; with direction (0,1) the semigroup is finitely generated."""
    return RatPolygon.from_vertices(
        [(4, 1), (7, 2), (9, 3), (6, 5), (1, 8), (1, 7), (2, 4)]
    )


def sevengon_context() -> FlagContext:
    return make_context(divisor_from_polytope(sevengon()), (0, 1))


def extended_quad_fan() -> Fan2:
    """The slanted-quad fan with the two extra rays (1,0) and (-1,1); the
    stage for the bad-divisor construction at direction (-2,3)."""
    return Fan2.from_rays([(-1, 0), (0, -1), (1, 2), (0, 1), (1, 0), (-1, 1)])


SYM16GON_RAY_WEIGHTS = (
    ((1, 0), 1), ((2, 1), 1), ((1, 1), 1), ((1, 2), 3),
    ((0, 1), 1), ((-1, 2), 1), ((-1, 1), 1), ((-2, 1), 3),
)


def sym16gon() -> RatPolygon:
    """Centrally symmetric lattice 16-gon with a smooth 16-ray normal fan
    for which no direction yields a finitely generated semigroup.

    Built as the symmetric zonotope sum of the segments
    [-k*rot90(r), k*rot90(r)] over one ray r per antipodal pair, with the
    weights chosen so that every maximal cross-section either crosses an
    edge whose normal pairs to at least 2 with the direction, or ends at
    a vertex whose side cones admit a strong decomposition.
    """
    pts = [(0, 0)]
    for r, k in SYM16GON_RAY_WEIGHTS:
        e = rot90(r)
        pts = [
            (x + s * k * e[0], y + s * k * e[1]) for (x, y) in pts for s in (1, -1)
        ]
    return RatPolygon.from_vertices(pts)


SYM16GON_VERTICES = (
    (-15, -3), (-13, -7), (-11, -9), (1, -15), (3, -15), (7, -13), (9, -11),
    (15, 1), (15, 3), (13, 7), (11, 9), (-1, 15), (-3, 15), (-7, 13),
    (-9, 11), (-15, -1),
)


def unit_square() -> RatPolygon:
    return RatPolygon.from_vertices([(0, 0), (1, 0), (1, 1), (0, 1)])


def p1p1_fan() -> Fan2:
    return Fan2.from_rays([(1, 0), (0, 1), (-1, 0), (0, -1)])


def p2_fan() -> Fan2:
    return Fan2.from_rays([(1, 0), (0, 1), (-1, -1)])
