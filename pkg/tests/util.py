"""Shared deterministic generators and naive reference helpers."""

from __future__ import annotations

import random
from fractions import Fraction

from toricfg.fans import Fan2, ToricDivisor
from toricfg.geometry import (
    RatPolygon,
    ceil_frac,
    det,
    floor_frac,
)


def random_smooth_fan(rng: random.Random, max_subdivisions: int = 4) -> Fan2:
    """Stellar subdivisions of a smooth base fan stay smooth and complete."""
    base = rng.choice(
        [
            [(1, 0), (0, 1), (-1, 0), (0, -1)],
            [(1, 0), (0, 1), (-1, -1)],
            [(1, 0), (0, 1), (-1, 1), (0, -1)],
        ]
    )
    rays = list(base)
    for _ in range(rng.randrange(max_subdivisions + 1)):
        i = rng.randrange(len(rays))
        j = (i + 1) % len(rays)
        new = (rays[i][0] + rays[j][0], rays[i][1] + rays[j][1])
        rays.append(new)
        rays = Fan2.from_rays(rays).rays
        rays = list(rays)
    return Fan2.from_rays(rays)


def random_ample_divisor(rng: random.Random, fan: Fan2) -> ToricDivisor:
    """Zonotope support offsets with random positive weights are strictly
    convex at every ray, hence ample."""
    weights = [rng.randint(1, 3) for _ in fan.rays]
    coeffs = [
        sum(w * max(0, det(r, t)) for w, t in zip(weights, fan.rays))
        for r in fan.rays
    ]
    return ToricDivisor.make(fan, coeffs)


def random_direction(rng: random.Random, bound: int = 4):
    from math import gcd

    while True:
        a, b = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if (a, b) != (0, 0) and gcd(a, b) == 1:
            return (a, b)


def random_cone(rng: random.Random, bound: int = 6):
    from math import gcd

    from toricfg.cones import cone

    while True:
        g1 = (rng.randint(-bound, bound), rng.randint(-bound, bound))
        g2 = (rng.randint(-bound, bound), rng.randint(-bound, bound))
        if g1 == (0, 0) or g2 == (0, 0) or det(g1, g2) == 0:
            continue
        if gcd(g1[0], g1[1]) != 1 or gcd(g2[0], g2[1]) != 1:
            continue
        return cone("N", g1, g2)


def interior_point(rng: random.Random, c, spread: int = 4):
    g1, g2 = c.generators
    i, j = rng.randint(1, spread), rng.randint(1, spread)
    return (i * g1[0] + j * g2[0], i * g1[1] + j * g2[1])


def naive_lattice_points(p: RatPolygon):
    """Bounding box plus all-halfplane membership; the independent oracle
    for the scanline enumeration."""
    if p.is_empty:
        return []
    xs = [q[0] for q in p.vertices]
    ys = [q[1] for q in p.vertices]
    out = []
    for x in range(ceil_frac(Fraction(min(xs))), floor_frac(Fraction(max(xs))) + 1):
        for y in range(ceil_frac(Fraction(min(ys))), floor_frac(Fraction(max(ys))) + 1):
            if all(x * n[0] + y * n[1] >= o for n, o in p.halfplanes):
                out.append((x, y))
    return out


def random_polygon(rng: random.Random, bound: int = 6, points: int = 6) -> RatPolygon:
    pts = [
        (rng.randint(-bound, bound), rng.randint(-bound, bound))
        for _ in range(points)
    ]
    return RatPolygon.from_vertices(pts)


def random_full_polygon(rng: random.Random, bound: int = 6) -> RatPolygon:
    while True:
        p = random_polygon(rng, bound)
        if p.dim == 2:
            return p
