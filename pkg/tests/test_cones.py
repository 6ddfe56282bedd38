import random

import pytest

from toricfg.cones import (
    NotInInterior,
    NotPointed,
    cone,
    cone_from_normals,
    dual_cone,
    exists_pairing_one,
    halfplane,
    hilbert_basis,
    is_strongly_decomposable,
    ray,
)
from toricfg.geometry import dot
from toricfg.oracles import brute_decompose

from util import interior_point, random_cone

FIRST_QUADRANT = cone("N", (1, 0), (0, 1))


def test_cone_normalization():
    c = cone("N", (0, 1), (1, 0))  # clockwise input gets flipped
    assert c.generators == ((1, 0), (0, 1))
    assert cone("M", (2, 4), (3, 0)).generators == ((1, 0), (1, 2))
    assert ray("N", (6, 10)).generators == ((3, 5),)


def test_halfplane_side_normalization():
    h1 = halfplane("N", (1, 0), (0, 1))
    h2 = halfplane("N", (-1, 0), (5, 3))
    assert h1 == h2
    assert h1.contains((0, 1)) and h1.contains((1, 0)) and h1.contains((-1, 0))
    assert not h1.contains((0, -1))
    assert h1.strictly_contains((0, 1)) and not h1.strictly_contains((1, 0))


def test_dual_cone_fixtures():
    assert dual_cone(cone("N", (1, 0), (0, 1))) == cone("M", (1, 0), (0, 1))
    assert dual_cone(cone("M", (0, 1), (-2, 1))) == cone("N", (-1, 0), (1, 2))
    h = dual_cone(ray("N", (1, 0)))
    assert h.kind == "halfplane" and h.contains((0, 5)) and h.contains((0, -5))
    assert h.contains((3, 1)) and not h.contains((-1, 0))
    assert dual_cone(h) == ray("N", (1, 0))


def test_dual_is_involution():
    rng = random.Random(4)
    for _ in range(60):
        c = random_cone(rng)
        assert dual_cone(dual_cone(c)) == c


def test_hilbert_basis_fixtures():
    assert set(hilbert_basis(FIRST_QUADRANT)) == {(1, 0), (0, 1)}
    assert set(hilbert_basis(cone("M", (0, 1), (-2, 1)))) == {(0, 1), (-1, 1), (-2, 1)}
    assert hilbert_basis(ray("M", (3, 5))) == ((3, 5),)
    with pytest.raises(NotPointed):
        hilbert_basis(halfplane("N", (1, 0), (0, 1)))


def test_hilbert_basis_generates_and_is_minimal():
    rng = random.Random(11)
    for _ in range(40):
        c = random_cone(rng, bound=5)
        basis = hilbert_basis(c)
        g1, g2 = c.generators
        # sample of cone lattice points: nonneg integer combos of generators
        # plus the basis elements themselves
        sample = set(basis)
        for i in range(3):
            for j in range(3):
                sample.add((i * g1[0] + j * g2[0], i * g1[1] + j * g2[1]))
        sample.discard((0, 0))
        for p in sample:
            assert _generated_by(p, basis, c), (p, basis)
        for drop in basis:
            rest = tuple(b for b in basis if b != drop)
            assert not _generated_by(drop, rest, c), (drop, basis)


def _generated_by(p, gens, c, depth=0):
    if p == (0, 0):
        return True
    if depth > 40 or not c.contains(p):
        return False
    return any(
        _generated_by((p[0] - g[0], p[1] - g[1]), gens, c, depth + 1)
        for g in gens
        if c.contains((p[0] - g[0], p[1] - g[1]))
    )


def test_strong_decomposability_fixtures():
    dec, wit = is_strongly_decomposable((1, 1), FIRST_QUADRANT)
    assert not dec and wit is None
    dec, wit = is_strongly_decomposable((2, 2), FIRST_QUADRANT)
    assert dec and wit == ((1, 1), (1, 1))
    dec, wit = is_strongly_decomposable((-2, 3), cone("N", (-1, 0), (1, 2)))
    assert dec and wit == ((-2, 1), (0, 2))
    with pytest.raises(NotInInterior):
        is_strongly_decomposable((1, 0), FIRST_QUADRANT)


def test_halfplane_decomposability_is_boundary_distance():
    h = halfplane("N", (1, 0), (0, 1))
    dec1, _ = is_strongly_decomposable((5, 1), h)
    assert not dec1  # lattice distance one from the boundary line
    dec2, wit = is_strongly_decomposable((5, 2), h)
    assert dec2
    assert wit[0][1] >= 1 and wit[1][1] >= 1
    assert (wit[0][0] + wit[1][0], wit[0][1] + wit[1][1]) == (5, 2)


def test_hilbert_test_matches_brute_force():
    rng = random.Random(20240813)
    for _ in range(200):
        c = random_cone(rng, bound=5)
        w = interior_point(rng, c, spread=3)
        dec, wit = is_strongly_decomposable(w, c)
        brute = brute_decompose(w, c)
        assert dec == (brute is not None)
        if dec:
            assert wit == brute


def test_decomposability_dilation_monotone():
    rng = random.Random(17)
    for _ in range(80):
        c = random_cone(rng, bound=4)
        w = interior_point(rng, c, spread=3)
        dec, _ = is_strongly_decomposable(w, c)
        if dec:
            for lam in (2, 3):
                bigger, _ = is_strongly_decomposable((lam * w[0], lam * w[1]), c)
                assert bigger


def test_exists_pairing_one_fixtures():
    assert exists_pairing_one(cone("M", (1, 0), (0, 1)), (0, 1))
    assert not exists_pairing_one(cone("M", (0, 1), (-2, 1)), (-2, 3))
    # derived by the affine-line algorithm and confirmed by brute force
    assert not exists_pairing_one(cone("M", (0, 1), (-1, 1)), (-2, 3))
    assert _brute_pairing_one(cone("M", (0, 1), (-1, 1)), (-2, 3)) is False
    assert exists_pairing_one(ray("M", (3, 5)), (2, -1))
    assert not exists_pairing_one(ray("M", (3, 5)), (1, 1))


def _brute_pairing_one(c, v, box=40):
    for x in range(-box, box + 1):
        for y in range(-box, box + 1):
            if c.contains((x, y)) and dot((x, y), v) == 1:
                return True
    return False


def test_exists_pairing_one_against_brute_force():
    rng = random.Random(23)
    for _ in range(80):
        c = random_cone(rng, bound=4)
        v = None
        from util import random_direction

        v = random_direction(rng, bound=3)
        assert exists_pairing_one(c, v) == _brute_pairing_one(c, v, box=25)


def test_pairing_bridge_to_decomposability():
    # a lattice point of the dual pairing to one exists exactly when the
    # direction is not strongly decomposable
    rng = random.Random(29)
    for _ in range(120):
        c = random_cone(rng, bound=5)
        v = interior_point(rng, c, spread=3)
        from math import gcd

        g = gcd(v[0], v[1])
        v = (v[0] // g, v[1] // g)
        dec, _ = is_strongly_decomposable(v, c)
        assert exists_pairing_one(dual_cone(c), v) == (not dec)


def test_cone_from_normals_degenerations():
    c = cone_from_normals("N", (1, 0), (0, 1))
    assert c.kind == "cone"
    h = cone_from_normals("N", (0, 1), (0, -1), side_marker=(-1, 0))
    assert h.kind == "halfplane" and h.strictly_contains((-1, 0))
    r = cone_from_normals("N", (2, 0), (1, 0))
    assert r.kind == "ray"
