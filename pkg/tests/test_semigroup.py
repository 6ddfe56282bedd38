import random
from fractions import Fraction as F

import pytest

from toricfg.cones import cone, dual_cone
from toricfg.fans import ToricDivisor, divisor_from_polytope
from toricfg.gallery import (
    p1p1_fan,
    sevengon_context,
    slanted_quad_context,
    unit_square,
)
from toricfg.geometry import (
    NEG_INF,
    dot,
    lattice_points,
    minkowski_sum,
    width,
)
from toricfg.semigroup import (
    NotAmple,
    cut_construction,
    d_bar,
    d_of_q,
    e_bar,
    make_context,
    newton_okounkov_body,
    q_hat,
    semigroup_slice,
    theta,
    theta_extremal,
    xi_interval,
)

from util import random_ample_divisor, random_direction, random_smooth_fan

CTX = slanted_quad_context()


def test_context_requires_ample():
    fan = p1p1_fan()
    with pytest.raises(NotAmple):
        make_context(ToricDivisor.make(fan, {(1, 0): 1}), (1, 2))


def test_theta_fixtures():
    assert set(theta(CTX, 1, 1).vertices) == {(0, 0), (-1, 0), (0, F(-1, 2))}
    assert set(theta(CTX, 3, 2).vertices) == {(0, 0), (-10, 0), (0, -5)}
    assert theta(CTX, 1, 0) == CTX.p_d
    assert theta(CTX, 1, 10**6).is_empty
    assert not theta(CTX, 1, F(8, 7)).is_empty
    assert theta(CTX, 1, F(8, 7) + F(1, 1000)).is_empty


def test_e_bar_fixtures():
    assert e_bar(CTX, 1, 1) == 2
    assert e_bar(CTX, 3, 2) == 30
    assert e_bar(CTX, 1, 10**6) == 0
    assert {dot(u, CTX.flag.v) for u in lattice_points(theta(CTX, 1, 1))} == {0, 2}


def test_d_bar_fixtures():
    assert d_bar(CTX, 1, 1) == 5
    assert d_bar(CTX, 0, 0) == 0
    assert d_bar(CTX, 3, 2) == 35


def test_xi_interval_fixtures():
    assert xi_interval(CTX, 1, 1) == (-3, 2)
    assert xi_interval(CTX, 1, 0) == (-9, 16)
    # chain of inclusions at (1,1): projections sit inside xi
    lo, hi = xi_interval(CTX, 1, 1)
    values = {dot(u, CTX.flag.v) for u in lattice_points(theta(CTX, 1, 1))}
    t = theta(CTX, 1, 1)
    assert values <= set(range(-3, 3))
    assert lo <= t.support_min(CTX.flag.v) and t.support_max(CTX.flag.v) <= hi


def test_d_of_q_fixtures():
    assert d_of_q(CTX, 0) == 25
    assert d_of_q(CTX, 1) == F(7, 2)
    assert d_of_q(CTX, F(2, 3)) == F(35, 3)
    assert d_of_q(CTX, 10) == NEG_INF


def test_q_hat_fixtures():
    assert q_hat(CTX) == F(8, 7)
    sq_ctx = make_context(divisor_from_polytope(unit_square()), (1, 0))
    assert q_hat(sq_ctx) == 1
    doubled = make_context(
        ToricDivisor.make(CTX.fan, {(1, 2): 16, (0, 1): 6}), (-2, 3)
    )
    assert q_hat(doubled) == 2 * q_hat(CTX)


def test_semigroup_slice_fixtures():
    s1 = semigroup_slice(CTX, 1)
    assert (1, 2) in s1.entries
    assert s1.entries[0] == (0, e_bar(CTX, 1, 0))
    assert (1, 1, 0) in list(s1.triples()) and (1, 1, 1) in list(s1.triples())
    s3 = semigroup_slice(CTX, 3)
    assert (2, 30) in s3.entries
    assert all(k <= 3 * q_hat(CTX) for k, _ in s3.entries)


def test_tail_vanishes_beyond_q_hat():
    qh = q_hat(CTX)
    for l in (1, 2, 3, 5):
        kcut = int(l * qh) + 1
        for k in range(kcut, kcut + 4):
            assert e_bar(CTX, l, k) == 0


def test_cut_construction_fixture():
    cut = cut_construction(CTX, 1, 1)
    assert set(cut.box_max.vertices) == {(-1, 0), (-8, 0), (-4, -2)}
    assert set(cut.box_min.vertices) == {
        (0, F(-1, 2)), (0, -3), (-2, -3), (-3, F(-5, 2)),
    }
    assert cut.v_plus == (-1, 0)
    assert cut.v_minus == (0, F(-1, 2))
    assert cut.p_cut == minkowski_sum(theta(CTX, 1, 1), CTX.flag.nabla)
    # the sum with the full nef polytope is strictly smaller than P_D
    bigger = minkowski_sum(theta(CTX, 1, 1), CTX.flag.nabla_prime)
    assert CTX.p_d.contains_polygon(bigger) and bigger != CTX.p_d


def test_cut_construction_trivial_at_k_zero():
    cut = cut_construction(CTX, 1, 0)
    assert cut.p_cut == CTX.p_d


def test_cut_identity_randomized():
    rng = random.Random(20240814)
    checked = 0
    while checked < 60:
        fan = random_smooth_fan(rng)
        d = random_ample_divisor(rng, fan)
        v = random_direction(rng)
        ctx = make_context(d, v)
        qh = q_hat(ctx)
        l = rng.randint(1, 3)
        k = rng.randint(0, max(0, int(l * qh)))
        if theta(ctx, l, k).is_empty:
            continue
        cut_construction(ctx, l, k)  # internal identity assertion
        checked += 1


def test_theta_extremal_fixture():
    ext = theta_extremal(CTX, 3, 2)
    assert ext.v_plus == (-10, 0)
    assert ext.v_minus == (0, -5)
    assert ext.cone_minus == cone("M", (0, 1), (-2, 1))
    assert ext.cone_plus == cone("M", (1, 0), (2, -1))
    assert dual_cone(ext.cone_minus) == cone("N", (-1, 0), (1, 2))
    assert not ext.degenerate


def test_theta_extremal_consistency_with_projection():
    ext = theta_extremal(CTX, 1, 1)
    t = theta(CTX, 1, 1)
    v = CTX.flag.v
    assert dot(ext.v_minus, v) == t.support_min(v)
    assert dot(ext.v_plus, v) == t.support_max(v)


def test_theta_extremal_degenerate_point():
    ext = theta_extremal(CTX, 1, q=F(8, 7))
    assert ext.degenerate and ext.cone_minus is None


def test_newton_okounkov_body_fixture():
    body = newton_okounkov_body(CTX)
    assert set(body.vertices) == {(0, 0), (0, 25), (F(2, 3), F(35, 3)), (F(8, 7), 0)}
    assert body.breakpoints == ((0, 25), (F(2, 3), F(35, 3)), (F(8, 7), 0))


def test_newton_okounkov_square():
    ctx = make_context(divisor_from_polytope(unit_square()), (1, 0))
    body = newton_okounkov_body(ctx)
    assert d_of_q(ctx, 0) == 1 and q_hat(ctx) == 1
    assert set(body.vertices) == {(0, 0), (0, 1), (1, 1), (1, 0)}
    # sampling oracle: every sampled graph point is in the body
    for i in range(11):
        q = F(i, 10)
        assert body.polygon.contains((q, d_of_q(ctx, q)))


def test_no_body_area_identity():
    from toricfg.gallery import extended_quad_fan

    rng = random.Random(31)
    adjusted = ToricDivisor.make(
        extended_quad_fan(), {(1, 2): 13, (0, 1): 6, (1, 0): 5, (-1, 1): F(11, 2)}
    )
    ctxs = [CTX, sevengon_context(), make_context(adjusted, (-2, 3))]
    tries = 0
    while len(ctxs) < 8 and tries < 100:
        tries += 1
        fan = random_smooth_fan(rng)
        ctxs.append(make_context(random_ample_divisor(rng, fan), random_direction(rng)))
    for ctx in ctxs:
        body = newton_okounkov_body(ctx)
        assert body.polygon.area() == ctx.p_d.area()


def test_no_body_sampling_oracle_randomized():
    rng = random.Random(37)
    for _ in range(6):
        fan = random_smooth_fan(rng)
        ctx = make_context(random_ample_divisor(rng, fan), random_direction(rng))
        body = newton_okounkov_body(ctx)
        qh = q_hat(ctx)
        for i in range(13):
            q = qh * F(i, 12)
            d = d_of_q(ctx, q)
            assert body.polygon.contains((q, d))
            # and nothing above the graph belongs to the body
            assert not body.polygon.contains((q, d + 1))


def test_sandwich_inequality():
    # e_bar - 1 <= d <= d_bar on fixtures and random data
    for (l, k) in [(1, 1), (3, 2), (2, 1), (4, 3)]:
        d = width(theta(CTX, l, k), CTX.flag.v)
        assert e_bar(CTX, l, k) - 1 <= d <= d_bar(CTX, l, k)


def test_homogeneity_and_concavity():
    for lam in (2, 3, 4):
        assert d_of_q(CTX, F(1, 2)) * lam == width(
            theta(CTX, lam, lam * F(1, 2)), CTX.flag.v
        )
    qs = [F(0), F(1, 3), F(1, 2), F(2, 3), F(1), F(8, 7)]
    for a, b, c in zip(qs, qs[1:], qs[2:]):
        lam = (c - b) / (c - a)
        mid = d_of_q(CTX, b)
        assert mid >= lam * d_of_q(CTX, a) + (1 - lam) * d_of_q(CTX, c)
    # the roof is also nonincreasing: bigger segments are harder to fit
    assert all(d_of_q(CTX, a) >= d_of_q(CTX, b) for a, b in zip(qs, qs[1:]))


def test_e_bar_asymptotics_improve():
    q = F(1, 2)
    d = d_of_q(CTX, q)

    def best(cap):
        vals = [
            F(e_bar(CTX, lam, int(lam * q)) - 1, lam)
            for lam in range(1, cap + 1)
            if (lam * q).denominator == 1
        ]
        return max(vals)

    b10, b40 = best(10), best(40)
    assert b10 <= b40 <= d
    assert d - b40 < F(1, 2)


def test_theta_extremal_edge_faces_are_halfplanes():
    sq_ctx = make_context(divisor_from_polytope(unit_square()), (1, 0))
    ext = theta_extremal(sq_ctx, 1, 0)
    assert ext.cone_minus.kind == "halfplane"
    assert ext.cone_plus.kind == "halfplane"
    # at the top slope the square's colon polytope is a segment transverse
    # to the level lines, whose endpoint tangent cones are rays
    ext_top = theta_extremal(sq_ctx, 1, q=1)
    assert ext_top.cone_minus.kind == "ray"
    assert ext_top.cone_plus.kind == "ray"
