"""Command-line front end.

Input is a single JSON document giving either a fan (rays) plus divisor
coefficients, or a polytope (vertices, the fan then being its normal
fan), a direction, and optional (l, k) pairs, scan bound and lambda cap.
Rationals are written as integers or [numerator, denominator] pairs.

Subcommands: analyze, semigroup, nobody, fg, fg-all, scan,
construct-bad, plot.  Validation failures exit with code 2 and a
machine-readable reason on stderr.  Output is a pure function of the
input file and flags.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import criterion as crit
from . import oracles, semigroup, svgfig
from .fans import (
    Fan2,
    InvalidFan,
    NonPrimitiveDirection,
    ToricDivisor,
    divisor_from_polytope,
    flag_data,
    is_ample,
)
from .geometry import RatPolygon
from .semigroup import make_context


class InputError(Exception):
    def __init__(self, reason):
        super().__init__(reason)
        self.reason = reason


def _frac_in(x) -> Fraction:
    if isinstance(x, bool):
        raise InputError("bad rational literal")
    if isinstance(x, int):
        return Fraction(x)
    if (
        isinstance(x, list)
        and len(x) == 2
        and all(isinstance(t, int) and not isinstance(t, bool) for t in x)
        and x[1] != 0
    ):
        return Fraction(x[0], x[1])
    raise InputError(f"bad rational literal {x!r}: use an integer or [num, den]")


def _frac_out(x):
    f = Fraction(x)
    return f.numerator if f.denominator == 1 else [f.numerator, f.denominator]


def _point_out(p):
    return [_frac_out(p[0]), _frac_out(p[1])]


def _int_pair(x, what):
    if (
        isinstance(x, list)
        and len(x) == 2
        and all(isinstance(t, int) and not isinstance(t, bool) for t in x)
    ):
        return (x[0], x[1])
    raise InputError(f"{what} must be a pair of integers")


class Problem:
    def __init__(self, fan, divisor, direction, lk, bound, lambda_max, fan_given):
        self.fan = fan
        self.divisor = divisor
        self.direction = direction
        self.lk = lk
        self.bound = bound
        self.lambda_max = lambda_max
        self.fan_given = fan_given


def load_problem(path, direction_flag=None, need_divisor=True,
                 need_direction=True, require_smooth_fan_input=True) -> Problem:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read input {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"input is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError("input must be a JSON object")

    fan_given = "fan" in doc
    divisor = None
    if fan_given:
        rays = doc.get("fan", {}).get("rays")
        if not isinstance(rays, list):
            raise InputError("fan.rays must be a list of integer pairs")
        ray_list = [_int_pair(r, "ray") for r in rays]
        try:
            fan = Fan2.from_rays(ray_list)
        except InvalidFan as exc:
            raise InputError(f"invalid fan: {exc}") from exc
        if require_smooth_fan_input and not fan.is_smooth:
            raise InputError("fan not smooth")
        if "divisor" in doc:
            coeffs = doc["divisor"].get("coefficients")
            if not isinstance(coeffs, list) or len(coeffs) != len(ray_list):
                raise InputError(
                    "divisor.coefficients must align with fan.rays"
                )
            table = {r: _frac_in(c) for r, c in zip(ray_list, coeffs)}
            divisor = ToricDivisor.make(fan, table)
    elif "polytope" in doc:
        verts = doc.get("polytope", {}).get("vertices")
        if not isinstance(verts, list) or len(verts) < 3:
            raise InputError("polytope.vertices must list at least three points")
        pts = []
        for p in verts:
            if not isinstance(p, list) or len(p) != 2:
                raise InputError("polytope vertices must be coordinate pairs")
            pts.append((_frac_in(p[0]), _frac_in(p[1])))
        poly = RatPolygon.from_vertices(pts)
        if poly.dim != 2:
            raise InputError("polytope not two-dimensional")
        divisor = divisor_from_polytope(poly)
        fan = divisor.fan
    else:
        raise InputError("input needs either a fan or a polytope")

    if need_divisor:
        if divisor is None:
            raise InputError("this subcommand needs divisor coefficients")
        if not is_ample(divisor):
            raise InputError("divisor not ample")

    direction = None
    if direction_flag is not None:
        m = re.fullmatch(r"\s*(-?\d+)\s*,\s*(-?\d+)\s*", direction_flag)
        if not m:
            raise InputError("--direction must look like 'x,y'")
        direction = (int(m.group(1)), int(m.group(2)))
    elif "direction" in doc:
        direction = _int_pair(doc["direction"], "direction")
    if need_direction:
        if direction is None:
            raise InputError("no direction given")
        try:
            flag_data(fan, direction)
        except NonPrimitiveDirection:
            raise InputError("direction not primitive") from None

    lk = []
    for pair in doc.get("lk", []):
        lk.append(_int_pair(pair, "lk entry"))
    bound = doc.get("bound")
    lambda_max = doc.get("lambda_max")
    for name, val in (("bound", bound), ("lambda_max", lambda_max)):
        if val is not None and (not isinstance(val, int) or val < 1):
            raise InputError(f"{name} must be a positive integer")
    return Problem(fan, divisor, direction, lk, bound, lambda_max, fan_given)


def _cone_out(c):
    if c is None:
        return None
    return {"kind": c.kind, "generators": [list(g) for g in c.generators]}


def _witness_out(w):
    if w is None:
        return None
    return [list(w[0]), list(w[1])]


def _verdict_out(v):
    return {
        "finitely_generated": v.finitely_generated,
        "degenerate_side": v.degenerate_side,
        "sigma_plus": _cone_out(v.sigma_plus),
        "sigma_minus": _cone_out(v.sigma_minus),
        "witness_plus": _witness_out(v.witness_plus),
        "witness_minus": _witness_out(v.witness_minus),
    }


def cmd_analyze(problem: Problem) -> dict:
    ctx = make_context(problem.divisor, problem.direction)
    verdict = crit.is_finitely_generated(ctx)
    body = semigroup.newton_okounkov_body(ctx)
    seg = verdict.segment
    lam_max = problem.lambda_max or 60
    lifting = []
    for q, d in body.breakpoints:
        lifts = crit.vertex_lifts(ctx, q)
        lam = oracles.lift_search(ctx, q, lam_max)
        lifting.append(
            {"q": _frac_out(q), "d": _frac_out(d), "lifts": lifts, "lambda": lam}
        )
    return {
        "fan": {"rays": [list(r) for r in ctx.fan.rays], "smooth": ctx.fan.is_smooth},
        "divisor": [_frac_out(a) for a in ctx.divisor.coeffs],
        "direction": list(ctx.flag.v),
        "m": list(ctx.flag.m),
        "cprime": [[list(r), c] for r, c in zip(ctx.fan.rays, ctx.flag.cprime_coeffs)],
        "nabla_prime": [_point_out(p) for p in ctx.flag.nabla_prime.vertices],
        "segment": {
            "level": _frac_out(seg.level),
            "v1": _point_out(seg.v1),
            "v2": _point_out(seg.v2),
            "q_hat": _frac_out(seg.q_hat),
        },
        "sigma_plus": _cone_out(verdict.sigma_plus),
        "sigma_minus": _cone_out(verdict.sigma_minus),
        "q_hat": _frac_out(seg.q_hat),
        "nobody": {
            "vertices": [_point_out(p) for p in body.vertices],
            "breakpoints": [_point_out(p) for p in body.breakpoints],
        },
        "finitely_generated": verdict.finitely_generated,
        "degenerate_side": verdict.degenerate_side,
        "witness_plus": _witness_out(verdict.witness_plus),
        "witness_minus": _witness_out(verdict.witness_minus),
        "lifting": lifting,
    }


def cmd_semigroup(problem: Problem, lmax: int, expand: bool) -> str:
    ctx = make_context(problem.divisor, problem.direction)
    qh = semigroup.q_hat(ctx)
    lines = []
    if expand:
        lines.append("# columns: l,k,delta -- all semigroup elements up to level lmax")
        lines.append("l,k,delta")
    else:
        lines.append(
            "# columns: l,k,e_bar -- each row encodes the semigroup triples"
            " (l,k,delta) for 0 <= delta <= e_bar-1"
        )
        lines.append("l,k,e_bar")
    from .geometry import floor_frac

    for l in range(1, lmax + 1):
        kmax = floor_frac(Fraction(l) * qh)
        for k in range(kmax + 1):
            e = semigroup.e_bar(ctx, l, k)
            if expand:
                for delta in range(e):
                    lines.append(f"{l},{k},{delta}")
            else:
                lines.append(f"{l},{k},{e}")
    return "\n".join(lines) + "\n"


def cmd_nobody(problem: Problem) -> dict:
    ctx = make_context(problem.divisor, problem.direction)
    body = semigroup.newton_okounkov_body(ctx)
    return {
        "q_hat": _frac_out(semigroup.q_hat(ctx)),
        "vertices": [_point_out(p) for p in body.vertices],
        "breakpoints": [_point_out(p) for p in body.breakpoints],
        "area": _frac_out(body.polygon.area()),
    }


def cmd_fg(problem: Problem) -> dict:
    ctx = make_context(problem.divisor, problem.direction)
    verdict = crit.is_finitely_generated(ctx)
    out = _verdict_out(verdict)
    if verdict.degenerate_side:
        out["lifting"] = [
            {"q": _frac_out(q), "d": _frac_out(d), "lifts": ok}
            for q, d, ok in verdict.lifting
        ]
    return out


def cmd_fg_all(problem: Problem) -> dict:
    res = crit.fg_for_all_divisors(problem.fan, problem.direction)
    return {
        "holds": res.holds,
        "failing_cone": _cone_out(res.failing_cone),
        "failing_direction": list(res.failing_direction) if res.failing_direction else None,
        "witness": _witness_out(res.witness),
    }


def cmd_scan(problem: Problem, bound: int) -> list:
    target = problem.divisor
    results = crit.scan_directions(target, bound)
    return [
        {
            "direction": list(v),
            "finitely_generated": verdict.finitely_generated,
            "witness_plus": _witness_out(verdict.witness_plus),
            "witness_minus": _witness_out(verdict.witness_minus),
            "degenerate_side": verdict.degenerate_side,
        }
        for v, verdict in results
    ]


def cmd_construct_bad(problem: Problem) -> dict:
    res = crit.fg_for_all_divisors(problem.fan, problem.direction)
    if res.holds:
        return {
            "constructed": False,
            "reason": "no ray-spanned cone decomposes the direction; "
            "every ample divisor yields a finitely generated semigroup",
        }
    sigma, direction = res.failing_cone, res.failing_direction
    if sigma.kind != "cone":
        pointed = _pointed_failing_cone(problem.fan, problem.direction)
        if pointed is not None:
            sigma, direction = pointed
    out = crit.construct_bad_divisor(problem.fan, sigma, direction)
    from .fans import divisor_polytope

    return {
        "constructed": True,
        "sigma": _cone_out(sigma),
        "direction": list(direction),
        "d_theta": [_frac_out(a) for a in out.d_theta.coeffs],
        "d_prime": [_frac_out(a) for a in out.d_prime.coeffs],
        "divisor": [_frac_out(a) for a in out.divisor.coeffs],
        "rays": [list(r) for r in problem.fan.rays],
        "p_d": [_point_out(p) for p in divisor_polytope(out.divisor).vertices],
        "theta": [_point_out(p) for p in out.theta.vertices],
        "finitely_generated": False,
    }


def _pointed_failing_cone(fan, v):
    import itertools

    from .cones import cone, is_strongly_decomposable
    from .geometry import det, neg

    for i, j in itertools.combinations(range(len(fan.rays)), 2):
        ri, rj = fan.rays[i], fan.rays[j]
        if det(ri, rj) == 0:
            continue
        c = cone("N", ri, rj)
        for w in (v, neg(v)):
            if c.strictly_contains(w) and is_strongly_decomposable(w, c)[0]:
                return c, w
    return None


_THETA_RE = re.compile(r"theta\((-?\d+),(-?\d+)\)")


def cmd_plot(problem: Problem, what: str, flip_axes: bool) -> str:
    from .fans import divisor_polytope

    if what == "polytope":
        return svgfig.polygon_svg(divisor_polytope(problem.divisor), title="P_D")
    if what == "fan":
        return svgfig.fan_svg(problem.fan, title="fan")
    if what == "nobody":
        ctx = make_context(problem.divisor, problem.direction)
        body = semigroup.newton_okounkov_body(ctx)
        return svgfig.nobody_svg(body, flip_axes=flip_axes, title="NO body (q,t)")
    m = _THETA_RE.fullmatch(what)
    if what == "theta" or m:
        if m:
            l, k = int(m.group(1)), int(m.group(2))
        elif problem.lk:
            l, k = problem.lk[0]
        else:
            raise InputError("theta plot needs an (l,k) pair (input lk or theta(l,k))")
        ctx = make_context(problem.divisor, problem.direction)
        t = semigroup.theta(ctx, l, k)
        if t.is_empty:
            raise InputError(f"theta({l},{k}) is empty; nothing to draw")
        return svgfig.polygon_svg(t, title=f"theta({l},{k})")
    raise InputError(f"unknown plot target {what!r}")


def _write_output(text: str, output: str | None):
    if output:
        try:
            with open(output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"cannot write {output}: {exc}", file=sys.stderr)
            raise SystemExit(1)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="toricfg",
        description="valuation semigroups of ample divisors on toric surfaces "
        "with one-parameter-subgroup flags",
    )
    sub = ap.add_subparsers(dest="command", required=True)
    for name in (
        "analyze",
        "semigroup",
        "nobody",
        "fg",
        "fg-all",
        "scan",
        "construct-bad",
        "plot",
    ):
        p = sub.add_parser(name)
        p.add_argument("--input", required=True, help="path to the JSON problem file")
        p.add_argument("--direction", help="flag direction 'x,y' (overrides input)")
        p.add_argument("--output", help="write output here instead of stdout")
        if name == "semigroup":
            p.add_argument("--lmax", type=int, default=3)
            p.add_argument("--expand", action="store_true",
                           help="emit full (l,k,delta) triples")
        if name == "scan":
            p.add_argument("--bound", type=int)
        if name == "analyze":
            p.add_argument("--lambda-max", type=int, dest="lambda_max")
        if name == "plot":
            p.add_argument("--what", required=True,
                           help="polytope | fan | theta | theta(l,k) | nobody")
            p.add_argument("--flip-axes", action="store_true")
    args = ap.parse_args(argv)

    need_divisor = args.command not in ("fg-all", "construct-bad")
    need_direction = args.command != "scan" and not (
        args.command == "plot" and args.what in ("polytope", "fan")
    )
    try:
        problem = load_problem(
            args.input,
            direction_flag=args.direction,
            need_divisor=need_divisor,
            need_direction=need_direction,
            # ray-pair combinatorics is meaningful on any complete fan;
            # the semigroup-theoretic commands insist on smooth fan input
            require_smooth_fan_input=args.command not in ("fg-all", "construct-bad"),
        )
        if args.command == "analyze":
            if args.lambda_max:
                problem.lambda_max = args.lambda_max
            out = json.dumps(cmd_analyze(problem), indent=2) + "\n"
        elif args.command == "semigroup":
            out = cmd_semigroup(problem, args.lmax, args.expand)
        elif args.command == "nobody":
            out = json.dumps(cmd_nobody(problem), indent=2) + "\n"
        elif args.command == "fg":
            out = json.dumps(cmd_fg(problem), indent=2) + "\n"
        elif args.command == "fg-all":
            out = json.dumps(cmd_fg_all(problem), indent=2) + "\n"
        elif args.command == "scan":
            bound = args.bound or problem.bound
            if not bound:
                raise InputError("scan needs --bound or an input bound")
            out = json.dumps(cmd_scan(problem, bound), indent=2) + "\n"
        elif args.command == "construct-bad":
            out = json.dumps(cmd_construct_bad(problem), indent=2) + "\n"
        else:
            out = cmd_plot(problem, args.what, getattr(args, "flip_axes", False))
    except InputError as exc:
        print(json.dumps({"error": exc.reason}), file=sys.stderr)
        return 2
    _write_output(out, args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
