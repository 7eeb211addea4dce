"""The macro library: the classical named constructions, each expanding to
primitive ruler-and-compass instructions and ending in machine-checked
postconditions.

Conventions shared by all macros:

* Argument points/lines/circles are workspace names; plain numbers are given
  data (segment lengths, weights, degrees).
* FreePoint helpers stand in for the arbitrary choices every classical
  construction allows (an arbitrary compass opening, an arbitrary point on a
  line) and for laying off given data.
* Two-point ambiguities are resolved with nearest-to selectors whose anchors
  are computed analytically, the machine version of reading the figure.
* Each macro verifies its own contract via ``vm.check``; a violation raises
  MacroPostconditionError because it can only mean the expansion is wrong.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Callable

from ..errors import (
    ConstructionError,
    DegenerateInputError,
    DomainError,
    InfeasibleConstructionError,
    NotConstructibleError,
)
from ..plane import (
    Arc,
    Circle,
    Line,
    Point,
    angle_at,
    distance,
    distance_point_line,
    foot_of_perpendicular,
    intersect_circle_circle,
    line_through,
    midpoint,
    point_power,
)
from ..scalar import TWO_PI, AngleMeasure
from .vm import VM, Selector

GOLDEN_RATIO_INVERSE = (math.sqrt(5.0) - 1) / 2

ANGLE_LIMIT = 1e-9
PARALLEL_LIMIT = 1e-12
REL_LIMIT = 1e-9
ARC_ANGLE_LIMIT = 1e-7


@dataclass(frozen=True)
class MacroDef:
    name: str
    summary: str
    postconditions: tuple[str, ...]
    expand: Callable[[VM, tuple[Any, ...]], list[str]]


MACROS: dict[str, MacroDef] = {}


def _macro(name: str, summary: str, postconditions: tuple[str, ...]):
    def register(fn: Callable[[VM, tuple[Any, ...]], list[str]]) -> Callable:
        MACROS[name] = MacroDef(name, summary, postconditions, fn)
        return fn
    return register


def _unit(dx: float, dy: float) -> tuple[float, float]:
    norm = math.hypot(dx, dy)
    if norm == 0:
        raise DegenerateInputError("zero direction vector")
    return dx / norm, dy / norm


def _rotate(dx: float, dy: float, angle: float) -> tuple[float, float]:
    c, s = math.cos(angle), math.sin(angle)
    return c * dx - s * dy, s * dx + c * dy


def _point_args(vm: VM, macro: str, args: tuple[Any, ...], count: int,
                extra_ok: int = 0) -> list[str]:
    if not (count <= len(args) <= count + extra_ok):
        raise DomainError(f"{macro} expects {count} argument(s), got {len(args)}")
    names = []
    for arg in args[:count]:
        if not isinstance(arg, str) or not isinstance(vm.ws.get(arg), Point):
            raise DomainError(f"{macro} expects point names, got {arg!r}")
        names.append(arg)
    return names


def _scalar_args(macro: str, args: tuple[Any, ...], count: int) -> list[float]:
    if len(args) != count:
        raise DomainError(f"{macro} expects {count} number(s), got {len(args)}")
    values = []
    for arg in args:
        if isinstance(arg, bool) or not isinstance(arg, (int, float)):
            raise DomainError(f"{macro} expects numbers, got {arg!r}")
        if arg <= 0:
            raise DomainError(f"{macro} expects positive lengths, got {arg!r}")
        values.append(float(arg))
    return values


def _line_arg(vm: VM, macro: str, arg: Any) -> tuple[str, Line]:
    if not isinstance(arg, str) or not isinstance(vm.ws.get(arg), Line):
        raise DomainError(f"{macro} expects a line name, got {arg!r}")
    return arg, vm.ws.get(arg)  # type: ignore[return-value]


def _circle_arg(vm: VM, macro: str, arg: Any) -> tuple[str, Circle]:
    if not isinstance(arg, str) or not isinstance(vm.ws.get(arg), Circle):
        raise DomainError(f"{macro} expects a circle name, got {arg!r}")
    return arg, vm.ws.get(arg)  # type: ignore[return-value]


def _given_segment(vm: VM, length: float, level: float) -> tuple[str, str]:
    """Lay off a given length as a free-point pair, ready for compass transfer."""
    p = vm.free_point(0.0, level)
    q = vm.free_point(length, level)
    return p, q


@_macro("triangle_from_sides",
        "triangle with the three given side lengths",
        ("pairwise vertex distances equal the given sides",))
def _triangle_from_sides(vm: VM, args: tuple[Any, ...]) -> list[str]:
    a, b, c = _scalar_args("triangle_from_sides", args, 3)
    if a >= b + c or b >= a + c or c >= a + b:
        raise InfeasibleConstructionError(
            f"no triangle with sides ({a}, {b}, {c}): "
            "each side must be less than the sum of the other two")
    level = -(a + b + c)
    vertex_b = vm.free_point(0.0, 0.0)
    vertex_c = vm.free_point(a, 0.0)
    gb = _given_segment(vm, b, level)
    gc = _given_segment(vm, c, level - 1.0)
    around_c = vm.circle_radius_of(vertex_c, *gb)
    around_b = vm.circle_radius_of(vertex_b, *gc)
    cx = (a * a + c * c - b * b) / (2 * a)
    cy = math.sqrt(max(c * c - cx * cx, 0.0))
    vertex_a = vm.intersect_nearest(around_c, around_b, Point(cx, cy))
    pa, pb, pc = (vm.ws.point(n) for n in (vertex_a, vertex_b, vertex_c))
    limit = vm.ws.tolerance.window(max(a, b, c))
    vm.check("side a", distance(pb, pc) - a, limit)
    vm.check("side b", distance(pc, pa) - b, limit)
    vm.check("side c", distance(pa, pb) - c, limit)
    return [vertex_a, vertex_b, vertex_c]


@_macro("copy_angle",
        "copy the angle at B (given by rays BA, BC) onto the ray OM",
        ("the new angle equals the source angle within 1e-9 rad",))
def _copy_angle(vm: VM, args: tuple[Any, ...]) -> list[str]:
    a, b, c, o, m = _point_args(vm, "copy_angle", args, 5)
    pa, pb, pc, po, pm = (vm.ws.point(n) for n in (a, b, c, o, m))
    alpha = angle_at(pa, pb, pc).radians
    if alpha <= ANGLE_LIMIT:
        out = vm.line(o, m)
        vm.check("copy_angle zero case", 0.0, ANGLE_LIMIT)
        return [out]
    rho = distance(pb, pa)
    around_b = vm.circle_through(b, a)
    ray_bc = vm.line(b, c)
    ux, uy = _unit(pc.x - pb.x, pc.y - pb.y)
    f = vm.intersect_nearest(around_b, ray_bc,
                             Point(pb.x + rho * ux, pb.y + rho * uy))
    around_o = vm.circle_radius_of(o, b, a)
    ray_om = vm.line(o, m)
    vx, vy = _unit(pm.x - po.x, pm.y - po.y)
    p = vm.intersect_nearest(around_o, ray_om,
                             Point(po.x + rho * vx, po.y + rho * vy))
    span = vm.circle_radius_of(p, a, f)
    r = vm.intersect(span, around_o, Selector("first"))[0]
    out = vm.line(o, r)
    beta = angle_at(pm, po, vm.ws.point(r)).radians
    vm.check("copied angle", beta - alpha, ANGLE_LIMIT)
    return [out]


@_macro("bisect_angle",
        "bisector of the angle AOB (a straight angle reduces to a perpendicular)",
        ("the two half-angles differ by < 1e-9 rad",
         "points of the bisector are equidistant from both sides"))
def _bisect_angle(vm: VM, args: tuple[Any, ...]) -> list[str]:
    a, o, b = _point_args(vm, "bisect_angle", args, 3)
    pa, po, pb = (vm.ws.point(n) for n in (a, o, b))
    alpha = angle_at(pa, po, pb).radians
    if alpha <= ANGLE_LIMIT:
        raise DegenerateInputError("cannot bisect a zero angle")
    rho = distance(po, pa)
    around_o = vm.circle_through(o, a)
    ray_ob = vm.line(o, b)
    ux, uy = _unit(pb.x - po.x, pb.y - po.y)
    e = vm.intersect_nearest(around_o, ray_ob,
                             Point(po.x + rho * ux, po.y + rho * uy))
    pe = vm.ws.point(e)
    chord_mid = midpoint(pa, pe)
    if distance(po, chord_mid) <= 1e-9 * rho:
        # Straight angle: D, E are antipodal, so erect the perpendicular at O.
        c1 = vm.circle_through(a, e)
        c2 = vm.circle_through(e, a)
        f = vm.intersect(c1, c2, Selector("first"))[0]
    else:
        c1 = vm.circle_through(a, o)
        c2 = vm.circle_through(e, o)
        anchor = Point(2 * chord_mid.x - po.x, 2 * chord_mid.y - po.y)
        f = vm.intersect_nearest(c1, c2, anchor)
    out = vm.line(o, f)
    pf = vm.ws.point(f)
    half1 = angle_at(pa, po, pf).radians
    half2 = angle_at(pb, po, pf).radians
    vm.check("half-angle split", half1 - half2, ANGLE_LIMIT)
    side_a = line_through(po, pa)
    side_b = line_through(po, pb)
    vm.check("bisector point equidistant from the sides",
             distance_point_line(pf, side_a) - distance_point_line(pf, side_b),
             vm.ws.tolerance.window(rho))
    return [out]


@_macro("erect_perpendicular",
        "perpendicular to a line at one of its points",
        ("result is perpendicular to the line and passes through the point",))
def _erect_perpendicular(vm: VM, args: tuple[Any, ...]) -> list[str]:
    if len(args) != 2:
        raise DomainError(f"erect_perpendicular expects (point, line), got {len(args)} args")
    c = _point_args(vm, "erect_perpendicular", args[:1], 1)[0]
    lname, line = _line_arg(vm, "erect_perpendicular", args[1])
    pc = vm.ws.point(c)
    if not line.contains(pc, vm.ws.tolerance):
        raise DegenerateInputError(
            f"point {c!r} does not lie on line {lname!r}; use drop_perpendicular")
    dx, dy = line.direction()
    u = max(1.0, abs(pc.x), abs(pc.y))  # opening scaled to the coordinates
    d = vm.free_point(pc.x + u * dx, pc.y + u * dy)
    around_c = vm.circle_through(c, d)
    e = vm.intersect_nearest(around_c, lname, Point(pc.x - u * dx, pc.y - u * dy))
    c1 = vm.circle_through(d, e)
    c2 = vm.circle_through(e, d)
    f = vm.intersect(c1, c2, Selector("first"))[0]
    out = vm.line(c, f)
    result = vm.ws.get(out)
    vm.check("perpendicularity",
             result.a * line.a + result.b * line.b, ANGLE_LIMIT)
    vm.check("passes through the point", result.evaluate(pc), ANGLE_LIMIT)
    return [out]


@_macro("drop_perpendicular",
        "perpendicular from an external point onto a line",
        ("result is perpendicular to the line and passes through the point",))
def _drop_perpendicular(vm: VM, args: tuple[Any, ...]) -> list[str]:
    if len(args) != 2:
        raise DomainError(f"drop_perpendicular expects (point, line), got {len(args)} args")
    a = _point_args(vm, "drop_perpendicular", args[:1], 1)[0]
    lname, line = _line_arg(vm, "drop_perpendicular", args[1])
    pa = vm.ws.point(a)
    dist = distance_point_line(pa, line)
    if line.contains(pa, vm.ws.tolerance):
        raise DegenerateInputError(
            f"point {a!r} lies on line {lname!r}; use erect_perpendicular")
    foot = foot_of_perpendicular(pa, line)
    mirror = Point(2 * foot.x - pa.x, 2 * foot.y - pa.y)
    h = vm.free_point(mirror.x, mirror.y)
    around_a = vm.circle_through(a, h)
    d, e = vm.intersect(around_a, lname)
    c1 = vm.circle_through(d, e)
    c2 = vm.circle_through(e, d)
    f = vm.intersect_nearest(c1, c2, mirror)
    out = vm.line(a, f)
    result = vm.ws.get(out)
    vm.check("perpendicularity",
             result.a * line.a + result.b * line.b, ANGLE_LIMIT)
    vm.check("passes through the point", result.evaluate(pa), ANGLE_LIMIT * max(1.0, dist))
    return [out]


@_macro("perpendicular_bisector",
        "perpendicular bisector of a segment",
        ("every sampled point of the result is equidistant from the endpoints",))
def _perpendicular_bisector(vm: VM, args: tuple[Any, ...]) -> list[str]:
    a, b = _point_args(vm, "perpendicular_bisector", args, 2)
    pa, pb = vm.ws.point(a), vm.ws.point(b)
    if distance(pa, pb) <= vm.ws.tolerance.abs_eps:
        raise DegenerateInputError("segment endpoints coincide")
    c1 = vm.circle_through(a, b)
    c2 = vm.circle_through(b, a)
    p, q = vm.intersect(c1, c2)
    out = vm.line(p, q)
    result = vm.ws.get(out)
    span = distance(pa, pb)
    limit = vm.ws.tolerance.window(span)
    dx, dy = result.direction()
    mid = midpoint(pa, pb)
    for t in (-1.0, -0.5, 0.0, 0.5, 1.0):
        sample = Point(mid.x + t * span * dx, mid.y + t * span * dy)
        vm.check("equidistance from the segment endpoints",
                 distance(sample, pa) - distance(sample, pb), limit)
    return [out]


@_macro("parallel_through",
        "parallel to a line through an external point",
        ("direction cross-product with the given line < 1e-12",
         "result passes through the given point"))
def _parallel_through(vm: VM, args: tuple[Any, ...]) -> list[str]:
    if len(args) != 2:
        raise DomainError(f"parallel_through expects (point, line), got {len(args)} args")
    m = _point_args(vm, "parallel_through", args[:1], 1)[0]
    lname, line = _line_arg(vm, "parallel_through", args[1])
    pm = vm.ws.point(m)
    dist = distance_point_line(pm, line)
    dx, dy = line.direction()
    if line.contains(pm, vm.ws.tolerance):
        # The parallel through a point of the line is the line itself.
        d1 = vm.free_point(pm.x + dx, pm.y + dy)
        d2 = vm.free_point(pm.x - dx, pm.y - dy)
        out = vm.line(d1, d2)
        vm.ws.macro_notes[out] = "coincident"
        vm.check("coincident parallel", vm.ws.get(out).evaluate(pm), PARALLEL_LIMIT)
        return [out]
    foot = foot_of_perpendicular(pm, line)
    # Arbitrary compass opening, kept commensurate with the coordinates so a
    # point lying close to the line does not collapse the construction into
    # an ill-conditioned sliver (the direction error grows like scale/spread).
    spread = max(dist, 1.0, abs(pm.x), abs(pm.y))
    c_pt = vm.free_point(foot.x + spread * dx, foot.y + spread * dy)
    pc = vm.ws.point(c_pt)
    rho = distance(pm, pc)
    around_m = vm.circle_through(m, c_pt)
    around_c = vm.circle_through(c_pt, m)
    # Take the chord point on the foot's side: the transfer circle stays
    # small and meets the big circle transversally instead of near-tangency.
    e = vm.intersect_nearest(around_c, lname,
                             Point(foot.x + (spread - rho) * dx,
                                   foot.y + (spread - rho) * dy))
    pe = vm.ws.point(e)
    span = vm.circle_radius_of(c_pt, e, m)
    f = vm.intersect_nearest(span, around_m,
                             Point(pm.x + pc.x - pe.x, pm.y + pc.y - pe.y))
    out = vm.line(m, f)
    result = vm.ws.get(out)
    vm.check("parallelism", result.a * line.b - result.b * line.a, PARALLEL_LIMIT)
    vm.check("passes through the point", result.evaluate(pm), PARALLEL_LIMIT * 10)
    return [out]


def _divide_with_marks(vm: VM, a: str, b: str, fractions: list[float]) -> list[str]:
    """Shared tail of the two division macros: marks on an auxiliary ray at
    the given cumulative fractions, then parallels to the closing line."""
    pa, pb = vm.ws.point(a), vm.ws.point(b)
    span = distance(pa, pb)
    ux, uy = _rotate(*_unit(pb.x - pa.x, pb.y - pa.y), math.pi / 4)
    marks = [vm.free_point(pa.x + frac * span * ux, pa.y + frac * span * uy)
             for frac in fractions]
    base = vm.line(a, b)
    closing = vm.line(marks[-1], b)
    outs = []
    for mark in marks[:-1]:
        par = vm.call_macro("parallel_through", (mark, closing))[0]
        outs.append(vm.intersect(par, base, Selector("first"))[0])
    return outs


def _check_division(vm: VM, a: str, b: str, cuts: list[str], weights: list[float]) -> None:
    points = [vm.ws.point(a)] + [vm.ws.point(n) for n in cuts] + [vm.ws.point(b)]
    total = distance(points[0], points[-1])
    for (p, q), w in zip(zip(points, points[1:]), weights):
        expected = total * w / sum(weights)
        vm.check("division proportion", (distance(p, q) - expected) / total, REL_LIMIT)


@_macro("divide_segment",
        "cut a segment into n equal parts",
        ("consecutive sub-lengths are equal within rel 1e-9",))
def _divide_segment(vm: VM, args: tuple[Any, ...]) -> list[str]:
    if len(args) != 3:
        raise DomainError("divide_segment expects (A, B, n)")
    a, b = _point_args(vm, "divide_segment", args[:2], 2, extra_ok=1)
    n = args[2]
    if isinstance(n, float) and n.is_integer():
        n = int(n)
    if not isinstance(n, int) or n < 2:
        raise DomainError(f"divide_segment needs an integer n >= 2, got {args[2]!r}")
    fractions = [k / n for k in range(1, n + 1)]
    outs = _divide_with_marks(vm, a, b, fractions)
    _check_division(vm, a, b, outs, [1.0] * n)
    return outs


@_macro("divide_segment_ratio",
        "cut a segment in the ratio of the given weights",
        ("consecutive sub-lengths are proportional to the weights within rel 1e-9",))
def _divide_segment_ratio(vm: VM, args: tuple[Any, ...]) -> list[str]:
    if len(args) < 4:
        raise DomainError("divide_segment_ratio expects (A, B, w1, w2, ...)")
    a, b = _point_args(vm, "divide_segment_ratio", args[:2], 2, extra_ok=len(args))
    weights = _scalar_args("divide_segment_ratio", args[2:], len(args) - 2)
    total = sum(weights)
    cumulative = []
    acc = 0.0
    for w in weights:
        acc += w
        cumulative.append(acc / total)
    outs = _divide_with_marks(vm, a, b, cumulative)
    _check_division(vm, a, b, outs, weights)
    return outs


@_macro("fourth_proportional",
        "segment x with a : b = c : x",
        ("|result| = b*c/a within rel 1e-9",))
def _fourth_proportional(vm: VM, args: tuple[Any, ...]) -> list[str]:
    a, b, c = _scalar_args("fourth_proportional", args, 3)
    apex = vm.free_point(0.0, 0.0)
    d = vm.free_point(a, 0.0)
    e = vm.free_point(a + c, 0.0)
    f = vm.free_point(b * 0.5, b * math.sqrt(3.0) / 2)
    cross = vm.line(d, f)
    second_ray = vm.line(apex, f)
    par = vm.call_macro("parallel_through", (e, cross))[0]
    g = vm.intersect(par, second_ray, Selector("first"))[0]
    expected = b * c / a
    measured = distance(vm.ws.point(f), vm.ws.point(g))
    vm.check("fourth proportional", (measured - expected) / expected, REL_LIMIT)
    return [f, g]


def _semicircle_ordinate(vm: VM, span: float, abscissa: float) -> tuple[str, str, str]:
    """Half-circle on a segment of the given span laid on the x-axis, with the
    perpendicular at the given abscissa; returns (start, foot, top) names."""
    start = vm.free_point(0.0, 0.0)
    end = vm.free_point(span, 0.0)
    base = vm.line(start, end)
    bisector = vm.call_macro("perpendicular_bisector", (start, end))[0]
    center = vm.intersect(bisector, base, Selector("first"))[0]
    half = vm.circle_through(center, start)
    foot = vm.free_point(abscissa, 0.0)
    upright = vm.call_macro("erect_perpendicular", (foot, base))[0]
    rise = math.sqrt(max(abscissa * (span - abscissa), 0.0))
    top = vm.intersect_nearest(half, upright, Point(abscissa, max(rise, span / 2)))
    return start, foot, top


@_macro("geometric_mean",
        "mean proportional of two segments, semicircle-altitude form",
        ("|result|^2 = a*b within rel 1e-9",))
def _geometric_mean(vm: VM, args: tuple[Any, ...]) -> list[str]:
    a, b = _scalar_args("geometric_mean", args, 2)
    _, foot, top = _semicircle_ordinate(vm, a + b, a)
    measured = distance(vm.ws.point(foot), vm.ws.point(top))
    vm.check("mean proportional", (measured * measured - a * b) / (a * b), REL_LIMIT)
    return [foot, top]


@_macro("geometric_mean_chord",
        "mean proportional of two segments, chord form",
        ("|result|^2 = a*b within rel 1e-9",))
def _geometric_mean_chord(vm: VM, args: tuple[Any, ...]) -> list[str]:
    a, b = _scalar_args("geometric_mean_chord", args, 2)
    small, big = sorted((a, b))
    start, _, top = _semicircle_ordinate(vm, big, small)
    measured = distance(vm.ws.point(start), vm.ws.point(top))
    vm.check("mean proportional (chord)",
             (measured * measured - a * b) / (a * b), REL_LIMIT)
    return [start, top]


@_macro("golden_section",
        "divide a segment in mean and extreme ratio",
        ("AG^2 = AB*GB within rel 1e-9", "AG/AB matches 0.61803 within 1e-5"))
def _golden_section(vm: VM, args: tuple[Any, ...]) -> list[str]:
    a, b = _point_args(vm, "golden_section", args, 2)
    pa, pb = vm.ws.point(a), vm.ws.point(b)
    span = distance(pa, pb)
    if span <= vm.ws.tolerance.abs_eps:
        raise DegenerateInputError("golden_section of a zero segment")
    base = vm.line(a, b)
    bisector = vm.call_macro("perpendicular_bisector", (a, b))[0]
    mid = vm.intersect(bisector, base, Selector("first"))[0]
    upright = vm.call_macro("erect_perpendicular", (b, base))[0]
    around_b = vm.circle_through(b, mid)
    base_line: Line = vm.ws.get(base)  # type: ignore[assignment]
    nx, ny = base_line.a, base_line.b
    d = vm.intersect_nearest(around_b, upright,
                             Point(pb.x + span * nx, pb.y + span * ny))
    hyp = vm.line(a, d)
    around_d = vm.circle_through(d, b)
    e = vm.intersect_nearest(around_d, hyp, pa)
    around_a = vm.circle_through(a, e)
    g = vm.intersect_nearest(around_a, base, pb)
    pg = vm.ws.point(g)
    ag, gb = distance(pa, pg), distance(pg, pb)
    vm.check("mean-and-extreme ratio", (ag * ag - span * gb) / (span * span), REL_LIMIT)
    vm.check("golden ratio value", ag / span - GOLDEN_RATIO_INVERSE, 1e-5)
    return [g]


@_macro("tangents_from_point",
        "tangent line(s) to a circle from a point on or outside it",
        ("each line touches the circle: center distance equals the radius",
         "the two tangent segments from an external point are equal"))
def _tangents_from_point(vm: VM, args: tuple[Any, ...]) -> list[str]:
    if len(args) != 2:
        raise DomainError("tangents_from_point expects (point, circle)")
    p = _point_args(vm, "tangents_from_point", args[:1], 1)[0]
    cname, circle = _circle_arg(vm, "tangents_from_point", args[1])
    pp = vm.ws.point(p)
    d = distance(pp, circle.center)
    window = vm.ws.tolerance.window(circle.radius)
    if d < circle.radius - window:
        raise InfeasibleConstructionError(
            "no tangent exists from a point strictly inside the circle")
    center = vm.free_point(circle.center.x, circle.center.y)
    if abs(d - circle.radius) <= window:
        radius_line = vm.line(center, p)
        out = vm.call_macro("erect_perpendicular", (p, radius_line))[0]
        lines = [out]
    else:
        bisector = vm.call_macro("perpendicular_bisector", (center, p))[0]
        axis = vm.line(center, p)
        half = vm.intersect(bisector, axis, Selector("first"))[0]
        thales = vm.circle_through(half, center)
        touch1, touch2 = vm.intersect(thales, cname)
        lines = [vm.line(p, touch1), vm.line(p, touch2)]
        t1 = distance(pp, vm.ws.point(touch1))
        t2 = distance(pp, vm.ws.point(touch2))
        vm.check("equal tangent lengths", (t1 - t2) / max(t1, t2), REL_LIMIT)
        vm.check("tangent length vs point power",
                 (t1 * t1 - point_power(circle, pp)) / (d * d), REL_LIMIT)
    for name in lines:
        line: Line = vm.ws.get(name)  # type: ignore[assignment]
        vm.check("tangency", distance_point_line(circle.center, line) - circle.radius,
                 window)
    return lines


def _tangent_via_aux(vm: VM, big_center: str, big_name: str, big: Circle,
                     aux_name: str, other_center: str) -> list[str]:
    """Common-tangent core: tangents from the second center to the auxiliary
    circle, carried back to parallel tangents of the big circle.  The touch point on
    the big circle lies on the ray from its center through the auxiliary
    tangency point, for the difference and the sum auxiliary alike."""
    touches = vm.call_macro("tangents_from_point", (other_center, aux_name))
    outs = []
    for tangent in touches:
        c = vm.intersect(aux_name, tangent, Selector("first"))[0]
        pc = vm.ws.point(c)
        radius_line = vm.line(big_center, c)
        ux, uy = _unit(pc.x - big.center.x, pc.y - big.center.y)
        anchor = Point(big.center.x + big.radius * ux,
                       big.center.y + big.radius * uy)
        a = vm.intersect_nearest(radius_line, big_name, anchor)
        outs.append(vm.call_macro("erect_perpendicular", (a, radius_line))[0])
    return outs


@_macro("common_tangents",
        "all common tangents of two circles, tagged external/internal",
        ("each line is at the matching circle's radius from its center",
         "the count follows the five-way case analysis: 4/3/2/1/0"))
def _common_tangents(vm: VM, args: tuple[Any, ...]) -> list[str]:
    if len(args) != 2:
        raise DomainError("common_tangents expects two circles")
    n1, c1 = _circle_arg(vm, "common_tangents", args[0])
    n2, c2 = _circle_arg(vm, "common_tangents", args[1])
    relation, _ = intersect_circle_circle(c1, c2, vm.ws.tolerance)
    from ..plane import CircleRelation as CR

    if relation is CR.CONCENTRIC:
        return []
    if c1.radius >= c2.radius:
        big_name, big, small = n1, c1, c2
    else:
        big_name, big, small = n2, c2, c1
    window = vm.ws.tolerance.window(big.radius)
    d = distance(big.center, small.center)
    big_center = vm.free_point(big.center.x, big.center.y)
    small_center = vm.free_point(small.center.x, small.center.y)
    axis = vm.line(big_center, small_center)
    ux, uy = _unit(small.center.x - big.center.x, small.center.y - big.center.y)
    outs: list[str] = []

    # External tangents.
    if relation is CR.INTERNAL_TANGENT:
        touch = vm.intersect_nearest(axis, big_name,
                                     Point(big.center.x + big.radius * ux,
                                           big.center.y + big.radius * uy))
        outs.append(vm.call_macro("erect_perpendicular", (touch, axis))[0])
    elif relation is not CR.INTERNAL_DISJOINT:
        if abs(big.radius - small.radius) <= window:
            upright = vm.call_macro("erect_perpendicular", (big_center, axis))[0]
            a1, a2 = vm.intersect(upright, big_name)
            outs.append(vm.call_macro("parallel_through", (a1, axis))[0])
            outs.append(vm.call_macro("parallel_through", (a2, axis))[0])
        else:
            seg = _given_segment(vm, big.radius - small.radius,
                                 min(big.center.y, small.center.y) - d - big.radius)
            aux = vm.circle_radius_of(big_center, *seg)
            outs.extend(_tangent_via_aux(vm, big_center, big_name, big, aux,
                                         small_center))
    for name in outs:
        vm.ws.macro_notes[name] = "external"
    externals = len(outs)

    # Internal tangents.
    if relation is CR.EXTERNAL_TANGENT:
        touch = vm.intersect_nearest(axis, big_name,
                                     Point(big.center.x + big.radius * ux,
                                           big.center.y + big.radius * uy))
        outs.append(vm.call_macro("erect_perpendicular", (touch, axis))[0])
    elif relation is CR.EXTERNAL_DISJOINT:
        seg = _given_segment(vm, big.radius + small.radius,
                             min(big.center.y, small.center.y) - d - 2 * big.radius)
        aux = vm.circle_radius_of(big_center, *seg)
        outs.extend(_tangent_via_aux(vm, big_center, big_name, big, aux,
                                     small_center))
    for name in outs[externals:]:
        vm.ws.macro_notes[name] = "internal"

    expected_count = {CR.EXTERNAL_DISJOINT: 4, CR.EXTERNAL_TANGENT: 3,
                      CR.INTERSECTING: 2, CR.INTERNAL_TANGENT: 1,
                      CR.INTERNAL_DISJOINT: 0}[relation]
    if len(outs) != expected_count:
        raise ConstructionError(
            f"common_tangents produced {len(outs)} lines, expected {expected_count}")
    for name in outs:
        line: Line = vm.ws.get(name)  # type: ignore[assignment]
        for circle in (big, small):
            vm.check("common tangency",
                     distance_point_line(circle.center, line) - circle.radius,
                     vm.ws.tolerance.window(circle.radius) * 10)
    return outs


@_macro("arc_containing_angle",
        "the arc from which a segment is seen under the given angle",
        ("10 sampled inscribed angles equal the target within 1e-7 rad",))
def _arc_containing_angle(vm: VM, args: tuple[Any, ...]) -> list[str]:
    if len(args) != 3:
        raise DomainError("arc_containing_angle expects (A, B, angle)")
    a, b = _point_args(vm, "arc_containing_angle", args[:2], 2, extra_ok=1)
    raw = args[2]
    if isinstance(raw, AngleMeasure):
        alpha = raw.radians
    elif isinstance(raw, (int, float)) and not isinstance(raw, bool):
        alpha = math.radians(float(raw))
    else:
        raise DomainError(f"arc_containing_angle needs an angle, got {raw!r}")
    if not 0 < alpha < math.pi - 1e-12:
        raise DegenerateInputError(
            "the inscribed angle must lie strictly between 0 and 180 degrees")
    pa, pb = vm.ws.point(a), vm.ws.point(b)
    span = distance(pa, pb)
    if span <= vm.ws.tolerance.abs_eps:
        raise DegenerateInputError("segment endpoints coincide")
    ex, ey = _rotate(*_unit(pb.x - pa.x, pb.y - pa.y), -alpha)
    e = vm.free_point(pa.x + span * ex, pa.y + span * ey)
    tangent_ray = vm.line(a, e)
    upright = vm.call_macro("erect_perpendicular", (a, tangent_ray))[0]
    bisector = vm.call_macro("perpendicular_bisector", (a, b))[0]
    center = vm.intersect(upright, bisector, Selector("first"))[0]
    circle = vm.circle_through(center, a)
    pcenter = vm.ws.point(center)
    circ: Circle = vm.ws.get(circle)  # type: ignore[assignment]
    theta_a = math.atan2(pa.y - pcenter.y, pa.x - pcenter.x)
    theta_b = math.atan2(pb.y - pcenter.y, pb.x - pcenter.x)
    pe = vm.ws.point(e)
    base_line = line_through(pa, pb)
    e_side = base_line.evaluate(pe)
    sweep = (theta_b - theta_a) % TWO_PI
    arc = Arc(circ, AngleMeasure(theta_a), AngleMeasure(sweep))
    if base_line.evaluate(arc.point_at(0.5)) * e_side > 0:
        sweep = TWO_PI - sweep
        arc = Arc(circ, AngleMeasure(theta_b), AngleMeasure(sweep))
    name = vm.ws.gensym("arc")
    vm.ws.bind(name, arc)
    for k in range(10):
        sample = arc.point_at(0.05 + 0.9 * k / 9)
        vm.check("inscribed angle on the arc",
                 angle_at(pa, sample, pb).radians - alpha, ARC_ANGLE_LIMIT)
    return [name]


_SIDE_CLOSED_FORMS = {
    3: math.sqrt(3.0),
    4: math.sqrt(2.0),
    6: 1.0,
    10: GOLDEN_RATIO_INVERSE,
    12: math.sqrt(2.0 - math.sqrt(3.0)),
}

FERMAT_PRIMES = (3, 5, 17, 257, 65537)


def is_constructible_ngon(n: int) -> bool:
    """Gauss criterion: n = 2^k times a product of distinct Fermat primes."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"n must be an integer, got {n!r}")
    if n < 3:
        raise DomainError(f"a polygon needs at least 3 sides, got {n}")
    m = n
    while m % 2 == 0:
        m //= 2
    for p in FERMAT_PRIMES:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return False
    return m == 1


def _chord_walk(vm: VM, circle_name: str, circle: Circle, start: str,
                span_pair: tuple[str, str], count: int, step_angle: float,
                start_angle: float) -> list[str]:
    """Step a fixed compass opening around a circle, collecting vertices."""
    vertices = [start]
    for k in range(1, count):
        stepper = vm.circle_radius_of(vertices[-1], *span_pair)
        angle = start_angle + k * step_angle
        anchor = circle.point_at(angle)
        vertices.append(vm.intersect_nearest(stepper, circle_name, anchor))
    return vertices


def _double_vertices(vm: VM, circle_name: str, circle: Circle,
                     vertices: list[str]) -> list[str]:
    """Insert the mid-arc point of every side."""
    doubled: list[str] = []
    n = len(vertices)
    for i in range(n):
        p, q = vertices[i], vertices[(i + 1) % n]
        pp, pq = vm.ws.point(p), vm.ws.point(q)
        bisector = vm.call_macro("perpendicular_bisector", (p, q))[0]
        chord_mid = midpoint(pp, pq)
        ux, uy = _unit(chord_mid.x - circle.center.x, chord_mid.y - circle.center.y)
        anchor = Point(circle.center.x + circle.radius * ux,
                       circle.center.y + circle.radius * uy)
        mid = vm.intersect_nearest(bisector, circle_name, anchor)
        doubled.extend([p, mid])
    return doubled


def _check_equal_sides(vm: VM, vertices: list[str], radius: float) -> float:
    points = [vm.ws.point(v) for v in vertices]
    sides = [distance(points[i], points[(i + 1) % len(points)])
             for i in range(len(points))]
    mean = sum(sides) / len(sides)
    for side in sides:
        vm.check("equal polygon sides", (side - mean) / radius, REL_LIMIT)
    return mean


@_macro("inscribe_regular",
        "inscribe the regular n-gon for n with odd part 1, 3, 5, or 15",
        ("all sides equal within rel 1e-9",
         "the side matches its closed form where one is known"))
def _inscribe_regular(vm: VM, args: tuple[Any, ...]) -> list[str]:
    if len(args) != 2:
        raise DomainError("inscribe_regular expects (n, circle)")
    raw_n = args[0]
    if isinstance(raw_n, float) and raw_n.is_integer():
        raw_n = int(raw_n)
    if not isinstance(raw_n, int) or raw_n < 3:
        raise DomainError(f"inscribe_regular needs an integer n >= 3, got {args[0]!r}")
    n = raw_n
    circle_name, circle = _circle_arg(vm, "inscribe_regular", args[1])
    odd = n
    doublings = 0
    while odd % 2 == 0:
        odd //= 2
        doublings += 1
    if odd not in (1, 3, 5, 15) or (odd == 1 and n < 4):
        verdict = is_constructible_ngon(n)
        reason = ("is constructible (Gauss) but outside this macro library"
                  if verdict else "is not constructible with ruler and compass")
        raise NotConstructibleError(
            f"the regular {n}-gon {reason}; see is_constructible_ngon({n}) -> {verdict}")

    center = vm.free_point(circle.center.x, circle.center.y)
    start = vm.free_point(circle.center.x + circle.radius, circle.center.y)

    def hexagon() -> list[str]:
        return _chord_walk(vm, circle_name, circle, start, (center, start), 6,
                           TWO_PI / 6, 0.0)

    if odd == 1:
        axis = vm.line(start, center)
        opposite = vm.intersect_nearest(axis, circle_name,
                                        circle.point_at(math.pi))
        upright = vm.call_macro("erect_perpendicular", (center, axis))[0]
        low, high = vm.intersect(upright, circle_name)
        if vm.ws.point(low).y > vm.ws.point(high).y:
            low, high = high, low
        vertices = [start, high, opposite, low]
        doublings -= 2
    elif odd == 3:
        hexa = hexagon()
        if n == 3:
            vertices = [hexa[0], hexa[2], hexa[4]]
        else:
            vertices = hexa
            doublings -= 1
    elif odd == 5:
        golden = vm.call_macro("golden_section", (center, start))[0]
        deca = _chord_walk(vm, circle_name, circle, start, (center, golden), 10,
                           TWO_PI / 10, 0.0)
        if n == 5:
            vertices = deca[::2]
        else:
            vertices = deca
            doublings -= 1
    else:
        hexa_step = _chord_walk(vm, circle_name, circle, start, (center, start), 2,
                                TWO_PI / 6, 0.0)[1]
        golden = vm.call_macro("golden_section", (center, start))[0]
        deca_step = _chord_walk(vm, circle_name, circle, start, (center, golden), 2,
                                TWO_PI / 10, 0.0)[1]
        vertices = _chord_walk(vm, circle_name, circle, deca_step,
                               (hexa_step, deca_step), 15, TWO_PI / 15,
                               TWO_PI / 10)
    for _ in range(doublings):
        vertices = _double_vertices(vm, circle_name, circle, vertices)

    mean_side = _check_equal_sides(vm, vertices, circle.radius)
    closed_form = _SIDE_CLOSED_FORMS.get(len(vertices))
    if closed_form is not None:
        vm.check("closed-form side length",
                 (mean_side - closed_form * circle.radius) / circle.radius, REL_LIMIT)
    return vertices


@_macro("double_sides",
        "double the vertex count of an inscribed regular polygon",
        ("all 2n sides equal within rel 1e-9",))
def _double_sides(vm: VM, args: tuple[Any, ...]) -> list[str]:
    if len(args) < 4:
        raise DomainError("double_sides expects (circle, P1, P2, ..., Pn) with n >= 3")
    circle_name, circle = _circle_arg(vm, "double_sides", args[0])
    vertices = _point_args(vm, "double_sides", args[1:], len(args) - 1)
    for v in vertices:
        if not circle.contains(vm.ws.point(v), vm.ws.tolerance):
            raise DomainError(f"vertex {v!r} does not lie on circle {circle_name!r}")
    doubled = _double_vertices(vm, circle_name, circle, vertices)
    _check_equal_sides(vm, doubled, circle.radius)
    return doubled
