"""Randomized property suites for the classical theorems behind the kernel.

Each suite runs a fixed number of seeded-random instances, measures the worst
residual against its theorem, and reports pass/fail at the suite tolerance.
All randomness flows from one ``random.Random(seed)``, so a (suite, seed,
samples) triple always reproduces byte-identical results.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from decimal import Decimal, getcontext
from typing import Callable

from . import construct, mensura, solids
from .errors import GeometryError
from .plane import (
    Circle,
    Point,
    distance,
    intersect_line_circle,
    line_through,
    point_power,
)
from .scalar import Interval, dms_to_radians, radians_to_dms

TWO_PI = 2 * math.pi


@dataclass(frozen=True)
class SuiteReport:
    name: str
    samples: int
    max_residual: float
    tolerance: float
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return (f"{status} {self.name}: samples={self.samples} "
                f"max_residual={self.max_residual:.3e} tol={self.tolerance:.1e}{extra}")


def _report(name: str, samples: int, max_residual: float, tolerance: float,
            detail: str = "") -> SuiteReport:
    return SuiteReport(name, samples, max_residual, tolerance,
                       max_residual <= tolerance, detail)


def _random_triangle_sides(rng: random.Random) -> tuple[float, float, float]:
    while True:
        a = rng.uniform(0.1, 10.0)
        b = rng.uniform(0.1, 10.0)
        margin = 0.05 * max(a, b)
        lo, hi = abs(a - b) + margin, a + b - margin
        if lo < hi:
            return a, b, rng.uniform(lo, hi)


def suite_angle_sum(rng: random.Random, samples: int) -> SuiteReport:
    """Interior angles of macro-built triangles sum to pi."""
    from .plane import angle_at

    worst = 0.0
    for _ in range(samples):
        sides = _random_triangle_sides(rng)
        run = construct.run_macro("triangle_from_sides", *sides)
        a, b, c = run.objects
        total = (angle_at(b, a, c).radians + angle_at(a, b, c).radians
                 + angle_at(a, c, b).radians)
        worst = max(worst, abs(total - math.pi))
    return _report("angle-sum", samples, worst, 1e-9)


def suite_exterior_angle(rng: random.Random, samples: int) -> SuiteReport:
    """Exterior angles of a convex polygon total one full turn."""
    worst = 0.0
    for _ in range(samples):
        while True:
            n = rng.randint(3, 9)
            angles = sorted(rng.uniform(0, TWO_PI) for _ in range(n))
            if min(b - a for a, b in zip(angles, angles[1:])) >= 1e-3:
                break
        rx, ry = rng.uniform(1, 5), rng.uniform(1, 5)
        pts = [Point(rx * math.cos(t), ry * math.sin(t)) for t in angles]
        turn = 0.0
        for i in range(n):
            ax, ay = (pts[(i + 1) % n].x - pts[i].x, pts[(i + 1) % n].y - pts[i].y)
            bx, by = (pts[(i + 2) % n].x - pts[(i + 1) % n].x,
                      pts[(i + 2) % n].y - pts[(i + 1) % n].y)
            turn += math.atan2(ax * by - ay * bx, ax * bx + ay * by)
        worst = max(worst, abs(turn - TWO_PI))
    return _report("exterior-angle", samples, worst, 1e-9)


def suite_power_of_point(rng: random.Random, samples: int) -> SuiteReport:
    """Chord products (interior) and secant products vs tangent² (exterior)
    both equal |power of the point|."""
    worst = 0.0
    configs = max(1, samples // 20)
    for _ in range(configs):
        radius = rng.uniform(0.5, 10.0)
        center = Point(rng.uniform(-5, 5), rng.uniform(-5, 5))
        circle = Circle(center, radius)
        inner = Point(center.x + rng.uniform(-0.6, 0.6) * radius,
                      center.y + rng.uniform(-0.6, 0.6) * radius)
        outer_d = radius * rng.uniform(1.3, 3.0)
        theta = rng.uniform(0, TWO_PI)
        outer = Point(center.x + outer_d * math.cos(theta),
                      center.y + outer_d * math.sin(theta))
        power_in = abs(point_power(circle, inner))
        power_out = point_power(circle, outer)
        for _ in range(10):
            phi = rng.uniform(0, math.pi)
            probe = Point(inner.x + math.cos(phi), inner.y + math.sin(phi))
            chord = intersect_line_circle(line_through(inner, probe), circle)
            assert len(chord) == 2
            product = distance(inner, chord[0]) * distance(inner, chord[1])
            worst = max(worst, abs(product - power_in))
        max_tilt = math.asin(radius / outer_d) * 0.95
        for _ in range(10):
            phi = theta + math.pi + rng.uniform(-max_tilt, max_tilt)
            probe = Point(outer.x + math.cos(phi), outer.y + math.sin(phi))
            secant = intersect_line_circle(line_through(outer, probe), circle)
            if len(secant) != 2:
                continue
            product = distance(outer, secant[0]) * distance(outer, secant[1])
            worst = max(worst, abs(product - power_out))
    return _report("power-of-point", configs * 20, worst, 1e-7)


def suite_heron_height(rng: random.Random, samples: int) -> SuiteReport:
    """Heron's area equals half base times height, for every base."""
    worst = 0.0
    for _ in range(samples):
        t = mensura.TriangleSides(*_random_triangle_sides(rng))
        area = mensura.triangle_area(t)
        metrics = mensura.triangle_metrics(t)
        for side, height in zip((t.a, t.b, t.c), metrics.heights):
            worst = max(worst, abs(area - side * height / 2) / area)
    return _report("heron-height", samples, worst, 1e-9)


def suite_circumradius_height(rng: random.Random, samples: int) -> SuiteReport:
    """b*c = 2R*h_a on random triangles."""
    worst = 0.0
    for _ in range(samples):
        t = mensura.TriangleSides(*_random_triangle_sides(rng))
        m = mensura.triangle_metrics(t)
        lhs = t.b * t.c
        rhs = 2 * m.circumradius * m.heights[0]
        worst = max(worst, abs(lhs - rhs) / lhs)
    return _report("circumradius-height", samples, worst, 1e-9)


def suite_parallelogram_diagonals(rng: random.Random, samples: int) -> SuiteReport:
    """d1² + d2² = 2(a² + b²) holds, and fails when perturbed."""
    worst = 0.0
    for _ in range(samples):
        a = rng.uniform(0.1, 10.0)
        b = rng.uniform(0.1, 10.0)
        gamma = rng.uniform(0.1, math.pi - 0.1)
        d1 = math.sqrt(a * a + b * b - 2 * a * b * math.cos(gamma))
        d2 = math.sqrt(a * a + b * b + 2 * a * b * math.cos(gamma))
        if not mensura.parallelogram_diagonals_check(a, b, d1, d2):
            worst = max(worst, 1.0)
        if mensura.parallelogram_diagonals_check(a, b, d1 * 1.01, d2 * 1.01):
            worst = max(worst, 1.0)
    return _report("parallelogram-diagonals", samples, worst, 1e-12,
                   detail="residual 1.0 marks a verdict error")


def suite_archimedes(rng: random.Random, samples: int) -> SuiteReport:
    """Sphere : cylinder = 2/3 and sphere : cone = 4/9, any radius."""
    worst = 0.0
    for _ in range(samples):
        ratios = solids.archimedes_ratios(rng.uniform(0.1, 100.0))
        worst = max(worst,
                    abs(ratios.cylinder_surface_ratio - 2 / 3),
                    abs(ratios.cylinder_volume_ratio - 2 / 3),
                    abs(ratios.cone_surface_ratio - 4 / 9),
                    abs(ratios.cone_volume_ratio - 4 / 9))
    return _report("archimedes", samples, worst, 1e-12)


def suite_dms_roundtrip(rng: random.Random, samples: int) -> SuiteReport:
    """to-DMS then from-DMS reproduces the angle within half a second."""
    worst = 0.0
    arcsec = math.radians(1.0 / 3600.0)
    for _ in range(samples):
        radians = rng.uniform(0, TWO_PI)
        d, m, s = radians_to_dms(radians)
        back = dms_to_radians(d, m, s).radians
        worst = max(worst, abs(back - radians) / arcsec)
    return _report("dms-roundtrip", samples, worst, 0.5,
                   detail="residual in arc-seconds")


def _interval_tree(rng: random.Random, depth: int) -> tuple[float, Interval, Decimal]:
    if depth == 0 or rng.random() < 0.3:
        value = rng.uniform(-10.0, 10.0)
        # Decimal(float) is the exact binary value: the reference must track
        # the same leaf the float and interval backends see.
        return value, Interval.point(value), Decimal(value)
    op = rng.choice("+-*/s")
    if op == "s":
        f, i, d = _interval_tree(rng, depth - 1)
        if f < 0:
            f, i, d = -f, -i, -d
        return math.sqrt(f), i.sqrt(), max(d, Decimal(0)).sqrt()
    fl, il, dl = _interval_tree(rng, depth - 1)
    fr, ir, dr = _interval_tree(rng, depth - 1)
    if op == "+":
        return fl + fr, il + ir, dl + dr
    if op == "-":
        return fl - fr, il - ir, dl - dr
    if op == "*":
        return fl * fr, il * ir, dl * dr
    if abs(fr) < 1e-3 or ir.lo <= 0 <= ir.hi:
        raise ZeroDivisionError
    return fl / fr, il / ir, dl / dr


def suite_interval_enclosure(rng: random.Random, samples: int) -> SuiteReport:
    """Backend B encloses both the float value and the 50-digit reference."""
    getcontext().prec = 50
    worst = 0.0
    produced = 0
    while produced < samples:
        try:
            f, interval, exact = _interval_tree(rng, 4)
        except ZeroDivisionError:
            continue
        produced += 1
        if not interval.contains(f):
            worst = max(worst, min(abs(f - interval.lo), abs(f - interval.hi)), 1e-300)
        low, high = Decimal(interval.lo), Decimal(interval.hi)
        if not low <= exact <= high:
            escape = min(abs(exact - low), abs(exact - high))
            worst = max(worst, float(escape), 1e-300)
    return _report("interval-enclosure", samples, worst, 0.0,
                   detail="any escape from the enclosure is a failure")


_MACRO_FUZZERS: dict[str, Callable[[random.Random], tuple]] = {}


def _fuzzer(name: str):
    def register(fn):
        _MACRO_FUZZERS[name] = fn
        return fn
    return register


def _fuzz_point(rng: random.Random) -> Point:
    return Point(rng.uniform(0.1, 10.0), rng.uniform(0.1, 10.0))


def _fuzz_angle_triple(rng: random.Random) -> tuple[Point, Point, Point]:
    o = _fuzz_point(rng)
    theta = rng.uniform(0, TWO_PI)
    spread = rng.uniform(0.1, math.pi - 0.1)
    r1, r2 = rng.uniform(0.5, 5.0), rng.uniform(0.5, 5.0)
    a = Point(o.x + r1 * math.cos(theta), o.y + r1 * math.sin(theta))
    b = Point(o.x + r2 * math.cos(theta + spread), o.y + r2 * math.sin(theta + spread))
    return a, o, b


def _fuzz_line(rng: random.Random):
    while True:
        p, q = _fuzz_point(rng), _fuzz_point(rng)
        if distance(p, q) > 0.5:
            return line_through(p, q)


def _fuzz_off_line_point(rng: random.Random, line) -> Point:
    from .plane import distance_point_line

    while True:
        p = _fuzz_point(rng)
        if distance_point_line(p, line) > 0.1:
            return p


@_fuzzer("triangle_from_sides")
def _fz_triangle(rng):
    return _random_triangle_sides(rng)


@_fuzzer("copy_angle")
def _fz_copy_angle(rng):
    a, o, b = _fuzz_angle_triple(rng)
    target_o = _fuzz_point(rng)
    phi = rng.uniform(0, TWO_PI)
    target_m = Point(target_o.x + math.cos(phi), target_o.y + math.sin(phi))
    return a, o, b, target_o, target_m


@_fuzzer("bisect_angle")
def _fz_bisect(rng):
    return _fuzz_angle_triple(rng)


@_fuzzer("erect_perpendicular")
def _fz_erect(rng):
    line = _fuzz_line(rng)
    dx, dy = line.direction()
    base = Point(-line.c * line.a, -line.c * line.b)
    t = rng.uniform(-5, 5)
    return Point(base.x + t * dx, base.y + t * dy), line


@_fuzzer("drop_perpendicular")
def _fz_drop(rng):
    line = _fuzz_line(rng)
    return _fuzz_off_line_point(rng, line), line


@_fuzzer("perpendicular_bisector")
def _fz_pb(rng):
    while True:
        a, b = _fuzz_point(rng), _fuzz_point(rng)
        if distance(a, b) > 0.2:
            return a, b


@_fuzzer("parallel_through")
def _fz_parallel(rng):
    line = _fuzz_line(rng)
    return _fuzz_off_line_point(rng, line), line


@_fuzzer("divide_segment")
def _fz_divide(rng):
    a, b = _fz_pb(rng)
    return a, b, rng.randint(2, 7)


@_fuzzer("divide_segment_ratio")
def _fz_divide_ratio(rng):
    a, b = _fz_pb(rng)
    weights = [rng.uniform(0.2, 5.0) for _ in range(rng.randint(2, 4))]
    return (a, b, *weights)


@_fuzzer("fourth_proportional")
def _fz_fourth(rng):
    return (rng.uniform(0.1, 10.0) for _ in range(3))


@_fuzzer("geometric_mean")
def _fz_gm(rng):
    return rng.uniform(0.1, 10.0), rng.uniform(0.1, 10.0)


@_fuzzer("geometric_mean_chord")
def _fz_gmc(rng):
    return rng.uniform(0.1, 10.0), rng.uniform(0.1, 10.0)


@_fuzzer("golden_section")
def _fz_golden(rng):
    return _fz_pb(rng)


@_fuzzer("tangents_from_point")
def _fz_tangents(rng):
    circle = Circle(_fuzz_point(rng), rng.uniform(0.2, 5.0))
    theta = rng.uniform(0, TWO_PI)
    if rng.random() < 0.2:
        d = circle.radius  # exactly on the circle
    else:
        d = circle.radius * rng.uniform(1.1, 4.0)
    return (Point(circle.center.x + d * math.cos(theta),
                  circle.center.y + d * math.sin(theta)), circle)


@_fuzzer("common_tangents")
def _fz_common(rng):
    r1 = rng.uniform(0.3, 5.0)
    r2 = rng.uniform(0.3, 5.0)
    kind = rng.randrange(5)
    if kind == 0:
        d = r1 + r2 + rng.uniform(0.3, 4.0)
    elif kind == 1:
        d = r1 + r2
    elif kind == 2:
        lo, hi = abs(r1 - r2) + 0.1 * max(r1, r2), r1 + r2 - 0.1 * max(r1, r2)
        d = rng.uniform(lo, hi) if lo < hi else r1 + r2 + 1.0
    elif kind == 3:
        if abs(r1 - r2) < 0.2:
            r1 = r2 + rng.uniform(0.3, 2.0)
        d = abs(r1 - r2)
    else:
        if abs(r1 - r2) < 0.4:
            r1 = r2 + rng.uniform(0.5, 2.0)
        d = rng.uniform(0.05, abs(r1 - r2) - 0.2) if abs(r1 - r2) > 0.3 else 0.0
    center = _fuzz_point(rng)
    theta = rng.uniform(0, TWO_PI)
    other = Point(center.x + d * math.cos(theta), center.y + d * math.sin(theta))
    return Circle(center, r1), Circle(other, r2)


@_fuzzer("arc_containing_angle")
def _fz_arc(rng):
    a, b = _fz_pb(rng)
    return a, b, rng.uniform(5.0, 175.0)


@_fuzzer("inscribe_regular")
def _fz_inscribe(rng):
    n = rng.choice((3, 4, 5, 6, 8, 10, 12, 15, 16, 20, 24, 30))
    return n, Circle(_fuzz_point(rng), rng.uniform(0.1, 10.0))


def suite_macro_postconditions(rng: random.Random, samples: int) -> SuiteReport:
    """Fuzz every macro; each run self-checks its postconditions."""
    per_macro = max(1, samples // len(_MACRO_FUZZERS))
    worst = 0.0
    failures: list[str] = []
    total = 0
    for name, fuzzer in _MACRO_FUZZERS.items():
        for _ in range(per_macro):
            total += 1
            try:
                run = construct.run_macro(name, *fuzzer(rng))
                if run.workspace.macro_residuals:
                    worst = max(worst, max(run.workspace.macro_residuals))
            except GeometryError as exc:
                failures.append(f"{name}: {exc}")
                worst = max(worst, 1.0)
    detail = f"{per_macro} per macro"
    if failures:
        detail += "; first failure: " + failures[0]
    return _report("macro-postconditions", total, worst, 1e-7, detail)


SUITES: dict[str, Callable[[random.Random, int], SuiteReport]] = {
    "angle-sum": suite_angle_sum,
    "exterior-angle": suite_exterior_angle,
    "power-of-point": suite_power_of_point,
    "heron-height": suite_heron_height,
    "circumradius-height": suite_circumradius_height,
    "parallelogram-diagonals": suite_parallelogram_diagonals,
    "archimedes": suite_archimedes,
    "dms-roundtrip": suite_dms_roundtrip,
    "interval-enclosure": suite_interval_enclosure,
    "macro-postconditions": suite_macro_postconditions,
}

DEFAULT_SAMPLES = {
    "macro-postconditions": 10_200,
}


def run_suite(name: str, seed: int = 0, samples: int | None = None) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; available: {', '.join(sorted(SUITES))}")
    count = samples if samples is not None else DEFAULT_SAMPLES.get(name, 10_000)
    return SUITES[name](random.Random(seed), count)


def run_all(seed: int = 0, samples: int | None = None) -> list[SuiteReport]:
    return [run_suite(name, seed, samples) for name in SUITES]
