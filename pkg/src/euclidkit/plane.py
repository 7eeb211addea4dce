"""Plane primitives, intersections, and metric predicates.

Lines are kept in normalized implicit form a*x + b*y + c = 0 with
a**2 + b**2 = 1 and the first nonzero of (a, b) positive, so incidence is a
single residual test and equal lines have equal coefficients.  Multi-point
intersection results are always ordered by (x, then y) ascending.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DegenerateInputError, DomainError
from .scalar import DEFAULT_TOLERANCE, TWO_PI, AngleMeasure, Tolerance

_COEFF_ZERO = 1e-12


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise DomainError(f"point coordinates must be finite: ({self.x!r}, {self.y!r})")

    def __iter__(self):
        yield self.x
        yield self.y


@dataclass(frozen=True)
class Line:
    """Locus a*x + b*y + c = 0; coefficients normalized on construction."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        norm = math.hypot(self.a, self.b)
        if norm < _COEFF_ZERO or not math.isfinite(norm):
            raise DegenerateInputError("line coefficients (a, b) must not both vanish")
        a, b, c = self.a / norm, self.b / norm, self.c / norm
        if abs(a) <= _COEFF_ZERO:
            a = 0.0
            if b < 0:
                b, c = -b, -c
        elif a < 0:
            a, b, c = -a, -b, -c
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)

    def evaluate(self, p: Point) -> float:
        """Signed distance of p from the line (coefficients are unit-normal)."""
        return self.a * p.x + self.b * p.y + self.c

    def direction(self) -> tuple[float, float]:
        """A unit vector along the line."""
        return (-self.b, self.a)

    def contains(self, p: Point, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
        return abs(self.evaluate(p)) <= tol.window(max(abs(p.x), abs(p.y), 1.0))


@dataclass(frozen=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self):
        if not (self.radius > 0 and math.isfinite(self.radius)):
            raise DomainError(f"circle radius must be positive, got {self.radius!r}")

    def point_at(self, angle: float) -> Point:
        return Point(self.center.x + self.radius * math.cos(angle),
                     self.center.y + self.radius * math.sin(angle))

    def contains(self, p: Point, tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
        return abs(distance(p, self.center) - self.radius) <= tol.window(self.radius)


@dataclass(frozen=True)
class Arc:
    """Circular arc: sweep runs counterclockwise from start_angle."""

    circle: Circle
    start_angle: AngleMeasure
    sweep: AngleMeasure

    def __post_init__(self):
        if not 0 < self.sweep.radians <= TWO_PI + 1e-12:
            raise DomainError(f"arc sweep must lie in (0, 2*pi], got {self.sweep.radians!r}")

    def point_at(self, t: float) -> Point:
        """Point at parameter t in [0, 1] along the arc."""
        return self.circle.point_at(self.start_angle.radians + t * self.sweep.radians)


GeometricObject = Point | Line | Circle | Arc


def distance(p: Point, q: Point) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def midpoint(p: Point, q: Point) -> Point:
    return Point((p.x + q.x) / 2, (p.y + q.y) / 2)


def angle_at(a: Point, o: Point, b: Point) -> AngleMeasure:
    """Unsigned angle AOB in [0, pi]."""
    ax, ay = a.x - o.x, a.y - o.y
    bx, by = b.x - o.x, b.y - o.y
    na, nb = math.hypot(ax, ay), math.hypot(bx, by)
    if na == 0 or nb == 0:
        raise DegenerateInputError("angle vertex coincides with a side endpoint")
    cross = ax * by - ay * bx
    dot = ax * bx + ay * by
    return AngleMeasure(math.atan2(abs(cross), dot))


def line_through(p: Point, q: Point, tol: Tolerance = DEFAULT_TOLERANCE) -> Line:
    if distance(p, q) <= tol.abs_eps:
        raise DegenerateInputError(f"cannot draw a line through coincident points {p} and {q}")
    # Normal is the segment direction rotated a quarter turn.
    return Line(q.y - p.y, p.x - q.x, -(q.y - p.y) * p.x - (p.x - q.x) * p.y)


class LineRelation(enum.Enum):
    PARALLEL = "parallel"
    COINCIDENT = "coincident"


def intersect_line_line(l1: Line, l2: Line,
                        tol: Tolerance = DEFAULT_TOLERANCE) -> Point | LineRelation:
    cross = l1.a * l2.b - l1.b * l2.a
    if abs(cross) <= tol.abs_eps:
        aligned = l1.a * l2.a + l1.b * l2.b
        offset = l1.c - l2.c if aligned > 0 else l1.c + l2.c
        if abs(offset) <= tol.abs_eps:
            return LineRelation.COINCIDENT
        return LineRelation.PARALLEL
    x = (l1.b * l2.c - l2.b * l1.c) / cross
    y = (l2.a * l1.c - l1.a * l2.c) / cross
    return Point(x, y)


def _ordered(points: list[Point]) -> list[Point]:
    return sorted(points, key=lambda p: (p.x, p.y))


def foot_of_perpendicular(p: Point, l: Line) -> Point:
    d = l.evaluate(p)
    return Point(p.x - d * l.a, p.y - d * l.b)


def distance_point_line(p: Point, l: Line) -> float:
    return abs(l.evaluate(p))


def reflect_point(p: Point, l: Line) -> Point:
    d = l.evaluate(p)
    return Point(p.x - 2 * d * l.a, p.y - 2 * d * l.b)


def intersect_line_circle(l: Line, c: Circle,
                          tol: Tolerance = DEFAULT_TOLERANCE) -> list[Point]:
    """0, 1, or 2 intersection points by the distance-vs-radius trichotomy.

    Tangency is detected inside the window |d - R| <= max(abs_eps, rel_eps*R),
    in which case the single returned point is the foot of the perpendicular.
    """
    d = distance_point_line(c.center, l)
    window = tol.window(c.radius)
    foot = foot_of_perpendicular(c.center, l)
    if abs(d - c.radius) <= window:
        return [foot]
    if d > c.radius:
        return []
    half = math.sqrt(c.radius * c.radius - d * d)
    dx, dy = l.direction()
    return _ordered([Point(foot.x - half * dx, foot.y - half * dy),
                     Point(foot.x + half * dx, foot.y + half * dy)])


class CircleRelation(enum.Enum):
    EXTERNAL_DISJOINT = "external-disjoint"
    EXTERNAL_TANGENT = "external-tangent"
    INTERSECTING = "intersecting"
    INTERNAL_TANGENT = "internal-tangent"
    INTERNAL_DISJOINT = "internal-disjoint"
    CONCENTRIC = "concentric"


def intersect_circle_circle(c1: Circle, c2: Circle,
                            tol: Tolerance = DEFAULT_TOLERANCE
                            ) -> tuple[CircleRelation, list[Point]]:
    """Five-way case analysis of d against R + R1 and |R - R1|."""
    d = distance(c1.center, c2.center)
    r_sum = c1.radius + c2.radius
    r_diff = abs(c1.radius - c2.radius)
    window = tol.window(max(c1.radius, c2.radius))
    if d <= window:
        if r_diff <= window:
            raise DegenerateInputError("circles coincide")
        return CircleRelation.CONCENTRIC, []
    ux = (c2.center.x - c1.center.x) / d
    uy = (c2.center.y - c1.center.y) / d
    if abs(d - r_sum) <= window:
        return CircleRelation.EXTERNAL_TANGENT, [
            Point(c1.center.x + c1.radius * ux, c1.center.y + c1.radius * uy)]
    if d > r_sum:
        return CircleRelation.EXTERNAL_DISJOINT, []
    if abs(d - r_diff) <= window:
        sign = 1.0 if c1.radius >= c2.radius else -1.0
        return CircleRelation.INTERNAL_TANGENT, [
            Point(c1.center.x + sign * c1.radius * ux,
                  c1.center.y + sign * c1.radius * uy)]
    if d < r_diff:
        return CircleRelation.INTERNAL_DISJOINT, []
    # Proper intersection: both points are mirror images across the line of
    # centers, up to floating-point error.
    along = (d * d + c1.radius * c1.radius - c2.radius * c2.radius) / (2 * d)
    half_sq = c1.radius * c1.radius - along * along
    half = math.sqrt(max(half_sq, 0.0))
    bx = c1.center.x + along * ux
    by = c1.center.y + along * uy
    return CircleRelation.INTERSECTING, _ordered([
        Point(bx - half * uy, by + half * ux),
        Point(bx + half * uy, by - half * ux)])


def point_power(c: Circle, p: Point) -> float:
    """d**2 - R**2: negative inside, zero on, positive outside the circle."""
    d = distance(p, c.center)
    return d * d - c.radius * c.radius
