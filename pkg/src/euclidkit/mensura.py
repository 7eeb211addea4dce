"""Plane mensuration: triangle solver, polygon and circle-part areas, the
polygon-doubling pi engine, the Apollonius circle, and Pythagorean triples.

Degree-based entry points convert at the boundary; everything internal is in
radians.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

from .errors import DegenerateInputError, DomainError
from .plane import Circle, Line, Point, distance, line_through, midpoint
from .scalar import DEFAULT_TOLERANCE, TWO_PI, AngleMeasure, Tolerance

AngleClass = Literal["acute", "right", "obtuse"]


@dataclass(frozen=True)
class TriangleSides:
    """A valid side triple: positive, each side less than the sum of the others."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name, side in (("a", self.a), ("b", self.b), ("c", self.c)):
            if not (side > 0 and math.isfinite(side)):
                raise DomainError(f"side {name} must be positive and finite, got {side!r}")
        if (self.a >= self.b + self.c or self.b >= self.a + self.c
                or self.c >= self.a + self.b):
            raise DomainError(
                f"triangle inequality violated for sides ({self.a}, {self.b}, {self.c})")

    @property
    def semiperimeter(self) -> float:
        return (self.a + self.b + self.c) / 2


def triangle_area(t: TriangleSides) -> float:
    """Heron: S = sqrt(p (p-a) (p-b) (p-c))."""
    p = t.semiperimeter
    return math.sqrt(p * (p - t.a) * (p - t.b) * (p - t.c))


def _angle_class(opposite_sq: float, others_sq: float, tol: Tolerance) -> AngleClass:
    if abs(opposite_sq - others_sq) <= tol.window(others_sq):
        return "right"
    return "obtuse" if opposite_sq > others_sq else "acute"


@dataclass(frozen=True)
class BisectorSplit:
    """Lengths the internal bisector from a vertex cuts on the opposite side.

    The two pieces are ordered by the remaining vertices in (A, B, C) order:
    for the bisector from B onto side b = AC, ``toward_first`` is the piece
    adjacent to A and ``toward_second`` the piece adjacent to C.  Each piece
    is proportional to the triangle side meeting it there.
    """

    toward_first: float
    toward_second: float


@dataclass(frozen=True)
class TriangleMetrics:
    sides: TriangleSides
    area: float
    semiperimeter: float
    projection_c_on_a: float
    projection_b_on_a: float
    heights: tuple[float, float, float]
    medians: tuple[float, float, float]
    angle_classes: tuple[AngleClass, AngleClass, AngleClass]
    circumradius: float
    inradius: float
    bisector_splits: tuple[BisectorSplit, BisectorSplit, BisectorSplit]


def triangle_metrics(t: TriangleSides, tol: Tolerance = DEFAULT_TOLERANCE) -> TriangleMetrics:
    """All the classical derived measures of a triangle given by sides.

    Projections are of sides c and b onto side a (the segments the foot of
    h_a cuts, found from b² = a² + c² − 2·a·c′); the circumradius comes from
    b·c = 2R·h_a; the inradius from S = p·r.
    """
    a, b, c = t.a, t.b, t.c
    area = triangle_area(t)
    p = t.semiperimeter

    c_proj = (a * a + c * c - b * b) / (2 * a)
    b_proj = (a * a + b * b - c * c) / (2 * a)

    h_a = 2 * area / a
    h_b = 2 * area / b
    h_c = 2 * area / c

    m_a = 0.5 * math.sqrt(2 * b * b + 2 * c * c - a * a)
    m_b = 0.5 * math.sqrt(2 * a * a + 2 * c * c - b * b)
    m_c = 0.5 * math.sqrt(2 * a * a + 2 * b * b - c * c)

    classes = (
        _angle_class(a * a, b * b + c * c, tol),
        _angle_class(b * b, a * a + c * c, tol),
        _angle_class(c * c, a * a + b * b, tol),
    )

    circumradius = b * c / (2 * h_a)
    inradius = area / p

    splits = (
        BisectorSplit(toward_first=a * c / (b + c), toward_second=a * b / (b + c)),
        BisectorSplit(toward_first=b * c / (a + c), toward_second=b * a / (a + c)),
        BisectorSplit(toward_first=c * b / (a + b), toward_second=c * a / (a + b)),
    )

    return TriangleMetrics(
        sides=t, area=area, semiperimeter=p,
        projection_c_on_a=c_proj, projection_b_on_a=b_proj,
        heights=(h_a, h_b, h_c), medians=(m_a, m_b, m_c),
        angle_classes=classes, circumradius=circumradius, inradius=inradius,
        bisector_splits=splits,
    )


@dataclass(frozen=True)
class RightTriangleSolution:
    """Right triangle recovered from the two segments of its hypotenuse."""

    hypotenuse: float
    leg_adjacent_c: float
    leg_adjacent_b: float
    height: float


def right_triangle_from_projections(b_proj: float, c_proj: float) -> RightTriangleSolution:
    """Given the hypotenuse segments b' and c': a = b'+c', c = sqrt(a c'),
    b = sqrt(a b'), h = sqrt(b' c')."""
    if not (b_proj > 0 and c_proj > 0):
        raise DomainError("hypotenuse segments must be positive")
    a = b_proj + c_proj
    return RightTriangleSolution(
        hypotenuse=a,
        leg_adjacent_c=math.sqrt(a * c_proj),
        leg_adjacent_b=math.sqrt(a * b_proj),
        height=math.sqrt(b_proj * c_proj),
    )


def parallelogram_diagonals_check(a: float, b: float, d1: float, d2: float,
                                  tol: Tolerance = DEFAULT_TOLERANCE) -> bool:
    """True iff d1² + d2² = 2(a² + b²) within tolerance."""
    if min(a, b, d1, d2) <= 0:
        raise DomainError("sides and diagonals must be positive")
    lhs = d1 * d1 + d2 * d2
    rhs = 2 * (a * a + b * b)
    return abs(lhs - rhs) <= tol.window(max(lhs, rhs))


def _require_positive(params: dict[str, float]) -> None:
    for key, value in params.items():
        if not (value > 0 and math.isfinite(value)):
            raise DomainError(f"parameter {key!r} must be positive, got {value!r}")


def polygon_area(kind: str, **params: float) -> float:
    """Closed-form areas for the plane figures, dispatched by shape keyword.

    Kinds and their named parameters:
      rectangle(base, height) · parallelogram(base, height)
      triangle(base, height) · rhombus(d1, d2) · trapezoid(base1, base2, height)
      regular(n, side) · circumscribed(perimeter, inradius)
    """
    _require_positive(params)
    try:
        if kind == "rectangle" or kind == "parallelogram":
            return params.pop("base") * params.pop("height")
        if kind == "triangle":
            return params.pop("base") * params.pop("height") / 2
        if kind == "rhombus":
            return params.pop("d1") * params.pop("d2") / 2
        if kind == "trapezoid":
            return (params.pop("base1") + params.pop("base2")) / 2 * params.pop("height")
        if kind == "regular":
            n = int(params.pop("n"))
            if n < 3:
                raise DomainError(f"regular polygon needs n >= 3, got {n}")
            side = params.pop("side")
            apothem = side / (2 * math.tan(math.pi / n))
            return n * side * apothem / 2
        if kind == "circumscribed":
            return params.pop("perimeter") * params.pop("inradius") / 2
    except KeyError as missing:
        raise DomainError(f"shape {kind!r} is missing parameter {missing}") from None
    raise DomainError(f"unknown shape kind {kind!r}")


def regular_polygon_interior_angle(n: int) -> AngleMeasure:
    """Interior angle of the regular n-gon: 180°(n-2)/n."""
    if n < 3:
        raise DomainError(f"polygon needs n >= 3, got {n}")
    return AngleMeasure.from_degrees(180.0 * (n - 2) / n)


def regular_polygon_central_angle(n: int) -> AngleMeasure:
    if n < 3:
        raise DomainError(f"polygon needs n >= 3, got {n}")
    return AngleMeasure.from_degrees(360.0 / n)


@dataclass(frozen=True)
class PiRow:
    n: int
    side: float
    perimeter: float


@dataclass
class PiTable:
    rows: list[PiRow]

    def __post_init__(self):
        for prev, cur in zip(self.rows, self.rows[1:]):
            if cur.n != 2 * prev.n:
                raise DomainError("polygon doubling must double n each row")
            if cur.perimeter <= prev.perimeter:
                raise DomainError("inscribed perimeters must increase strictly")

    @property
    def final(self) -> PiRow:
        return self.rows[-1]


_START_SIDE_SQ = {3: 3.0, 4: 2.0, 6: 1.0}

MAX_NAIVE_ROUNDS = 24


def pi_doubling_table(rounds: int, stabilized: bool = False, start_n: int = 6,
                      max_rounds: int = MAX_NAIVE_ROUNDS) -> PiTable:
    """Inscribed-polygon doubling on the unit circle.

    Naive recurrence: a_{2n}² = 2 − 2·sqrt(1 − a_n²/4).  The ``stabilized``
    flag switches to the algebraically equal, cancellation-free form
    a_{2n}² = a_n² / (2 + 2·sqrt(1 − a_n²/4)).  Rounds are capped (default
    24).  The naive form loses digits to cancellation and past about round
    12 it can no longer even produce a strictly increasing table; that
    breakdown raises a DomainError pointing at ``stabilized=True``.
    """
    if rounds < 0:
        raise DomainError(f"rounds must be >= 0, got {rounds}")
    if rounds > max_rounds:
        raise DomainError(
            f"rounds={rounds} exceeds the cap {max_rounds}; pass max_rounds explicitly "
            "to exceed it (the naive recurrence is numerically meaningless out there)")
    if start_n not in _START_SIDE_SQ:
        raise DomainError(f"start_n must be one of {sorted(_START_SIDE_SQ)}, got {start_n}")
    side_sq = _START_SIDE_SQ[start_n]
    n = start_n
    rows = [PiRow(n, math.sqrt(side_sq), n * math.sqrt(side_sq))]
    for _ in range(rounds):
        root = math.sqrt(1 - side_sq / 4)
        if stabilized:
            side_sq = side_sq / (2 + 2 * root)
        else:
            side_sq = 2 - 2 * root
        n *= 2
        side = math.sqrt(side_sq)
        rows.append(PiRow(n, side, n * side))
    try:
        return PiTable(rows)
    except DomainError as exc:
        raise DomainError(
            f"{exc}: the naive doubling recurrence has exhausted its precision "
            f"at n={n}; rerun with stabilized=True") from None


def _check_angle(angle: float, upper: float = TWO_PI) -> float:
    if not (0 < angle <= upper + 1e-12):
        raise DomainError(f"angle must lie in (0, {upper:.6g}], got {angle!r}")
    return float(angle)


def arc_length(radius: float, angle: float) -> float:
    """s = alpha * R for alpha in radians."""
    if radius <= 0:
        raise DomainError(f"radius must be positive, got {radius!r}")
    return _check_angle(angle) * radius


def arc_length_degrees(radius: float, degrees: float) -> float:
    return arc_length(radius, math.radians(degrees))


def radius_from_arc(s: float, angle: float) -> float:
    """Solve s = alpha * R for the radius."""
    if s <= 0:
        raise DomainError(f"arc length must be positive, got {s!r}")
    return s / _check_angle(angle)


def angle_from_arc(s: float, radius: float) -> AngleMeasure:
    if s <= 0 or radius <= 0:
        raise DomainError("arc length and radius must be positive")
    return AngleMeasure(s / radius)


def sector_area(radius: float, angle: float) -> float:
    """Sector = arc length times half the radius = alpha R² / 2."""
    return arc_length(radius, angle) * radius / 2


def chord_and_sagitta(radius: float, angle: float) -> tuple[float, float]:
    """Chord b = 2R sin(alpha/2) and sagitta h = R(1 - cos(alpha/2))."""
    if radius <= 0:
        raise DomainError(f"radius must be positive, got {radius!r}")
    alpha = _check_angle(angle)
    return 2 * radius * math.sin(alpha / 2), radius * (1 - math.cos(alpha / 2))


def radius_from_chord_sagitta(b: float, h: float) -> float:
    """Solve (b/2)² + (r-h)² = r² for r."""
    if b <= 0 or h <= 0:
        raise DomainError("chord and sagitta must be positive")
    return (b * b / 4 + h * h) / (2 * h)


SegmentMethod = Literal["exact", "approx1", "approx2"]


def segment_area(radius: float, angle: float, method: SegmentMethod = "exact") -> float:
    """Circular-segment area: exactly (sector minus triangle), or by the two
    approximations 2/3·b·h and 2/3·b·h + h³/(2b)."""
    if radius <= 0:
        raise DomainError(f"radius must be positive, got {radius!r}")
    alpha = _check_angle(angle)
    if alpha >= TWO_PI - 1e-12:
        raise DomainError("segment angle must be strictly less than a full turn")
    if method == "exact":
        if alpha < math.pi:
            triangle = radius * radius * math.sin(alpha) / 2
            return sector_area(radius, alpha) - triangle
        # Major segment: whole disc minus the complementary minor segment.
        return math.pi * radius * radius - segment_area(radius, TWO_PI - alpha, "exact")
    b, h = chord_and_sagitta(radius, alpha)
    base = 2.0 / 3.0 * b * h
    if method == "approx1":
        return base
    if method == "approx2":
        return base + h ** 3 / (2 * b)
    raise DomainError(f"unknown segment-area method {method!r}")


def apollonius_circle(a: Point, b: Point, m: float, n: float,
                      tol: Tolerance = DEFAULT_TOLERANCE) -> Circle | Line:
    """Locus of points with distance ratio m:n to A and B: a circle on the
    internal/external division points as diameter, or the perpendicular
    bisector when m = n."""
    if m <= 0 or n <= 0:
        raise DomainError(f"ratio parts must be positive, got m={m!r}, n={n!r}")
    if distance(a, b) <= tol.abs_eps:
        raise DegenerateInputError("base points of the ratio locus coincide")
    if abs(m - n) <= tol.rel_eps * max(m, n):
        mid = midpoint(a, b)
        direction = line_through(a, b).direction()
        # Perpendicular bisector: normal along AB through the midpoint.
        other = Point(mid.x - direction[1], mid.y + direction[0])
        return line_through(mid, other)
    t_in = m / (m + n)
    t_out = m / (m - n)
    c_in = Point(a.x + t_in * (b.x - a.x), a.y + t_in * (b.y - a.y))
    c_out = Point(a.x + t_out * (b.x - a.x), a.y + t_out * (b.y - a.y))
    center = midpoint(c_in, c_out)
    return Circle(center, distance(c_in, c_out) / 2)


def pythagorean_triple(a: int, b: int) -> tuple[int, int, int]:
    """(2ab, a² − b², a² + b²): an exact integer right triangle."""
    if not (isinstance(a, int) and isinstance(b, int)):
        raise DomainError("triple generators must be integers")
    if not a > b >= 1:
        raise DomainError(f"need a > b >= 1, got a={a}, b={b}")
    return 2 * a * b, a * a - b * b, a * a + b * b
