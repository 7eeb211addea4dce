import math
import random

import pytest

from euclidkit.errors import DegenerateInputError, DomainError
from euclidkit.plane import (
    Arc,
    Circle,
    CircleRelation,
    Line,
    LineRelation,
    Point,
    angle_at,
    distance,
    distance_point_line,
    foot_of_perpendicular,
    intersect_circle_circle,
    intersect_line_circle,
    intersect_line_line,
    line_through,
    midpoint,
    point_power,
    reflect_point,
)
from euclidkit.scalar import AngleMeasure


class TestPrimitives:
    def test_point_rejects_non_finite(self):
        with pytest.raises(DomainError):
            Point(math.inf, 0.0)

    def test_line_normalization_and_sign(self):
        line = Line(-2.0, 2.0, 4.0)
        assert line.a == pytest.approx(1 / math.sqrt(2))
        assert line.b == pytest.approx(-1 / math.sqrt(2))
        assert math.hypot(line.a, line.b) == pytest.approx(1.0, abs=1e-15)

    def test_line_vertical_sign_convention(self):
        line = Line(0.0, -3.0, 6.0)
        assert line.a == 0.0 and line.b == 1.0 and line.c == -2.0

    def test_degenerate_line(self):
        with pytest.raises(DegenerateInputError):
            Line(0.0, 0.0, 1.0)

    def test_circle_radius_positive(self):
        with pytest.raises(DomainError):
            Circle(Point(0, 0), 0.0)

    def test_arc_sweep_range(self):
        circle = Circle(Point(0, 0), 1.0)
        Arc(circle, AngleMeasure(0.0), AngleMeasure(2 * math.pi))
        with pytest.raises(DomainError):
            Arc(circle, AngleMeasure(0.0), AngleMeasure(0.0))


class TestLineThrough:
    def test_x_axis(self):
        line = line_through(Point(0, 0), Point(1, 0))
        assert (line.a, line.b, line.c) == (0.0, 1.0, 0.0)

    def test_y_axis(self):
        line = line_through(Point(0, 0), Point(0, 1))
        assert (line.a, line.b, line.c) == (1.0, 0.0, 0.0)

    def test_diagonal_normalized(self):
        p, q = Point(0, 0), Point(1, 1)
        line = line_through(p, q)
        # Sign convention makes a positive; both points satisfy the equation.
        assert line.a == pytest.approx(1 / math.sqrt(2))
        assert line.b == pytest.approx(-1 / math.sqrt(2))
        assert abs(line.evaluate(p)) < 1e-12
        assert abs(line.evaluate(q)) < 1e-12

    def test_coincident_points_rejected(self):
        with pytest.raises(DegenerateInputError):
            line_through(Point(1, 1), Point(1, 1))


class TestLineLine:
    def test_axes_meet_at_origin(self):
        result = intersect_line_line(Line(1, 0, 0), Line(0, 1, 0))
        assert result == Point(0.0, 0.0)

    def test_parallel(self):
        result = intersect_line_line(Line(0, 1, 0), Line(0, 1, -1))
        assert result is LineRelation.PARALLEL

    def test_coincident(self):
        l1 = line_through(Point(0, 0), Point(1, 1))
        l2 = line_through(Point(2, 2), Point(5, 5))
        assert intersect_line_line(l1, l2) is LineRelation.COINCIDENT

    def test_hand_solved_system(self):
        # y = x and y = -x + 2 meet at (1, 1).
        l1 = line_through(Point(0, 0), Point(1, 1))
        l2 = line_through(Point(0, 2), Point(2, 0))
        result = intersect_line_line(l1, l2)
        assert result.x == pytest.approx(1.0, abs=1e-12)
        assert result.y == pytest.approx(1.0, abs=1e-12)


class TestLineCircle:
    unit = Circle(Point(0, 0), 1.0)

    def test_diameter(self):
        points = intersect_line_circle(Line(0, 1, 0), self.unit)
        assert points == [Point(-1.0, 0.0), Point(1.0, 0.0)]

    def test_tangent_single_point(self):
        points = intersect_line_circle(Line(0, 1, -1), self.unit)
        assert points == [Point(0.0, 1.0)]

    def test_secant_outside(self):
        assert intersect_line_circle(Line(0, 1, -2), self.unit) == []

    def test_ordering_is_xy_ascending(self):
        line = line_through(Point(-2, -2), Point(2, 2))
        points = intersect_line_circle(line, self.unit)
        assert points[0].x < points[1].x


class TestCircleCircle:
    def test_equilateral_intersection(self):
        relation, points = intersect_circle_circle(
            Circle(Point(0, 0), 1.0), Circle(Point(1, 0), 1.0))
        assert relation is CircleRelation.INTERSECTING
        assert points[0].x == pytest.approx(0.5)
        assert points[0].y == pytest.approx(-math.sqrt(3) / 2)
        assert points[1].y == pytest.approx(math.sqrt(3) / 2)

    def test_external_tangency(self):
        relation, points = intersect_circle_circle(
            Circle(Point(0, 0), 1.0), Circle(Point(2, 0), 1.0))
        assert relation is CircleRelation.EXTERNAL_TANGENT
        assert points == [Point(1.0, 0.0)]

    def test_internal_disjoint(self):
        relation, points = intersect_circle_circle(
            Circle(Point(0, 0), 2.0), Circle(Point(0.5, 0), 1.0))
        assert relation is CircleRelation.INTERNAL_DISJOINT
        assert points == []

    def test_external_disjoint(self):
        relation, _ = intersect_circle_circle(
            Circle(Point(0, 0), 1.0), Circle(Point(5, 0), 1.0))
        assert relation is CircleRelation.EXTERNAL_DISJOINT

    def test_internal_tangency_both_orders(self):
        big, small = Circle(Point(0, 0), 2.0), Circle(Point(1, 0), 1.0)
        for c1, c2 in ((big, small), (small, big)):
            relation, points = intersect_circle_circle(c1, c2)
            assert relation is CircleRelation.INTERNAL_TANGENT
            assert points[0].x == pytest.approx(2.0)
            assert points[0].y == pytest.approx(0.0)

    def test_concentric(self):
        relation, points = intersect_circle_circle(
            Circle(Point(0, 0), 1.0), Circle(Point(0, 0), 2.0))
        assert relation is CircleRelation.CONCENTRIC
        assert points == []

    def test_coincident_rejected(self):
        with pytest.raises(DegenerateInputError):
            intersect_circle_circle(Circle(Point(0, 0), 1.0), Circle(Point(0, 0), 1.0))

    def test_intersection_points_equidistant_from_centers(self):
        rng = random.Random(3)
        for _ in range(500):
            c1 = Circle(Point(rng.uniform(-5, 5), rng.uniform(-5, 5)),
                        rng.uniform(0.5, 4))
            gap = rng.uniform(0.2, 0.9) * (c1.radius + 2.0)
            theta = rng.uniform(0, 2 * math.pi)
            r2 = rng.uniform(max(0.2, gap - c1.radius + 0.05),
                             gap + c1.radius - 0.05)
            c2 = Circle(Point(c1.center.x + gap * math.cos(theta),
                              c1.center.y + gap * math.sin(theta)), r2)
            relation, points = intersect_circle_circle(c1, c2)
            if relation is not CircleRelation.INTERSECTING:
                continue
            for p in points:
                assert abs(distance(p, c1.center) - c1.radius) < 1e-9
                assert abs(distance(p, c2.center) - c2.radius) < 1e-9


class TestPerpendicularAndReflection:
    def test_foot_and_distance(self):
        line = Line(0, 1, 0)
        assert foot_of_perpendicular(Point(0, 2), line) == Point(0.0, 0.0)
        assert distance_point_line(Point(0, 2), line) == 2.0

    def test_point_on_line_has_zero_distance(self):
        line = line_through(Point(0, 0), Point(3, 1))
        assert distance_point_line(Point(6, 2), line) < 1e-12

    def test_coordinate_reading(self):
        line = Line(1, 0, 0)  # x = 0
        assert foot_of_perpendicular(Point(3, 4), line) == Point(0.0, 4.0)
        assert distance_point_line(Point(3, 4), line) == 3.0

    def test_reflection_examples(self):
        assert reflect_point(Point(0, 1), Line(0, 1, 0)) == Point(0.0, -1.0)
        on_line = Point(2, 0)
        assert reflect_point(on_line, Line(0, 1, 0)) == on_line
        swap = reflect_point(Point(2, 3), line_through(Point(0, 0), Point(1, 1)))
        assert swap.x == pytest.approx(3.0, abs=1e-12)
        assert swap.y == pytest.approx(2.0, abs=1e-12)

    def test_reflection_is_an_involution(self):
        rng = random.Random(8)
        for _ in range(1000):
            line = line_through(Point(rng.uniform(-5, 5), rng.uniform(-5, 5)),
                                Point(rng.uniform(-5, 5), rng.uniform(-5, 5)))
            p = Point(rng.uniform(-5, 5), rng.uniform(-5, 5))
            back = reflect_point(reflect_point(p, line), line)
            assert abs(back.x - p.x) < 1e-12 and abs(back.y - p.y) < 1e-12


class TestPointPower:
    unit = Circle(Point(0, 0), 1.0)

    def test_center(self):
        assert point_power(self.unit, Point(0, 0)) == -1.0

    def test_on_circle(self):
        assert point_power(self.unit, Point(1, 0)) == 0.0

    def test_outside_equals_tangent_squared(self):
        power = point_power(self.unit, Point(2, 0))
        assert power == 3.0
        tangent_length = math.sqrt(distance(Point(2, 0), Point(0, 0)) ** 2 - 1)
        assert power == pytest.approx(tangent_length ** 2, rel=1e-15)

    def test_chord_products_constant(self):
        rng = random.Random(5)
        for _ in range(50):
            circle = Circle(Point(rng.uniform(-3, 3), rng.uniform(-3, 3)),
                            rng.uniform(0.5, 4))
            m = Point(circle.center.x + rng.uniform(-0.5, 0.5) * circle.radius,
                      circle.center.y + rng.uniform(-0.5, 0.5) * circle.radius)
            expected = abs(point_power(circle, m))
            for _ in range(20):
                phi = rng.uniform(0, math.pi)
                chord = intersect_line_circle(
                    line_through(m, Point(m.x + math.cos(phi), m.y + math.sin(phi))),
                    circle)
                product = distance(m, chord[0]) * distance(m, chord[1])
                assert abs(product - expected) < 1e-7


class TestHelpers:
    def test_midpoint(self):
        assert midpoint(Point(0, 0), Point(2, 4)) == Point(1.0, 2.0)

    def test_angle_at(self):
        angle = angle_at(Point(1, 0), Point(0, 0), Point(0, 1))
        assert angle.degrees == pytest.approx(90.0)
        with pytest.raises(DegenerateInputError):
            angle_at(Point(0, 0), Point(0, 0), Point(1, 1))

    def test_arc_point_at(self):
        arc = Arc(Circle(Point(0, 0), 1.0), AngleMeasure(0.0),
                  AngleMeasure(math.pi))
        top = arc.point_at(0.5)
        assert top.x == pytest.approx(0.0, abs=1e-15)
        assert top.y == pytest.approx(1.0)
