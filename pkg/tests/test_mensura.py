import math
import random

import pytest

from euclidkit.errors import DegenerateInputError, DomainError
from euclidkit.mensura import (
    PiTable,
    PiRow,
    TriangleSides,
    apollonius_circle,
    arc_length,
    arc_length_degrees,
    angle_from_arc,
    chord_and_sagitta,
    parallelogram_diagonals_check,
    pi_doubling_table,
    polygon_area,
    pythagorean_triple,
    radius_from_arc,
    radius_from_chord_sagitta,
    regular_polygon_central_angle,
    regular_polygon_interior_angle,
    right_triangle_from_projections,
    sector_area,
    segment_area,
    triangle_area,
    triangle_metrics,
)
from euclidkit.plane import Circle, Line, Point, distance
from euclidkit.scalar import dms_to_radians


class TestTriangleSides:
    def test_validation(self):
        with pytest.raises(DomainError):
            TriangleSides(1, 1, 3)
        with pytest.raises(DomainError):
            TriangleSides(1, 1, 2)  # degenerate equality is also rejected
        with pytest.raises(DomainError):
            TriangleSides(0, 1, 1)


class TestHeron:
    def test_unit_equilateral(self):
        assert triangle_area(TriangleSides(1, 1, 1)) == pytest.approx(
            math.sqrt(3) / 4, rel=1e-15)

    def test_egyptian_triangle_cross_checked(self):
        # Right triangle: half the product of the legs.
        assert triangle_area(TriangleSides(3, 4, 5)) == pytest.approx(
            0.5 * 3 * 4, rel=1e-15)

    def test_area_scales_quadratically(self):
        assert triangle_area(TriangleSides(2, 2, 2)) == pytest.approx(
            math.sqrt(3), rel=1e-15)


class TestTriangleMetrics:
    def test_projections_follow_the_defining_equation(self):
        t = TriangleSides(7, 5, 4)
        m = triangle_metrics(t)
        # b^2 = a^2 + c^2 - 2 a c' and symmetrically for b'.
        assert t.b ** 2 == pytest.approx(
            t.a ** 2 + t.c ** 2 - 2 * t.a * m.projection_c_on_a, rel=1e-12)
        assert m.projection_b_on_a + m.projection_c_on_a == pytest.approx(t.a, rel=1e-12)

    def test_bisector_split_worked_example(self):
        # AB = 10, BC = 7, AC = 6: bisector from B cuts AC at 60/17 from A.
        t = TriangleSides(a=7, b=6, c=10)
        m = triangle_metrics(t)
        from_b = m.bisector_splits[1]
        assert from_b.toward_first == pytest.approx(60 / 17, abs=1e-12)
        assert from_b.toward_second == pytest.approx(6 - 60 / 17, abs=1e-12)

    def test_bisector_pieces_are_proportional_to_adjacent_sides(self):
        t = TriangleSides(7, 6, 10)
        m = triangle_metrics(t)
        from_a = m.bisector_splits[0]
        # On side a the piece at B is to the piece at C as c : b.
        assert from_a.toward_first / from_a.toward_second == pytest.approx(
            t.c / t.b, rel=1e-12)
        assert from_a.toward_first + from_a.toward_second == pytest.approx(
            t.a, rel=1e-12)

    def test_egyptian_triangle_radii(self):
        m = triangle_metrics(TriangleSides(3, 4, 5))
        assert m.circumradius == pytest.approx(2.5, rel=1e-12)
        assert m.inradius == pytest.approx(1.0, rel=1e-12)
        assert m.angle_classes == ("acute", "acute", "right")

    def test_obtuse_classification(self):
        m = triangle_metrics(TriangleSides(5, 3, 3))
        assert m.angle_classes[0] == "obtuse"

    def test_median_of_hypotenuse_is_half_of_it(self):
        m = triangle_metrics(TriangleSides(3, 4, 5))
        assert m.medians[2] == pytest.approx(2.5, rel=1e-12)

    def test_heights_match_projection_formula(self):
        rng = random.Random(13)
        for _ in range(200):
            a = rng.uniform(1, 10)
            b = rng.uniform(1, 10)
            lo, hi = abs(a - b) + 0.1, a + b - 0.1
            if lo >= hi:
                continue
            t = TriangleSides(a, b, rng.uniform(lo, hi))
            m = triangle_metrics(t)
            explicit = math.sqrt(
                4 * t.a ** 2 * t.c ** 2 - (t.a ** 2 + t.c ** 2 - t.b ** 2) ** 2
            ) / (2 * t.a)
            assert m.heights[0] == pytest.approx(explicit, rel=1e-9)
            assert t.b * t.c == pytest.approx(2 * m.circumradius * m.heights[0],
                                              rel=1e-9)

    def test_median_formula_against_coordinates(self):
        t = TriangleSides(6, 5, 4)
        m = triangle_metrics(t)
        # Place the triangle and measure the median to side a directly.
        bx = (t.a ** 2 + t.c ** 2 - t.b ** 2) / (2 * t.a)
        apex = Point(bx, math.sqrt(t.c ** 2 - bx ** 2))
        mid_a = Point(t.a / 2, 0.0)
        assert m.medians[0] == pytest.approx(distance(apex, mid_a), rel=1e-12)


class TestRightTriangleFromProjections:
    def test_worked_values_for_segments_5_and_7(self):
        sol = right_triangle_from_projections(b_proj=5, c_proj=7)
        assert sol.hypotenuse == 12
        assert sol.leg_adjacent_c == pytest.approx(math.sqrt(84), rel=1e-15)
        assert sol.leg_adjacent_b == pytest.approx(math.sqrt(60), rel=1e-15)
        assert sol.height == pytest.approx(math.sqrt(35), rel=1e-15)

    def test_pythagoras_holds(self):
        sol = right_triangle_from_projections(2.5, 7.3)
        assert sol.leg_adjacent_b ** 2 + sol.leg_adjacent_c ** 2 == pytest.approx(
            sol.hypotenuse ** 2, rel=1e-12)

    def test_rejects_non_positive(self):
        with pytest.raises(DomainError):
            right_triangle_from_projections(0, 1)


class TestParallelogramDiagonals:
    def test_unit_square(self):
        assert parallelogram_diagonals_check(1, 1, math.sqrt(2), math.sqrt(2))

    def test_rectangle_3_4(self):
        assert parallelogram_diagonals_check(3, 4, 5, 5)

    def test_identity_violated(self):
        assert not parallelogram_diagonals_check(1, 1, 1, 1)

    def test_rejects_non_positive(self):
        with pytest.raises(DomainError):
            parallelogram_diagonals_check(0, 1, 1, 1)


class TestPolygonArea:
    def test_rectangle_with_fractional_sides(self):
        assert polygon_area("rectangle", base=3.5, height=4.6) == pytest.approx(
            16.1, rel=1e-12)

    def test_unit_square(self):
        assert polygon_area("rectangle", base=1, height=1) == 1.0

    def test_trapezoid_equals_midline_times_height(self):
        assert polygon_area("trapezoid", base1=2, base2=4, height=3) == pytest.approx(9.0)

    def test_triangle_rhombus_parallelogram(self):
        assert polygon_area("triangle", base=3, height=4) == 6.0
        assert polygon_area("rhombus", d1=3, d2=4) == 6.0
        assert polygon_area("parallelogram", base=3, height=4) == 12.0

    def test_regular_hexagon(self):
        assert polygon_area("regular", n=6, side=1) == pytest.approx(
            3 * math.sqrt(3) / 2, rel=1e-12)

    def test_circumscribed_polygon(self):
        # Perimeter times half the inradius.
        assert polygon_area("circumscribed", perimeter=12, inradius=2) == 12.0

    def test_errors(self):
        with pytest.raises(DomainError):
            polygon_area("rectangle", base=-1, height=2)
        with pytest.raises(DomainError):
            polygon_area("rectangle", base=1)
        with pytest.raises(DomainError):
            polygon_area("blob", base=1)
        with pytest.raises(DomainError):
            polygon_area("regular", n=2, side=1)


class TestPolygonAngles:
    def test_octagon_interior_angle(self):
        assert regular_polygon_interior_angle(8).degrees == pytest.approx(135.0)

    def test_hexagon_central_angle(self):
        assert regular_polygon_central_angle(6).degrees == pytest.approx(60.0)


class TestPiDoubling:
    def test_zero_rounds(self):
        table = pi_doubling_table(0)
        assert table.rows == [PiRow(6, 1.0, 6.0)]

    def test_reference_value_at_96(self):
        table = pi_doubling_table(4)
        assert table.final.n == 96
        assert table.final.perimeter == pytest.approx(6.2820638, abs=1e-6)

    def test_reference_value_at_192(self):
        table = pi_doubling_table(5)
        assert table.final.perimeter / 2 == pytest.approx(3.14145247, abs=1e-7)

    def test_stabilized_agrees_through_2_to_10(self):
        naive = pi_doubling_table(10)
        stable = pi_doubling_table(10, stabilized=True)
        for a, b in zip(naive.rows, stable.rows):
            assert abs(a.side - b.side) < 1e-12

    def test_naive_form_breaks_down_but_stabilized_does_not(self):
        stable = pi_doubling_table(24, stabilized=True)
        assert abs(stable.final.perimeter / 2 - math.pi) < 1e-12
        # Past ~2^12 sides the naive form can no longer produce a strictly
        # increasing table; the breakdown is reported, not papered over.
        naive_12 = pi_doubling_table(12)
        assert abs(naive_12.final.perimeter / 2 - math.pi) < 1e-8
        with pytest.raises(DomainError, match="stabilized"):
            pi_doubling_table(24)

    def test_perimeters_strictly_increase_and_stay_below_circumscribed(self):
        table = pi_doubling_table(10, stabilized=True)
        circumscribed = 8.0  # perimeter of the circumscribed square, R = 1
        for prev, cur in zip(table.rows, table.rows[1:]):
            assert cur.perimeter > prev.perimeter
            assert cur.perimeter < circumscribed

    def test_rounds_cap(self):
        with pytest.raises(DomainError):
            pi_doubling_table(25)
        pi_doubling_table(25, stabilized=True, max_rounds=30)

    def test_square_start(self):
        table = pi_doubling_table(0, start_n=4)
        assert table.final.side == pytest.approx(math.sqrt(2), rel=1e-15)
        with pytest.raises(DomainError):
            pi_doubling_table(1, start_n=5)

    def test_table_invariants_enforced(self):
        with pytest.raises(DomainError):
            PiTable([PiRow(6, 1.0, 6.0), PiRow(13, 0.5, 6.5)])
        with pytest.raises(DomainError):
            PiTable([PiRow(6, 1.0, 6.0), PiRow(12, 0.4, 4.8)])


class TestArcSectorSegment:
    def test_inverse_problem_gives_one_over_pi(self):
        angle = dms_to_radians(81, 21, 36).radians
        radius = radius_from_arc(0.452, angle)
        assert radius == pytest.approx(1 / math.pi, rel=1e-12)
        assert radius == pytest.approx(0.318, abs=5e-4)

    def test_full_circle(self):
        assert arc_length(2.0, 2 * math.pi) == pytest.approx(4 * math.pi)
        assert sector_area(2.0, 2 * math.pi) == pytest.approx(4 * math.pi)

    def test_arc_equal_to_radius_is_one_radian(self):
        angle = angle_from_arc(3.0, 3.0)
        d, m, s = angle.to_dms()
        assert (d, m) == (57, 17)
        assert abs(s - 44) <= 1.0

    def test_degree_entry_point_agrees(self):
        assert arc_length_degrees(2.0, 90.0) == pytest.approx(
            arc_length(2.0, math.pi / 2), rel=1e-15)

    def test_sector_is_arc_times_half_radius(self):
        assert sector_area(3.0, 1.2) == pytest.approx(
            arc_length(3.0, 1.2) * 1.5, rel=1e-15)

    def test_segment_exercise_at_60_degrees(self):
        angle = math.radians(60)
        exact = segment_area(1.0, angle, "exact")
        approx1 = segment_area(1.0, angle, "approx1")
        approx2 = segment_area(1.0, angle, "approx2")
        assert exact == pytest.approx(0.0906, abs=5e-5)
        assert approx1 == pytest.approx(0.0893, abs=5e-5)
        assert approx2 == pytest.approx(0.0905, abs=5e-5)
        assert (exact - approx1) / exact == pytest.approx(0.014, abs=0.002)
        assert (exact - approx2) / exact == pytest.approx(0.001, abs=0.002)

    def test_chord_and_sagitta_at_60_degrees(self):
        b, h = chord_and_sagitta(1.0, math.radians(60))
        assert b == pytest.approx(1.0, rel=1e-15)
        assert h == pytest.approx(0.1340, abs=5e-5)

    def test_major_segment_complements_the_minor(self):
        r, angle = 2.0, 1.1
        minor = segment_area(r, angle)
        major = segment_area(r, 2 * math.pi - angle)
        assert minor + major == pytest.approx(math.pi * r * r, rel=1e-12)

    def test_radius_from_chord_and_sagitta(self):
        # Exercise: b = 67.2, h = 12.8 determine the circle.
        r = radius_from_chord_sagitta(67.2, 12.8)
        assert (67.2 / 2) ** 2 + (r - 12.8) ** 2 == pytest.approx(r * r, rel=1e-12)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            arc_length(0.0, 1.0)
        with pytest.raises(DomainError):
            sector_area(1.0, 0.0)
        with pytest.raises(DomainError):
            segment_area(1.0, 2 * math.pi)
        with pytest.raises(DomainError):
            segment_area(1.0, 1.0, "approx3")


class TestApolloniusCircle:
    def test_ratio_two_to_one(self):
        result = apollonius_circle(Point(0, 0), Point(3, 0), 2, 1)
        assert isinstance(result, Circle)
        assert result.center.x == pytest.approx(4.0, rel=1e-12)
        assert result.center.y == pytest.approx(0.0, abs=1e-12)
        assert result.radius == pytest.approx(2.0, rel=1e-12)

    def test_equal_ratio_gives_perpendicular_bisector(self):
        result = apollonius_circle(Point(0, 0), Point(3, 0), 5, 5)
        assert isinstance(result, Line)
        assert abs(result.evaluate(Point(1.5, 17.0))) < 1e-9
        assert abs(result.evaluate(Point(1.5, -4.0))) < 1e-9

    def test_sampled_points_have_the_stated_ratio(self):
        a, b, m, n = Point(0, 0), Point(3, 0), 2.0, 1.0
        circle = apollonius_circle(a, b, m, n)
        for k in range(10):
            p = circle.point_at(2 * math.pi * k / 10)
            assert distance(p, a) / distance(p, b) == pytest.approx(m / n, abs=1e-7)

    def test_random_ratios(self):
        rng = random.Random(21)
        for _ in range(100):
            a = Point(rng.uniform(-5, 5), rng.uniform(-5, 5))
            b = Point(rng.uniform(-5, 5), rng.uniform(-5, 5))
            if distance(a, b) < 0.3:
                continue
            m, n = rng.uniform(0.2, 5), rng.uniform(0.2, 5)
            if abs(m - n) < 0.05 * max(m, n):
                continue
            circle = apollonius_circle(a, b, m, n)
            for k in range(10):
                p = circle.point_at(2 * math.pi * k / 10)
                assert distance(p, a) / distance(p, b) == pytest.approx(
                    m / n, rel=1e-7)

    def test_degenerate_base_points(self):
        with pytest.raises(DegenerateInputError):
            apollonius_circle(Point(1, 1), Point(1, 1), 2, 1)
        with pytest.raises(DomainError):
            apollonius_circle(Point(0, 0), Point(1, 0), -1, 2)


class TestPythagoreanTriples:
    def test_generator_2_1_gives_egyptian_triangle(self):
        assert pythagorean_triple(2, 1) == (4, 3, 5)

    def test_generator_3_2(self):
        assert pythagorean_triple(3, 2) == (12, 5, 13)

    def test_identity_holds_exactly(self):
        rng = random.Random(2)
        for _ in range(200):
            b = rng.randint(1, 200)
            a = b + rng.randint(1, 200)
            x, y, z = pythagorean_triple(a, b)
            assert x * x + y * y == z * z

    def test_rejects_bad_generators(self):
        with pytest.raises(DomainError):
            pythagorean_triple(2, 2)
        with pytest.raises(DomainError):
            pythagorean_triple(3, 0)
        with pytest.raises(DomainError):
            pythagorean_triple(2.0, 1.0)
