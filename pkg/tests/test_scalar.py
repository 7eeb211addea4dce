import math
import random

import pytest

from euclidkit.errors import DomainError
from euclidkit.scalar import (
    AngleMeasure,
    Interval,
    Tolerance,
    dms_to_radians,
    radians_to_dms,
    scalar_sqrt,
)


class TestDms:
    def test_20_57_degrees_example(self):
        angle = dms_to_radians(20, 34, 12)
        assert angle.degrees == pytest.approx(20.57, abs=1e-12)

    def test_zero(self):
        assert dms_to_radians(0, 0, 0).radians == 0.0

    def test_right_angle(self):
        assert dms_to_radians(90, 0, 0).radians == pytest.approx(math.pi / 2, rel=1e-15)

    def test_one_radian_prints_as_57_17_44(self):
        d, m, s = radians_to_dms(AngleMeasure(1.0))
        assert (d, m) == (57, 17)
        assert abs(s - 44) <= 1.0

    def test_pi_is_a_straight_angle(self):
        assert radians_to_dms(AngleMeasure(math.pi)) == (180, 0, 0.0)

    def test_round_trip_of_the_20_57_example(self):
        angle = AngleMeasure.from_degrees(20.57)
        d, m, s = angle.to_dms()
        assert (d, m) == (20, 34)
        assert s == pytest.approx(12.0, abs=1e-6)

    @pytest.mark.parametrize("d,m,s", [(0, 60, 0), (0, -1, 0), (0, 0, 60.0),
                                       (0, 0, -0.5), (-1, 0, 0)])
    def test_out_of_range_rejected(self, d, m, s):
        with pytest.raises(DomainError):
            dms_to_radians(d, m, s)

    def test_round_trip_within_half_second(self):
        rng = random.Random(4)
        arcsec = math.radians(1 / 3600)
        for _ in range(10_000):
            radians = rng.uniform(0, 2 * math.pi)
            d, m, s = radians_to_dms(radians)
            assert 0 <= m < 60 and 0 <= s < 60
            back = dms_to_radians(d, m, s).radians
            assert abs(back - radians) < 0.5 * arcsec


class TestScalarSqrt:
    def test_sqrt_two_within_1_41_and_1_42(self):
        root = scalar_sqrt(2.0)
        assert 1.41 < root < 1.42
        assert root == pytest.approx(1.41421356, abs=1e-8)

    def test_zero(self):
        assert scalar_sqrt(0.0) == 0.0

    def test_25_is_5(self):
        assert scalar_sqrt(25.0) == 5.0

    def test_small_negative_clamped(self):
        assert scalar_sqrt(-1e-12) == 0.0

    def test_large_negative_rejected(self):
        with pytest.raises(DomainError):
            scalar_sqrt(-1.0)

    def test_interval_backend(self):
        enclosure = scalar_sqrt(Interval(2.0, 2.0))
        assert enclosure.lo <= math.sqrt(2) <= enclosure.hi
        with pytest.raises(DomainError):
            scalar_sqrt(Interval(-4.0, -2.0))


class TestTolerance:
    def test_defaults(self):
        tol = Tolerance()
        assert tol.abs_eps == 1e-9 and tol.rel_eps == 1e-9

    def test_env_override(self, monkeypatch):
        from euclidkit.scalar import _tolerance_from_env

        monkeypatch.setenv("EUCLIDKIT_TOLERANCE", "1e-6")
        tol = _tolerance_from_env()
        assert tol.abs_eps == 1e-6 and tol.rel_eps == 1e-6
        monkeypatch.setenv("EUCLIDKIT_TOLERANCE", "lots")
        with pytest.raises(DomainError):
            _tolerance_from_env()

    @pytest.mark.parametrize("abs_eps,rel_eps", [(0.0, 1e-9), (1e-9, 0.0), (-1e-9, 1e-9)])
    def test_rejects_non_positive(self, abs_eps, rel_eps):
        with pytest.raises(DomainError):
            Tolerance(abs_eps, rel_eps)

    def test_close_uses_both_scales(self):
        tol = Tolerance()
        assert tol.close(1e6, 1e6 + 1e-4)
        assert not tol.close(1.0, 1.0 + 1e-6)


class TestInterval:
    def test_bounds_validation(self):
        with pytest.raises(DomainError):
            Interval(2.0, 1.0)

    def test_point_and_contains(self):
        x = Interval.point(3.5)
        assert x.contains(3.5)
        assert x.width == 0.0

    def test_addition_encloses(self):
        total = Interval.point(0.1) + Interval.point(0.2)
        assert total.contains(0.1 + 0.2)
        assert total.width > 0

    def test_division_by_zero_interval(self):
        with pytest.raises(ZeroDivisionError):
            Interval.point(1.0) / Interval(-1.0, 1.0)

    def test_negative_sqrt_rejected(self):
        with pytest.raises(DomainError):
            Interval(-2.0, -1.0).sqrt()

    def test_mixed_scalar_operations(self):
        result = 2 * Interval.point(3.0) - 1
        assert result.contains(5.0)
        result = 1 / Interval.point(4.0)
        assert result.contains(0.25)

    def test_width_monotone_under_widening(self):
        rng = random.Random(11)
        for _ in range(2000):
            a = rng.uniform(-5, 5)
            b = rng.uniform(-5, 5)
            base = Interval.point(a)
            widened = Interval(a - abs(b) * 0.01 - 1e-6, a + abs(b) * 0.01 + 1e-6)
            other = Interval.point(rng.uniform(0.5, 5))
            for op in (lambda x, y: x + y, lambda x, y: x - y,
                       lambda x, y: x * y, lambda x, y: x / y):
                narrow = op(base, other)
                wide = op(widened, other)
                assert wide.width >= narrow.width - 4 * math.ulp(max(abs(wide.lo),
                                                                     abs(wide.hi), 1.0))

    def test_enclosure_of_float_backend_100k_trees(self):
        # Module-level invariant: 1e5 random expression trees, interval
        # always contains the float value and the 50-digit reference.
        from euclidkit.verify import run_suite

        report = run_suite("interval-enclosure", seed=2024, samples=100_000)
        assert report.passed, report.line()
