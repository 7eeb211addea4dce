"""Real-number backends, tolerance policy, and angle-unit arithmetic.

Two scalar backends exist.  Backend A is a plain Python float carrying the
best estimate.  Backend B is :class:`Interval`, a pair of bounds kept honest
by nudging every computed endpoint one ULP outward, so the exact result of
each operation always lies inside the returned interval without touching the
FPU rounding mode.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from .errors import DomainError

_INF = math.inf


def _down(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] with outward-rounded arithmetic."""

    lo: float
    hi: float

    def __post_init__(self):
        if math.isnan(self.lo) or math.isnan(self.hi):
            raise DomainError("interval bounds must not be NaN")
        if self.lo > self.hi:
            raise DomainError(f"interval lower bound {self.lo!r} exceeds upper {self.hi!r}")

    @classmethod
    def point(cls, x: float) -> "Interval":
        return cls(float(x), float(x))

    @property
    def width(self) -> float:
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return self.lo + (self.hi - self.lo) / 2

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi

    def _coerce(self, other) -> "Interval":
        if isinstance(other, Interval):
            return other
        if isinstance(other, (int, float)):
            return Interval.point(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Interval(_down(self.lo + o.lo), _up(self.hi + o.hi))

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Interval(_down(self.lo - o.hi), _up(self.hi - o.lo))

    def __rsub__(self, other):
        return Interval.point(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        products = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(_down(min(products)), _up(max(products)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.lo <= 0.0 <= o.hi:
            raise ZeroDivisionError("division by an interval containing zero")
        quotients = (self.lo / o.lo, self.lo / o.hi, self.hi / o.lo, self.hi / o.hi)
        return Interval(_down(min(quotients)), _up(max(quotients)))

    def __rtruediv__(self, other):
        return Interval.point(other) / self

    def sqrt(self) -> "Interval":
        if self.hi < 0:
            raise DomainError(f"sqrt of a negative interval {self}")
        lo = max(self.lo, 0.0)
        return Interval(max(_down(math.sqrt(lo)), 0.0), _up(math.sqrt(self.hi)))

    def __repr__(self):
        return f"Interval({self.lo!r}, {self.hi!r})"


@dataclass(frozen=True)
class Tolerance:
    """Absolute/relative comparison thresholds used across the kernel."""

    abs_eps: float = 1e-9
    rel_eps: float = 1e-9

    def __post_init__(self):
        if not (self.abs_eps > 0 and self.rel_eps > 0):
            raise DomainError("tolerance components must be strictly positive")

    def window(self, scale: float) -> float:
        """Comparison window for quantities of the given magnitude."""
        return max(self.abs_eps, self.rel_eps * abs(scale))

    def close(self, x: float, y: float) -> bool:
        return abs(x - y) <= max(self.abs_eps, self.rel_eps * max(abs(x), abs(y)))

    def is_zero(self, x: float) -> bool:
        return abs(x) <= self.abs_eps


def _tolerance_from_env() -> Tolerance:
    raw = os.environ.get("EUCLIDKIT_TOLERANCE")
    if not raw:
        return Tolerance()
    try:
        eps = float(raw)
    except ValueError:
        raise DomainError(f"EUCLIDKIT_TOLERANCE is not a number: {raw!r}") from None
    return Tolerance(abs_eps=eps, rel_eps=eps)


DEFAULT_TOLERANCE = _tolerance_from_env()

TWO_PI = 2 * math.pi
_SECONDS_PER_TURN = 360 * 3600
_RAD_PER_SECOND = TWO_PI / _SECONDS_PER_TURN


@dataclass(frozen=True, order=True)
class AngleMeasure:
    """An angle stored in radians (the primary unit; degrees are derived)."""

    radians: float

    @property
    def degrees(self) -> float:
        return math.degrees(self.radians)

    @classmethod
    def from_degrees(cls, degrees: float) -> "AngleMeasure":
        return cls(math.radians(degrees))

    @classmethod
    def from_dms(cls, d: int, m: int, s: float) -> "AngleMeasure":
        return dms_to_radians(d, m, s)

    def to_dms(self) -> tuple[int, int, float]:
        return radians_to_dms(self)


def dms_to_radians(d: int, m: int, s: float) -> AngleMeasure:
    """Angle from a (degrees, minutes, seconds) triple, e.g. 20°34'12"."""
    if d < 0:
        raise DomainError(f"degrees must be non-negative, got {d}")
    if not 0 <= m < 60:
        raise DomainError(f"minutes out of range [0, 60): {m}")
    if not 0 <= s < 60:
        raise DomainError(f"seconds out of range [0, 60): {s}")
    total_seconds = (d * 60 + m) * 60 + s
    return AngleMeasure(total_seconds * _RAD_PER_SECOND)


def radians_to_dms(a: AngleMeasure | float) -> tuple[int, int, float]:
    """Inverse of :func:`dms_to_radians`, exact to far better than 0.5 seconds.

    Totals within 1e-7 seconds of an integer are snapped so that round angles
    (pi -> 180°0'0") do not come back as 179°59'59.999...".
    """
    radians = a.radians if isinstance(a, AngleMeasure) else float(a)
    if not math.isfinite(radians):
        raise DomainError(f"angle must be finite, got {radians!r}")
    if radians < 0:
        raise DomainError("DMS form is defined for non-negative angles")
    total_seconds = radians / _RAD_PER_SECOND
    snapped = round(total_seconds)
    if abs(total_seconds - snapped) < 1e-7:
        total_seconds = float(snapped)
    d = int(total_seconds // 3600)
    rest = total_seconds - d * 3600
    m = int(rest // 60)
    s = rest - m * 60
    if s >= 60.0:  # guard against binary rounding at the minute boundary
        s -= 60.0
        m += 1
    if m >= 60:
        m -= 60
        d += 1
    return d, m, s


def scalar_sqrt(x, tol: Tolerance = DEFAULT_TOLERANCE):
    """Square root on either backend; tiny negatives are clamped to zero."""
    if isinstance(x, Interval):
        if x.hi < -tol.abs_eps:
            raise DomainError(f"sqrt of negative interval {x}")
        return Interval(max(x.lo, 0.0), max(x.hi, 0.0)).sqrt()
    value = float(x)
    if value < 0:
        if value < -tol.abs_eps:
            raise DomainError(f"sqrt of negative value {value!r}")
        value = 0.0
    return math.sqrt(value)
