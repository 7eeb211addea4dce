"""Commensurability machinery: Euclid's algorithm on lengths, continued
fractions, and convergents.

Floating-point lengths are never exactly incommensurable, so termination is
tolerance-defined: the expansion stops either when the running remainder
drops below ``stop_eps * max(a, b)`` (flagged ``terminated``) or when
``max_steps`` quotients have been extracted (not terminated).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DomainError


@dataclass
class CFExpansion:
    """Partial quotients of a length ratio a : b."""

    quotients: list[int] = field(default_factory=list)
    terminated: bool = False
    remainder_bound: float = 0.0

    def __post_init__(self):
        for i, q in enumerate(self.quotients):
            if q < 0 or (i > 0 and q < 1):
                raise DomainError(f"quotient #{i} must be >= 1 (first may be 0), got {q}")


@dataclass(frozen=True)
class Convergent:
    p: int
    q: int

    def __post_init__(self):
        if self.q <= 0:
            raise DomainError(f"convergent denominator must be positive, got {self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise DomainError(f"convergent {self.p}/{self.q} is not in lowest terms")

    @property
    def value(self) -> float:
        return self.p / self.q

    def as_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self):
        return f"{self.p}/{self.q}"


def euclid_on_lengths(a: float, b: float, max_steps: int = 64,
                      stop_eps: float = 1e-12) -> CFExpansion:
    """Successive fitting counts of Euclid's algorithm on two lengths.

    A guard rounds a quotient up when the fractional part of the ratio is
    within ``stop_eps`` of 1, preventing representation error from spawning a
    spurious huge quotient on the next step.
    """
    if not (a > 0 and b > 0):
        raise DomainError(f"lengths must be positive, got a={a!r}, b={b!r}")
    if max_steps < 1:
        raise DomainError(f"max_steps must be >= 1, got {max_steps}")
    scale = max(a, b)
    x, y = float(a), float(b)
    quotients: list[int] = []
    for _ in range(max_steps):
        ratio = x / y
        q = math.floor(ratio)
        if ratio - q >= 1 - stop_eps:
            quotients.append(q + 1)
            return CFExpansion(quotients, terminated=True, remainder_bound=0.0)
        quotients.append(q)
        r = x - q * y
        if r < stop_eps * scale:
            return CFExpansion(quotients, terminated=True, remainder_bound=r)
        x, y = y, r
    return CFExpansion(quotients, terminated=False, remainder_bound=y)


def convergents(cf: CFExpansion, k: int | None = None) -> list[Convergent]:
    """First k convergents via the standard two-term recurrence."""
    n = len(cf.quotients) if k is None else k
    if n > len(cf.quotients):
        raise DomainError(f"requested {n} convergents but only {len(cf.quotients)} quotients")
    result: list[Convergent] = []
    p_prev, p_prev2 = 1, 0
    q_prev, q_prev2 = 0, 1
    for a in cf.quotients[:n]:
        p = a * p_prev + p_prev2
        q = a * q_prev + q_prev2
        result.append(Convergent(p, q))
        p_prev2, p_prev = p_prev, p
        q_prev2, q_prev = q_prev, q
    return result


def cf_value(cf: CFExpansion) -> Fraction:
    """Fold a terminated expansion back to the exact ratio it encodes."""
    if not cf.quotients:
        raise DomainError("cannot fold an empty expansion")
    if not cf.terminated:
        raise DomainError("only terminated expansions reconstruct a ratio exactly")
    acc = Fraction(cf.quotients[-1])
    for a in reversed(cf.quotients[:-1]):
        acc = a + 1 / acc
    return acc


def golden_ratio_cf_demo(steps: int) -> CFExpansion:
    """All-ones expansion of the 36°-base isosceles triangle's side ratio.

    The triangle is actually built with ruler and compass: the golden section
    of a unit radius gives the apex distance, and the expansion of
    base : side never terminates, every quotient equal to 1.
    """
    if steps < 1:
        raise DomainError(f"steps must be >= 1, got {steps}")
    from .construct.api import golden_gnomon_sides

    base, side = golden_gnomon_sides()
    return euclid_on_lengths(base, side, max_steps=steps)
