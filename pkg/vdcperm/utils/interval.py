"""
Outward rounded float intervals. Every operation widens its result with
`math.nextafter`, so an interval built from exact data always encloses
the true real value.
"""

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = ["Interval", "IntervalError"]


class IntervalError(Exception):
    """
    Base class for all exceptions related to interval arithmetic.
    """


def _down(value: float) -> float:
    return math.nextafter(value, -math.inf)


def _up(value: float) -> float:
    return math.nextafter(value, math.inf)


@dataclass(frozen=True)
class Interval:
    """
    Closed interval [lo, hi] of floats.
    """

    lo: float
    hi: float

    def __post_init__(self):
        if self.lo > self.hi:
            raise IntervalError(f"Invalid interval [{self.lo}, {self.hi}]")

    @classmethod
    def from_fraction(cls, value: Union[Fraction, int]) -> "Interval":
        """
        Tight enclosure of an exact rational.
        """

        approx = float(value)
        lo = approx if Fraction(approx) <= value else _down(approx)
        hi = approx if Fraction(approx) >= value else _up(approx)

        return cls(lo, hi)

    @classmethod
    def from_bounds(
        cls, lower: Union[Fraction, int], upper: Union[Fraction, int]
    ) -> "Interval":
        """
        Enclosure of the rational interval [lower, upper].
        """

        return cls(cls.from_fraction(lower).lo, cls.from_fraction(upper).hi)

    @classmethod
    def log(cls, value: int) -> "Interval":
        """
        Enclosure of the natural logarithm of a positive integer.
        libm's log is accurate to about one ulp, so two ulps are added each way.
        """

        if value <= 0:
            raise IntervalError(f"log of non-positive value {value}")

        approx = math.log(value)
        return cls(_down(_down(approx)), _up(_up(approx)))

    def __add__(self, other: "Interval") -> "Interval":
        return Interval(_down(self.lo + other.lo), _up(self.hi + other.hi))

    def __truediv__(self, other: "Interval") -> "Interval":
        if other.lo <= 0:
            raise IntervalError(f"Division by an interval meeting zero: {other}")

        if self.lo >= 0:
            return Interval(_down(self.lo / other.hi), _up(self.hi / other.lo))

        candidates = [
            self.lo / other.lo,
            self.lo / other.hi,
            self.hi / other.lo,
            self.hi / other.hi,
        ]
        return Interval(_down(min(candidates)), _up(max(candidates)))

    def scale(self, factor: Fraction) -> "Interval":
        """
        Multiply by a positive rational.
        """

        factor_interval = Interval.from_fraction(factor)
        if factor_interval.lo <= 0:
            raise IntervalError(f"Scale factor must be positive, got {factor}")

        return Interval(
            _down(min(self.lo * factor_interval.lo, self.lo * factor_interval.hi)),
            _up(max(self.hi * factor_interval.lo, self.hi * factor_interval.hi)),
        )

    def __contains__(self, value: float) -> bool:
        return self.lo <= value <= self.hi

    def intersects(self, other: "Interval") -> bool:
        """
        True if the two intervals share a point.
        """

        return self.lo <= other.hi and other.lo <= self.hi

    @property
    def width(self) -> float:
        """
        hi - lo, rounded up.
        """

        return _up(self.hi - self.lo)

    @property
    def midpoint(self) -> float:
        """
        Centre of the interval.
        """

        return (self.lo + self.hi) / 2

    def __str__(self) -> str:
        return f"[{self.lo!r}, {self.hi!r}]"
