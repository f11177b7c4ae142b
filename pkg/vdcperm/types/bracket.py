"""
Bracket module that holds the certified enclosures of asymptotic constants.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Tuple

from vdcperm.types.permutation import Permutation
from vdcperm.utils.interval import Interval

__all__ = [
    "AsymptoticsError",
    "LogConstant",
    "AlphaBracket",
    "SBracket",
    "KlpStats",
    "KlpReport",
]


class AsymptoticsError(Exception):
    """
    Base class for all exceptions related to asymptotic constants.
    """


@dataclass(frozen=True)
class LogConstant:
    """
    The real number `rational / log(base)`.
    """

    rational: Fraction
    base: int

    @property
    def interval(self) -> Interval:
        """
        Outward rounded enclosure.
        """

        return Interval.from_fraction(self.rational) / Interval.log(self.base)

    @property
    def value(self) -> float:
        """
        Float rendering.
        """

        return self.interval.midpoint

    def __str__(self) -> str:
        return f"{self.rational}/log({self.base})"


@dataclass(frozen=True)
class AlphaBracket:
    """
    Enclosure lower ≤ α ≤ upper of an asymptotic ψ constant.

    `lower` comes from the periodic point whose digits repeat `lower_cycle`;
    `upper` is the smallest max F_n / n seen for n ≤ `upper_n`, with the
    whole refinement history in `uppers`.
    """

    permutation: Permutation
    part: str
    lower: Fraction
    lower_cycle: Tuple[int, ...]
    upper: Fraction
    upper_n: int
    uppers: Tuple[Fraction, ...] = ()
    complete: bool = True

    def __post_init__(self):
        if self.lower > self.upper:
            raise AsymptoticsError(
                f"Inconsistent bracket: lower {self.lower} > upper {self.upper}"
            )

    @property
    def base(self) -> int:
        """
        Base of the permutation.
        """

        return self.permutation.base

    @property
    def width(self) -> Fraction:
        """
        upper - lower.
        """

        return self.upper - self.lower

    def __contains__(self, value: Fraction) -> bool:
        return self.lower <= value <= self.upper

    @property
    def is_collapsed(self) -> bool:
        """
        True if lower == upper.
        """

        return self.lower == self.upper

    @property
    def s_interval(self) -> Interval:
        """
        Enclosure of α / log b.
        """

        return Interval.from_bounds(self.lower, self.upper) / Interval.log(self.base)

    @property
    def json(self) -> Dict[str, Any]:
        """
        Returns a dictionary of the bracket.
        """

        return {
            "base": self.base,
            "permutation": str(self.permutation),
            "part": self.part,
            "lower": str(self.lower),
            "lower_cycle": list(self.lower_cycle),
            "upper": str(self.upper),
            "upper_n": self.upper_n,
            "complete": self.complete,
        }


@dataclass(frozen=True)
class SBracket:
    """
    Enclosure of `alpha / (divisor * log base)`: divisor 1 for s, 2 for s*.
    """

    base: int
    alpha_lower: Fraction
    alpha_upper: Fraction
    divisor: int = 1
    sources: Tuple[AlphaBracket, ...] = field(default=(), compare=False)

    @property
    def interval(self) -> Interval:
        """
        Outward rounded float enclosure of s.
        """

        alpha = Interval.from_bounds(self.alpha_lower, self.alpha_upper)
        return alpha.scale(Fraction(1, self.divisor)) / Interval.log(self.base)

    def contains(self, constant: LogConstant) -> bool:
        """
        True if the exact constant lies in the rational bracket.
        """

        if constant.base != self.base:
            raise AsymptoticsError(
                f"Base mismatch: bracket {self.base}, constant {constant.base}"
            )

        value = constant.rational * self.divisor
        return self.alpha_lower <= value <= self.alpha_upper

    def __str__(self) -> str:
        return f"s in {self.interval}"


@dataclass(frozen=True)
class KlpStats:
    """
    S_m and T_m of a base-2 permutation sequence.
    """

    m: int
    s: int
    t: int

    def __post_init__(self):
        if not 0 <= self.t <= self.s <= self.m or 2 * self.s < self.m:
            raise AsymptoticsError(
                f"Inconsistent statistics m={self.m}, S={self.s}, T={self.t}"
            )


@dataclass(frozen=True)
class KlpReport:
    """
    Both sides of the base-2 star discrepancy bound against the exact maximum.
    """

    stats: KlpStats
    max_star: Fraction
    lower_bound: Fraction
    upper_bound: Fraction

    @property
    def holds(self) -> bool:
        """
        True if lower_bound ≤ max_star ≤ upper_bound.
        """

        return self.lower_bound <= self.max_star <= self.upper_bound
