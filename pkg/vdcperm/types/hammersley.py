"""
Types for generalized Hammersley point sets.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from vdcperm.types.permutation import Permutation
from vdcperm.utils.interval import Interval

__all__ = [
    "HammersleySpec",
    "HammersleyReport",
    "TrendRow",
    "TrendReport",
    "HammersleyError",
]


class HammersleyError(Exception):
    """
    Base class for all exceptions related to Hammersley point sets.
    """


@dataclass(frozen=True)
class HammersleySpec:
    """
    b^m points built from the permutation vector (σ_0, ..., σ_{m-1}).
    """

    base: int
    m: int
    sigma_vec: Tuple[Permutation, ...]

    def __post_init__(self):
        object.__setattr__(self, "sigma_vec", tuple(self.sigma_vec))

        if self.m < 1:
            raise HammersleyError(f"m must be at least 1, got {self.m}")

        if len(self.sigma_vec) != self.m:
            raise HammersleyError(
                f"Expected {self.m} permutations, got {len(self.sigma_vec)}"
            )

        for permutation in self.sigma_vec:
            if permutation.base != self.base:
                raise HammersleyError(
                    f"Permutation {permutation} is not in base {self.base}"
                )

    @property
    def size(self) -> int:
        """
        Number of points, b^m.
        """

        return self.base**self.m

    def __str__(self) -> str:
        return "|".join(str(permutation) for permutation in self.sigma_vec)


@dataclass(frozen=True)
class HammersleyReport:
    """
    Max-of-sums term of the star discrepancy formula next to the brute
    force star discrepancy of the same set. Their difference is c_m.
    """

    spec: HammersleySpec
    term: Fraction
    brute: Fraction

    @property
    def c_m(self) -> Fraction:
        """
        brute - term.
        """

        return self.brute - self.term

    @property
    def holds(self) -> bool:
        """
        True if 0 ≤ c_m ≤ 2.
        """

        return 0 <= self.c_m <= 2


@dataclass(frozen=True)
class TrendRow:
    """
    Formula term for one m and its enclosure of term / (m log b).
    """

    m: int
    term: Fraction
    ratio: Interval


@dataclass(frozen=True)
class TrendReport:
    """
    term / (m log b) for m = 1..m_max against the expected limit.
    """

    base: int
    limit: Interval
    rows: Tuple[TrendRow, ...]

    def gap(self, row: TrendRow) -> float:
        """
        Distance between the midpoints of a row ratio and the limit.
        """

        return abs(row.ratio.midpoint - self.limit.midpoint)

    @property
    def approaching(self) -> bool:
        """
        True if the last ratio is closer to the limit than the first one.
        """

        if len(self.rows) < 2:
            return True

        return self.gap(self.rows[-1]) < self.gap(self.rows[0])
