"""
Brute force discrepancy oracles on explicit finite point sets, and the
Kronecker baseline sequence.

All discrepancies are unnormalized: E(I, N, X) = #(X ∩ I) - N λ(I).
"""

import logging
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import List, Optional, Sequence, Tuple, Union

from vdcperm.types.sequence import DiscrepancyError

__all__ = [
    "QuadraticIrrational",
    "brute_plus_minus",
    "brute_star",
    "brute_extreme",
    "exhaustive_star",
    "exhaustive_extreme",
    "brute_l2",
    "brute_diaphony_sq",
    "integrate_anchored_sq",
    "integrate_wrapped_sq",
    "kronecker",
]

logger = logging.getLogger(__name__)


def _sorted(points: Sequence[Fraction]) -> List[Fraction]:
    if not points:
        raise DiscrepancyError("Empty point set")

    values = sorted(Fraction(value) for value in points)
    if values[0] < 0 or values[-1] >= 1:
        raise DiscrepancyError("Points must lie in [0, 1)")

    return values


def brute_plus_minus(points: Sequence[Fraction]) -> Tuple[Fraction, Fraction]:
    """
    D^+ = sup_α E([0, α)) and D^- = sup_α -E([0, α)) from the sorted points.
    """

    values = _sorted(points)
    size = len(values)

    plus = max(index - size * value for index, value in enumerate(values, start=1))
    minus = max(
        size * value - (index - 1) for index, value in enumerate(values, start=1)
    )

    return max(plus, Fraction(0)), max(minus, Fraction(0))


def brute_star(points: Sequence[Fraction]) -> Fraction:
    """
    Star discrepancy max(D^+, D^-).
    """

    return max(brute_plus_minus(points))


def brute_extreme(points: Sequence[Fraction]) -> Fraction:
    """
    Extreme discrepancy D^+ + D^- over intervals [α, β) ⊂ [0, 1).
    """

    plus, minus = brute_plus_minus(points)
    return plus + minus


def _critical(values: List[Fraction]) -> List[Fraction]:
    return sorted(set(values) | {Fraction(0), Fraction(1)})


def _count(
    values: List[Fraction],
    low: Fraction,
    high: Fraction,
    closed_low: bool,
    closed_high: bool,
) -> int:
    start = bisect_left(values, low) if closed_low else bisect_right(values, low)
    stop = bisect_right(values, high) if closed_high else bisect_left(values, high)
    return max(stop - start, 0)


def exhaustive_star(points: Sequence[Fraction]) -> Fraction:
    """
    sup |E([0, α))| checked on every critical α with both closures.
    """

    values = _sorted(points)
    size = len(values)
    zero = Fraction(0)

    return max(
        abs(_count(values, zero, alpha, True, closed) - size * alpha)
        for alpha in _critical(values)
        for closed in (False, True)
    )


def exhaustive_extreme(points: Sequence[Fraction]) -> Fraction:
    """
    sup |E(I)| over every interval with critical end points and every
    choice of open or closed ends.
    """

    values = _sorted(points)
    size = len(values)
    grid = _critical(values)

    best = Fraction(0)
    for i, low in enumerate(grid):
        for high in grid[i:]:
            for closed_low in (False, True):
                for closed_high in (False, True):
                    count = _count(values, low, high, closed_low, closed_high)
                    best = max(best, abs(count - size * (high - low)))

    return best


def brute_l2(points: Sequence[Fraction]) -> Fraction:
    """
    ∫_0^1 E([0, α))² dα in the pairwise form
    N²/3 - N Σ (1 - x_i²) + Σ_{i,j} (1 - max(x_i, x_j)).
    """

    values = _sorted(points)
    size = len(values)

    single = sum((1 - value * value for value in values), Fraction(0))
    # sorted, so max(x_i, x_j) is the later one
    pairs = sum(
        ((1 - value) * (2 * index + 1) for index, value in enumerate(values)),
        Fraction(0),
    )

    return Fraction(size * size, 3) - size * single + pairs


def _bernoulli2(value: Fraction) -> Fraction:
    value = value % 1
    return value * value - value + Fraction(1, 6)


def brute_diaphony_sq(points: Sequence[Fraction]) -> Fraction:
    """
    Σ_{i,j} B_2({x_i - x_j}); the squared diaphony is 2π² times this.
    """

    values = _sorted(points)
    return sum(
        (_bernoulli2(left - right) for left in values for right in values), Fraction(0)
    )


def integrate_anchored_sq(points: Sequence[Fraction]) -> Fraction:
    """
    ∫_0^1 E([0, α))² dα integrated cell by cell between critical points.
    """

    values = _sorted(points)
    size = len(values)
    grid = _critical(values)

    def antiderivative(alpha: Fraction, count: int) -> Fraction:
        return (size * alpha - count) ** 3 / (3 * size)

    total = Fraction(0)
    for low, high in zip(grid, grid[1:]):
        count = bisect_right(values, low)
        total += antiderivative(high, count) - antiderivative(low, count)

    return total


def integrate_wrapped_sq(points: Sequence[Fraction]) -> Fraction:
    """
    ∫∫ E([α, β))² dα dβ over the torus, where [α, β) wraps around 1 when
    β < α, integrated exactly on the grid of critical cells.
    """

    values = _sorted(points)
    size = len(values)
    grid = _critical(values)
    cells = list(zip(grid, grid[1:]))

    def between(low: Fraction, high: Fraction) -> int:
        return bisect_right(values, high) - bisect_left(values, low)

    def primitive(width: Fraction, constant: int) -> Fraction:
        # -∂α∂β of this is (constant + N width)²
        return (constant + size * width) ** 4 / (12 * size * size)

    total = Fraction(0)
    for i, (a0, a1) in enumerate(cells):
        for j, (b0, b1) in enumerate(cells):
            if i < j:
                # α < β: points in [g_{i+1}, g_j]
                constant = between(a1, b0)
            elif i > j:
                # wrapped: the points in [g_{j+1}, g_i] are missed
                constant = -between(b1, a0)
            else:
                constant = 0

            # E = constant + N (α - β) on the cell
            total += (
                primitive(a1 - b0, constant)
                - primitive(a0 - b0, constant)
                - primitive(a1 - b1, constant)
                + primitive(a0 - b1, constant)
            )

    return total


@dataclass(frozen=True)
class QuadraticIrrational:
    """
    The real number (a + b √d) / c.
    """

    a: int
    b: int
    d: int
    c: int

    def __post_init__(self):
        if self.d < 0 or self.c == 0:
            raise DiscrepancyError(f"Invalid quadratic irrational {self}")

    def approximate(self, scale: int) -> Fraction:
        """
        Rational within 1 / (|c| scale) of the value.
        """

        root = isqrt(self.b * self.b * self.d * scale * scale)
        if self.b < 0:
            root = -root

        return Fraction(self.a * scale + root, self.c * scale)

    def __str__(self) -> str:
        return f"({self.a} + {self.b}√{self.d})/{self.c}"


def kronecker(
    alpha: Union[Fraction, QuadraticIrrational],
    count: int,
    error: Optional[Fraction] = None,
) -> List[Fraction]:
    """
    The points {nα} for n = 1..N.

    ### Arguments
    - alpha: a rational approximation, or a quadratic irrational that is
    approximated with error below 1 / (4 N²).
    - count: N.
    - error: declared error of a rational `alpha`; it must stay below
    1 / (2 N²) so that every {nα} lies within 1 / (2N) of the true point.

    ### Returns
    - The N points as exact rationals.
    """

    if count < 1:
        raise DiscrepancyError(f"N must be at least 1, got {count}")

    limit = Fraction(1, 2 * count * count)
    if isinstance(alpha, QuadraticIrrational):
        scale = 4 * count * count
        value = alpha.approximate(scale)
        logger.debug("Approximated %s by %s (error < 1/%d)", alpha, value, scale)
    else:
        value = Fraction(alpha)
        if error is not None and error >= limit:
            raise DiscrepancyError(
                f"Approximation error {error} is not below 1/(2N²) = {limit}"
            )

    return [(index * value) % 1 for index in range(1, count + 1)]
