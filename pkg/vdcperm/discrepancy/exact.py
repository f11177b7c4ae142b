"""
Exact finite-N discrepancies through the ψ series

    D_N = Σ_{j ≥ 1} ψ^{σ_{j-1}}(N / b^j),

and the analogous series for D_N^+ and D_N^-. Once b^j > N the argument
lies in [0, 1/b), where every ψ part is linear, so the tail is geometric.
"""

import logging
from fractions import Fraction
from typing import List, Optional

from vdcperm.discrepancy.sequence import DIGITS_CAP, geometric_tail
from vdcperm.permutations.arith import digits
from vdcperm.psi.functions import psi
from vdcperm.types.sequence import (
    DiscrepancyError,
    DiscrepancyReport,
    Enclosure,
    Exact,
    SigmaSequence,
)

__all__ = ["exact_discrepancies", "discrepancy_table", "max_exact"]

logger = logging.getLogger(__name__)


def _add(left: Exact, right: Exact) -> Exact:
    if isinstance(left, Enclosure) or isinstance(right, Enclosure):
        left = left if isinstance(left, Enclosure) else Enclosure(left, left)
        right = right if isinstance(right, Enclosure) else Enclosure(right, right)
        return Enclosure(left.lo + right.lo, left.hi + right.hi)

    return left + right


def max_exact(left: Exact, right: Exact) -> Exact:
    """
    Pointwise maximum of two exact values or enclosures.
    """

    if isinstance(left, Enclosure) or isinstance(right, Enclosure):
        left = left if isinstance(left, Enclosure) else Enclosure(left, left)
        right = right if isinstance(right, Enclosure) else Enclosure(right, right)
        return Enclosure(max(left.lo, right.lo), max(left.hi, right.hi))

    return max(left, right)


def exact_discrepancies(
    seq: SigmaSequence, count: int, digits_cap: int = DIGITS_CAP
) -> DiscrepancyReport:
    """
    D_N^+, D_N^-, D_N and D_N^* of the first N points, unnormalized.

    ### Arguments
    - seq: the permutation sequence.
    - count: N ≥ 1.
    - digits_cap: position past which non periodic tails are enclosed.

    ### Returns
    - DiscrepancyReport. D_N is always exact; D_N^± (and D_N^*) are
    Enclosures for non periodic swap schedules.
    """

    if count < 1:
        raise DiscrepancyError(f"N must be at least 1, got {count}")

    base = seq.base
    length = len(digits(count, base))

    plus: Exact = Fraction(0)
    minus: Exact = Fraction(0)
    total = Fraction(0)
    for position in range(1, length + 1):
        triple = psi(seq.sigma_at(position - 1))
        x = Fraction(count % base**position, base**position)
        plus += triple.plus(x)
        minus += triple.minus(x)
        total += triple.total(x)

    # ψ(x) = (b - 1) x on [0, 1/b)
    total += Fraction(count, base**length)

    periodicity: Optional[tuple] = seq.periodicity()
    if periodicity is not None:
        periodicity = (periodicity[0] + 1, periodicity[1])

    zero_images = (seq.sigma(0), seq.reversed_sigma(0))
    low, high = min(zero_images), max(zero_images)

    plus = _add(
        plus,
        geometric_tail(
            lambda j: Fraction(count * (base - 1 - seq.sigma_at(j - 1)(0))),
            length + 1,
            base,
            periodicity,
            digits_cap,
            (Fraction(count * (base - 1 - high)), Fraction(count * (base - 1 - low))),
        ),
    )
    minus = _add(
        minus,
        geometric_tail(
            lambda j: Fraction(count * seq.sigma_at(j - 1)(0)),
            length + 1,
            base,
            periodicity,
            digits_cap,
            (Fraction(count * low), Fraction(count * high)),
        ),
    )

    return DiscrepancyReport(
        count=count,
        plus=plus,
        minus=minus,
        total=total,
        star=max_exact(plus, minus),
    )


def discrepancy_table(
    seq: SigmaSequence, start: int, stop: int, digits_cap: int = DIGITS_CAP
) -> List[DiscrepancyReport]:
    """
    Reports for start ≤ N ≤ stop.
    """

    if start < 1 or stop < start:
        raise DiscrepancyError(f"Invalid N range {start}..{stop}")

    logger.debug("Discrepancies for N=%d..%d of %s", start, stop, seq.describe())

    return [
        exact_discrepancies(seq, count, digits_cap) for count in range(start, stop + 1)
    ]
