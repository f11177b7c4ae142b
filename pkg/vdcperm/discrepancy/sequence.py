"""
Points of generalized van der Corput sequences.

S(n) = Σ_j σ_j(a_j(n)) / b^{j+1}. Past the digit length of n every digit
is 0, so the infinite tail is a geometric sum of σ_j(0); it is exact when
the rule is eventually periodic and enclosed otherwise.
"""

import logging
from fractions import Fraction
from typing import Callable, List, Optional, Tuple

from vdcperm.permutations.arith import digits
from vdcperm.types.sequence import (
    DiscrepancyError,
    Enclosure,
    Exact,
    SeqPoint,
    SigmaSequence,
)

__all__ = ["DIGITS_CAP", "geometric_tail", "point", "generate"]

logger = logging.getLogger(__name__)

DIGITS_CAP = 64


def geometric_tail(
    coefficient: Callable[[int], Fraction],
    first: int,
    base: int,
    periodicity: Optional[Tuple[int, int]],
    cap: int,
    coefficient_range: Tuple[Fraction, Fraction],
) -> Exact:
    """
    Σ_{j ≥ first} coefficient(j) / b^j.

    ### Arguments
    - coefficient: the numerators, periodic from `periodicity[0]` on.
    - first: first index of the sum.
    - base: b.
    - periodicity: `(start, period)` or None.
    - cap: index from which a non periodic sum is only enclosed.
    - coefficient_range: bounds of every coefficient, used past `cap`.

    ### Returns
    - The exact sum, or an Enclosure of width
    (hi - lo) / (b^{cap-1} (b - 1)).
    """

    if periodicity is not None:
        start, period = periodicity
        start = max(start, first)
        head = sum(
            (Fraction(coefficient(j), base**j) for j in range(first, start)),
            Fraction(0),
        )
        block = sum(
            (Fraction(coefficient(j), base**j) for j in range(start, start + period)),
            Fraction(0),
        )

        return head + block / (1 - Fraction(1, base**period))

    cut = max(cap, first)
    head = sum(
        (Fraction(coefficient(j), base**j) for j in range(first, cut)), Fraction(0)
    )
    rest = Fraction(1, base ** (cut - 1) * (base - 1))
    low, high = coefficient_range

    return Enclosure(head + low * rest, head + high * rest)


def point(seq: SigmaSequence, index: int, digits_cap: int = DIGITS_CAP) -> SeqPoint:
    """
    Exact value of the `index`-th point, n ≥ 0.

    ### Arguments
    - seq: the permutation sequence.
    - index: n.
    - digits_cap: J, the digit position past which a non periodic rule
    is enclosed.

    ### Returns
    - SeqPoint holding a Fraction, or an Enclosure of width at most b^{-J}.
    """

    if index < 0:
        raise DiscrepancyError(f"Point index must be non-negative, got {index}")

    base = seq.base
    expansion = digits(index, base)
    value = sum(
        (
            Fraction(seq.sigma_at(position)(digit), base ** (position + 1))
            for position, digit in enumerate(expansion)
        ),
        Fraction(0),
    )

    zero_images = (
        Fraction(seq.sigma(0)),
        Fraction(seq.reversed_sigma(0)),
    )
    tail = geometric_tail(
        lambda position: Fraction(seq.sigma_at(position)(0), base),
        len(expansion),
        base,
        seq.periodicity(),
        digits_cap,
        (min(zero_images) / base, max(zero_images) / base),
    )

    if isinstance(tail, Enclosure):
        return SeqPoint(index, Enclosure(value + tail.lo, value + tail.hi))

    return SeqPoint(index, value + tail)


def generate(
    seq: SigmaSequence, start: int, stop: int, digits_cap: int = DIGITS_CAP
) -> List[SeqPoint]:
    """
    Points with start ≤ n ≤ stop.
    """

    if start < 0 or stop < start:
        raise DiscrepancyError(f"Invalid index range {start}..{stop}")

    logger.debug("Generating points %d..%d of %s", start, stop, seq.describe())

    return [point(seq, index, digits_cap) for index in range(start, stop + 1)]
