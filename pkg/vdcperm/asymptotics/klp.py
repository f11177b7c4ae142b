"""
Base-2 sequences mixing id_2 and τ_2: the counts S_m and T_m and the two
sided bound they give on max_{N ≤ 2^m} D_N^*.
"""

import logging
from fractions import Fraction
from typing import Sequence

from vdcperm.discrepancy.exact import exact_discrepancies
from vdcperm.permutations.families import tau
from vdcperm.types.bracket import AsymptoticsError, KlpReport, KlpStats
from vdcperm.types.permutation import Permutation
from vdcperm.types.sequence import Enclosure, SigmaSequence

__all__ = ["klp_stats", "klp_check"]

logger = logging.getLogger(__name__)


def _validate(prefix: Sequence[Permutation], m: int) -> None:
    if m < 1:
        raise AsymptoticsError(f"m must be at least 1, got {m}")

    if len(prefix) < m:
        raise AsymptoticsError(f"Prefix of length {len(prefix)} is shorter than m={m}")

    allowed = (Permutation.identity(2), tau(2))
    for permutation in prefix:
        if permutation not in allowed:
            raise AsymptoticsError(f"{permutation} is neither id_2 nor τ_2")


def klp_stats(prefix: Sequence[Permutation], m: int) -> KlpStats:
    """
    S_m = max(#{j < m : σ_j = τ_2}, #{j < m : σ_j = id_2}) and
    T_m = #{1 ≤ j < m : σ_{j-1} = τ_2, σ_j = id_2}.
    """

    _validate(prefix, m)

    reversal = tau(2)
    flips = sum(1 for permutation in prefix[:m] if permutation == reversal)
    s_value = max(flips, m - flips)
    t_value = sum(
        1
        for j in range(1, m)
        if prefix[j - 1] == reversal and prefix[j] != reversal
    )

    return KlpStats(m, s_value, t_value)


def klp_check(prefix: Sequence[Permutation], m: int) -> KlpReport:
    """
    Compare max_{1 ≤ N ≤ 2^m} D_N^* with
    S/3 + T/48 - 4 ≤ max D_N^* ≤ S/3 + 2T/9 + 56/9.

    ### Arguments
    - prefix: σ_0, σ_1, ... (at least m entries); id_2 follows.
    - m: number of digit levels.

    ### Returns
    - KlpReport with the exact maximum and both bounds.
    """

    stats = klp_stats(prefix, m)
    seq = SigmaSequence.explicit(prefix)

    best = Fraction(0)
    for count in range(1, 2**m + 1):
        star = exact_discrepancies(seq, count).star
        if isinstance(star, Enclosure):
            raise AsymptoticsError("Explicit sequences have exact discrepancies")

        best = max(best, star)

    report = KlpReport(
        stats=stats,
        max_star=best,
        lower_bound=Fraction(stats.s, 3) + Fraction(stats.t, 48) - 4,
        upper_bound=Fraction(stats.s, 3) + Fraction(2 * stats.t, 9) + Fraction(56, 9),
    )

    logger.debug(
        "m=%d S=%d T=%d: %s ≤ %s ≤ %s",
        m,
        stats.s,
        stats.t,
        report.lower_bound,
        best,
        report.upper_bound,
    )

    return report
