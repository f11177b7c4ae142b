"""
Certified brackets of the asymptotic constants

    α = inf_n max_x F_n(x) / n,    s = α / log b,

with upper bounds from the exact max F_n / n and lower bounds from
periodic points: if x̂ repeats a q-digit cycle then
max F_{mq} / (mq) ≥ F_{mq}(x̂) / (mq) = F_q(x̂) / q for every m, so
F_q(x̂) / q ≤ α.
"""

import logging
from fractions import Fraction
from itertools import product
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from vdcperm.permutations.arith import continued_fraction
from vdcperm.psi.functions import max_psi
from vdcperm.psi.maximize import f_n_eval_periodic, f_n_max
from vdcperm.types.bracket import AlphaBracket, AsymptoticsError, LogConstant, SBracket
from vdcperm.types.budget import NodeBudget, ResourceLimitError
from vdcperm.types.permutation import Permutation
from vdcperm.utils.interval import Interval

__all__ = [
    "CYCLE_ENUMERATION_CAP",
    "IdClosedForm",
    "candidate_cycles",
    "alpha_bracket",
    "alpha_pm_bracket",
    "s_constant",
    "s_star_swapped",
    "id_closed_form",
    "affine_bound",
    "affine_bound_from_quotient",
]

logger = logging.getLogger(__name__)

CYCLE_ENUMERATION_CAP = 20000


class IdClosedForm(NamedTuple):
    """
    Exact constants of the identity sequence in base b.
    """

    alpha: Fraction
    s: LogConstant
    s_star_swapped: LogConstant


def _special_cycles(base: int) -> List[Tuple[int, ...]]:
    if base % 2:
        return [((base - 1) // 2,)]

    return [(base // 2, base // 2 - 1)]


def candidate_cycles(
    base: int,
    depth: int,
    seeds: Iterable[Sequence[int]] = (),
    cap: int = CYCLE_ENUMERATION_CAP,
) -> List[Tuple[int, ...]]:
    """
    Digit cycles tried for the lower bound: the given seeds, the extremal
    cycles of the identity, then every cycle of length q ≤ depth while
    b^q stays below `cap`.
    """

    cycles: List[Tuple[int, ...]] = []
    seen = set()

    def add(cycle: Sequence[int]) -> None:
        cycle = tuple(cycle)
        if cycle and cycle not in seen:
            seen.add(cycle)
            cycles.append(cycle)

    for cycle in seeds:
        add(cycle)

    for cycle in _special_cycles(base):
        add(cycle)

    for length in range(1, depth + 1):
        if base**length > cap:
            logger.debug(
                "Stopping cycle enumeration at length %d in base %d", length - 1, base
            )
            break

        for cycle in product(range(base), repeat=length):
            add(cycle)

    return cycles


def alpha_bracket(
    sigma: Permutation,
    n_max: int = 6,
    cycle_depth: int = 3,
    part: str = "total",
    budget: Optional[NodeBudget] = None,
    threads: int = 1,
    seeds: Iterable[Sequence[int]] = (),
) -> AlphaBracket:
    """
    Bracket of α (or α⁺, α⁻ with `part`).

    ### Arguments
    - sigma: the permutation.
    - n_max: largest n for the upper bound max F_n / n.
    - cycle_depth: longest enumerated digit cycle for the lower bound.
    - part: `total`, `plus` or `minus`.
    - budget: node budget shared by every F_n maximization.
    - threads: workers for the F_n maximization.
    - seeds: extra digit cycles to try first.

    ### Returns
    - The AlphaBracket. When the budget runs out the bracket keeps the
    last completed n and is flagged incomplete.
    """

    if n_max < 1:
        raise AsymptoticsError(f"n_max must be at least 1, got {n_max}")

    base = sigma.base
    budget = budget or NodeBudget()

    peak, _ = max_psi(sigma, part)
    uppers = [peak]
    upper, upper_n = peak, 1
    argmax_cycles = []
    complete = True

    for n in range(2, n_max + 1):
        try:
            result = f_n_max(sigma, n, part=part, budget=budget, threads=threads)
        except ResourceLimitError:
            logger.warning(
                "Node budget exhausted at n=%d for %s, keeping n=%d", n, sigma, upper_n
            )
            complete = False
            break

        uppers.append(result.normalized)
        # most significant digit first
        argmax_cycles.append(tuple(reversed(result.digits)))
        if result.normalized < upper:
            upper, upper_n = result.normalized, n
        elif result.normalized == upper:
            upper_n = n

    lower, lower_cycle = Fraction(-1), ()
    for cycle in candidate_cycles(base, cycle_depth, list(seeds) + argmax_cycles):
        value = f_n_eval_periodic(sigma, cycle, part=part)
        if value > lower:
            lower, lower_cycle = value, cycle

    bracket = AlphaBracket(
        permutation=sigma,
        part=part,
        lower=lower,
        lower_cycle=lower_cycle,
        upper=upper,
        upper_n=upper_n,
        uppers=tuple(uppers),
        complete=complete,
    )

    logger.debug(
        "α (%s) of %s in [%s, %s], cycle %s, n=%d",
        part,
        sigma,
        lower,
        upper,
        lower_cycle,
        upper_n,
    )

    return bracket


def alpha_pm_bracket(
    sigma: Permutation, **kwargs
) -> Tuple[AlphaBracket, AlphaBracket]:
    """
    Brackets of α⁺ and α⁻, the ψ⁺ and ψ⁻ analogues of α.
    """

    kwargs.pop("part", None)
    return (
        alpha_bracket(sigma, part="plus", **kwargs),
        alpha_bracket(sigma, part="minus", **kwargs),
    )


def s_constant(sigma: Permutation, **kwargs) -> SBracket:
    """
    Bracket of s = α / log b for the constant sequence of σ.
    """

    kwargs.pop("part", None)
    bracket = alpha_bracket(sigma, part="total", **kwargs)
    return SBracket(sigma.base, bracket.lower, bracket.upper, 1, (bracket,))


def s_star_swapped(sigma: Permutation, **kwargs) -> SBracket:
    """
    Bracket of s* = (α⁺ + α⁻) / (2 log b) for σ swapped on the block
    schedule.
    """

    plus, minus = alpha_pm_bracket(sigma, **kwargs)
    return SBracket(
        sigma.base,
        plus.lower + minus.lower,
        plus.upper + minus.upper,
        2,
        (plus, minus),
    )


def id_closed_form(base: int) -> IdClosedForm:
    """
    α of the identity: (b - 1) / 4 for odd b, b² / (4 (b + 1)) for even b.
    The swapped star constant is half of it.
    """

    if base < 2:
        raise AsymptoticsError(f"Invalid base: {base}")

    if base % 2:
        alpha = Fraction(base - 1, 4)
    else:
        alpha = Fraction(base * base, 4 * (base + 1))

    return IdClosedForm(
        alpha=alpha,
        s=LogConstant(alpha, base),
        s_star_swapped=LogConstant(alpha / 2, base),
    )


def affine_bound(modulus: int, a0: int) -> float:
    """
    Upper bound (α_max + 1) / log(α_max + 1) on s for the affine
    permutation with multiplier a0, from the continued fraction of a0 / p.
    The returned float is rounded upwards.
    """

    expansion = continued_fraction(a0, modulus)
    return affine_bound_from_quotient(expansion.alpha_max)


def affine_bound_from_quotient(alpha_max: int) -> float:
    """
    (α_max + 1) / log(α_max + 1), rounded upwards. α_max = 1 never comes
    out of a canonical expansion but is accepted.
    """

    if alpha_max < 1:
        raise AsymptoticsError(f"Invalid partial quotient: {alpha_max}")

    return (Interval.from_fraction(alpha_max + 1) / Interval.log(alpha_max + 1)).hi
