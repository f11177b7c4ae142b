"""
Faure's ω_b permutations, built bottom-up from base 2.
"""

import logging
from typing import Dict, List, Tuple

from vdcperm.permutations.families import intricate
from vdcperm.types.permutation import Permutation, PermutationError

__all__ = ["faure_omega"]

logger = logging.getLogger(__name__)

_CACHE: Dict[int, Tuple[int, ...]] = {2: (0, 1)}


def _insert_middle(even: Tuple[int, ...]) -> Tuple[int, ...]:
    """
    ω_{2b+1} from ω_{2b}: b is inserted at position b and larger
    values move up by one.
    """

    half = len(even) // 2
    bumped = [value + 1 if value >= half else value for value in even]
    return tuple(bumped[:half] + [half] + bumped[half:])


def faure_omega(base: int) -> Permutation:
    """
    Faure's permutation ω_b.

    ### Arguments
    - base: b ≥ 2.

    ### Returns
    - ω_b, with ω_2 = id, ω_{2b} = id_2 · ω_b and ω_{2b+1} obtained by
    inserting b in the middle of ω_{2b}.

    ### Notes
    - For b = 2^n the images are b times the first b points of the
    binary van der Corput sequence.
    """

    if base < 2:
        raise PermutationError(f"Invalid base: {base}")

    chain: List[int] = []
    current = base
    while current not in _CACHE:
        chain.append(current)
        current = current // 2 if current % 2 == 0 else current - 1

    for target in reversed(chain):
        if target % 2 == 0:
            half = Permutation(_CACHE[target // 2])
            _CACHE[target] = intricate(Permutation.identity(2), half).image
        else:
            _CACHE[target] = _insert_middle(_CACHE[target - 1])

        logger.debug("Built ω_%d", target)

    return Permutation(_CACHE[base])
