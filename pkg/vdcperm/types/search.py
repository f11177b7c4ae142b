"""
Types for the pruned permutation search.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

from vdcperm.types.permutation import Permutation

__all__ = ["SearchConfig", "SearchResult", "Survivor", "SearchError"]


class SearchError(Exception):
    """
    Base class for all exceptions related to the permutation search.
    """


@dataclass(frozen=True)
class SearchConfig:
    """
    Parameters of one search run.

    - `threshold`: keep permutations with max ψ strictly below it.
    - `symmetry_reduction`: fix σ(0) = 0 and keep one of each reflection pair.
    - `prune_part`: `total` prunes on ψ, `plus` on ψ⁺.
    """

    base: int
    threshold: Fraction
    symmetry_reduction: bool = True
    node_budget: Optional[int] = None
    stage2: bool = False
    memoize: bool = True
    prune_part: str = "total"
    threads: int = 1

    def __post_init__(self):
        if self.base < 2:
            raise SearchError(f"Invalid base: {self.base}")

        if self.threshold <= 0:
            raise SearchError(f"Threshold must be positive, got {self.threshold}")

        if self.node_budget is not None and self.node_budget <= 0:
            raise SearchError(f"Budget must be positive, got {self.node_budget}")

        if self.prune_part not in ("total", "plus"):
            raise SearchError(f"Unknown pruning part: {self.prune_part}")

        if self.threads < 1:
            raise SearchError(f"Thread count must be positive, got {self.threads}")


@dataclass(frozen=True)
class Survivor:
    """
    A permutation that passed the threshold.
    """

    permutation: Permutation
    max_psi: Fraction
    f2_half_max: Optional[Fraction] = None

    @property
    def sort_key(self) -> Tuple[Fraction, Tuple[int, ...]]:
        """
        Ranking key, F_2 score first when present.
        """

        score = self.max_psi if self.f2_half_max is None else self.f2_half_max
        return score, self.permutation.image


@dataclass(frozen=True)
class SearchResult:
    """
    Survivors in ranking order plus tree statistics.
    """

    config: SearchConfig
    survivors: Tuple[Survivor, ...]
    nodes: int
    pruned: int
    memo_hits: int
    complete: bool = True

    @property
    def permutations(self) -> Tuple[Permutation, ...]:
        """
        Survivor permutations only.
        """

        return tuple(survivor.permutation for survivor in self.survivors)
