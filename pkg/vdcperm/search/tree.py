"""
Pruned tree search for permutations with small max ψ.

A prefix (σ(0), ..., σ(k-1)) already fixes ψ on [0, k/b], and by convexity
its maximum there is max_{j ≤ k} ψ(j/b). ψ(j/b) only depends on the set
V_j of the first j images, so its value is memoized on the bitmask of V_j.
"""

import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Dict, Iterator, List, Sequence, Tuple

from vdcperm.permutations.families import intricate
from vdcperm.psi.functions import max_psi
from vdcperm.types.budget import NodeBudget, ResourceLimitError
from vdcperm.types.permutation import Permutation
from vdcperm.types.search import SearchConfig, SearchError, SearchResult, Survivor
from vdcperm.utils.logging import TRACE

__all__ = ["search", "rank_f2", "set_value"]

logger = logging.getLogger(__name__)

Node = Tuple[Tuple[int, ...], int, int]


def set_value(base: int, mask: int, part: str = "total") -> int:
    """
    b ψ(|V| / b) computed from the set V alone (given as a bitmask).
    `part="plus"` gives b ψ⁺(|V| / b).
    """

    size = bin(mask).count("1")
    highest = 0
    lowest = 0
    below = 0
    for h in range(base):
        # b φ_h(|V|/b) = b #{v ∈ V : v < h} - h |V|
        value = base * below - h * size
        highest = max(highest, value)
        lowest = min(lowest, value)
        if mask >> h & 1:
            below += 1

    return highest if part == "plus" else highest - lowest


class _Tree:
    def __init__(self, config: SearchConfig):
        self.config = config
        self.base = config.base
        self.limit = config.threshold * config.base
        self.budget = NodeBudget(config.node_budget)
        self.memo: Dict[int, int] = {}
        self.lock = threading.Lock()
        self.survivors: List[Tuple[Tuple[int, ...], int]] = []
        self.pruned = 0
        self.memo_hits = 0

    def value(self, mask: int) -> int:
        if not self.config.memoize:
            return set_value(self.base, mask, self.config.prune_part)

        cached = self.memo.get(mask)
        if cached is not None:
            with self.lock:
                self.memo_hits += 1
            return cached

        value = set_value(self.base, mask, self.config.prune_part)
        self.memo[mask] = value
        return value

    def reflection_order(self, prefix: Tuple[int, ...]) -> int:
        """
        Sign of prefix against its reflection x -> -σ(x) mod b, compared
        lexicographically.
        """

        for value in prefix:
            mirrored = (-value) % self.base
            if value != mirrored:
                return -1 if value < mirrored else 1

        return 0

    def children(
        self, prefix: Tuple[int, ...], mask: int, peak: int
    ) -> Iterator[Node]:
        """
        Children of a node that survive the symmetry and threshold tests.
        """

        for image in range(self.base):
            if mask >> image & 1:
                continue

            child = prefix + (image,)
            if self.config.symmetry_reduction and self.reflection_order(child) > 0:
                continue

            child_mask = mask | (1 << image)
            child_peak = max(peak, self.value(child_mask))
            if child_peak >= self.limit:
                with self.lock:
                    self.pruned += 1
                continue

            yield child, child_mask, child_peak

    def expand(self, prefix: Tuple[int, ...], mask: int, peak: int) -> None:
        self.budget.spend()

        if len(prefix) == self.base:
            with self.lock:
                self.survivors.append((prefix, peak))
            logger.log(TRACE, "Survivor %s", prefix)
            return

        for child in self.children(prefix, mask, peak):
            self.expand(*child)

    def seeds(self, depth: int) -> List[Node]:
        """
        Surviving nodes with `depth` fixed images, the units of parallel work.
        """

        roots = [0] if self.config.symmetry_reduction else range(self.base)
        nodes: List[Node] = list(self.children((), 0, 0))
        nodes = [node for node in nodes if node[0][0] in roots]

        for _ in range(1, min(depth, self.base)):
            self.budget.spend(len(nodes))
            nodes = [child for node in nodes for child in self.children(*node)]

        return nodes


def search(config: SearchConfig) -> SearchResult:
    """
    Every permutation with max ψ < T, or one per shift and reflection class.

    ### Arguments
    - config: the SearchConfig.

    ### Returns
    - SearchResult sorted by score; flagged incomplete when the node
    budget ran out.

    ### Errors
    - SearchError: ψ⁺ pruning combined with symmetry reduction, which
    relies on the shift and reflection invariance of ψ.
    """

    if config.symmetry_reduction and config.prune_part != "total":
        raise SearchError("ψ⁺ pruning requires symmetry reduction to be off")

    tree = _Tree(config)
    complete = True
    try:
        seeds = tree.seeds(1 if config.threads <= 1 else 2)
        if config.threads <= 1:
            for seed in seeds:
                tree.expand(*seed)
        else:
            with ThreadPoolExecutor(max_workers=config.threads) as executor:
                futures = [executor.submit(tree.expand, *seed) for seed in seeds]
                for future in futures:
                    future.result()
    except ResourceLimitError:
        logger.warning(
            "Node budget of %d exhausted, returning %d survivors found so far",
            config.node_budget,
            len(tree.survivors),
        )
        complete = False

    survivors = [
        Survivor(Permutation(image), Fraction(peak, config.base))
        for image, peak in tree.survivors
    ]

    if config.prune_part != "total":
        survivors = [
            Survivor(survivor.permutation, max_psi(survivor.permutation)[0])
            for survivor in survivors
        ]

    if config.stage2 and survivors:
        scores = dict(rank_f2([survivor.permutation for survivor in survivors]))
        survivors = [
            Survivor(
                survivor.permutation,
                survivor.max_psi,
                scores[survivor.permutation],
            )
            for survivor in survivors
        ]

    survivors.sort(key=lambda survivor: survivor.sort_key)

    logger.info(
        "Search in base %d below %s: %d survivors, %d nodes, %d pruned, %d memo hits",
        config.base,
        config.threshold,
        len(survivors),
        tree.budget.used,
        tree.pruned,
        tree.memo_hits,
    )

    return SearchResult(
        config=config,
        survivors=tuple(survivors),
        nodes=tree.budget.used,
        pruned=tree.pruned,
        memo_hits=tree.memo_hits,
        complete=complete,
    )


def rank_f2(permutations: Sequence[Permutation]) -> List[Tuple[Permutation, Fraction]]:
    """
    Rank permutations by max F_2 / 2, computed as max ψ of the
    intrication σ·σ in base b². The sort is stable.
    """

    if not permutations:
        return []

    base = permutations[0].base
    if any(permutation.base != base for permutation in permutations):
        raise SearchError("All permutations must share the same base")

    scored = [
        (permutation, max_psi(intricate(permutation, permutation))[0] / 2)
        for permutation in permutations
    ]

    return sorted(scored, key=lambda item: item[1])
