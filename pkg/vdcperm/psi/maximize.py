"""
Exact maximization of F_n(x) = Σ_{t=1..n} ψ({b^{t-1} x}) over the grid k/b^n.

The values ψ(k/b^n) are computed in integers: on the cell [c/b, (c+1)/b)
ψ is the maximum of a few integer lines, so b^t ψ(m/b^t) is an integer
maximum of `slope * m + intercept * b^t`.
"""

import logging
import threading
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Tuple

from vdcperm.psi.functions import max_psi, psi
from vdcperm.types.budget import NodeBudget, ResourceLimitError
from vdcperm.types.permutation import Permutation
from vdcperm.types.piecewise import PARTS, FnMaximum, PsiError

__all__ = [
    "EXHAUSTIVE_CAP",
    "MODES",
    "f_n_max",
    "f_n_at",
    "f_n_eval_periodic",
    "periodic_point",
]

logger = logging.getLogger(__name__)

EXHAUSTIVE_CAP = 5 * 10**7
MODES = ("branch", "exhaustive")

CellLines = Tuple[Tuple[Tuple[int, int], ...], ...]


@lru_cache(maxsize=256)
def _lines(sigma: Permutation, part: str) -> CellLines:
    if part not in PARTS:
        raise PsiError(f"Unknown ψ part: {part}")

    return psi(sigma).part(part).cell_lines(sigma.base)


def _scaled_psi(lines: CellLines, base: int, numerator: int, denominator: int) -> int:
    """
    denominator * ψ(numerator / denominator) for 0 ≤ numerator < denominator.
    """

    cell = numerator * base // denominator
    return max(
        slope * numerator + intercept * denominator for slope, intercept in lines[cell]
    )


def f_n_at(sigma: Permutation, k: int, n: int, part: str = "total") -> Fraction:
    """
    Exact F_n(k / b^n) = Σ_{t=1..n} ψ((k mod b^t) / b^t).
    """

    base = sigma.base
    scale = base**n
    if not 0 <= k < scale:
        raise PsiError(f"k must lie in [0, {scale}), got {k}")

    lines = _lines(sigma, part)
    total = sum(
        _scaled_psi(lines, base, k % base**t, base**t) * base ** (n - t)
        for t in range(1, n + 1)
    )

    return Fraction(total, scale)


class _Search:
    """
    Depth first branch and bound over the base-b digits of k, least
    significant first. All values are scaled by b^n.
    """

    def __init__(self, sigma: Permutation, n: int, part: str, budget: NodeBudget):
        self.base = sigma.base
        self.n = n
        self.lines = _lines(sigma, part)
        self.budget = budget
        self.lock = threading.Lock()
        self.best = 0
        self.best_k = 0

        peak, _ = max_psi(sigma, part)
        # b^{n-1} * max(b ψ) bounds every remaining scaled term
        self.term_bound = int(peak * self.base) * self.base ** (self.n - 1)

    def offer(self, value: int, k: int) -> None:
        with self.lock:
            if value > self.best or (value == self.best and k < self.best_k):
                self.best, self.best_k = value, k

    def expand(self, depth: int, k: int, partial: int) -> None:
        """
        `depth` digits of k are fixed and their terms summed into `partial`.
        """

        base, n = self.base, self.n
        self.budget.spend(base)

        denominator = base ** (depth + 1)
        weight = base ** (n - depth - 1)
        remaining = (n - depth - 1) * self.term_bound
        for digit in range(base):
            child = k + digit * base**depth
            value = partial + _scaled_psi(self.lines, base, child, denominator) * weight

            if depth + 1 == n:
                self.offer(value, child)
                continue

            if value + remaining < self.best:
                continue

            self.expand(depth + 1, child, value)


def _exhaustive(sigma: Permutation, n: int, part: str, budget: NodeBudget, cap: int):
    base = sigma.base
    scale = base**n
    if scale > cap:
        raise ResourceLimitError(
            f"Exhaustive F_{n} in base {base} needs {scale} evaluations, cap is {cap}"
        )

    lines = _lines(sigma, part)
    best, best_k = 0, 0
    for k in range(scale):
        budget.spend()
        value = sum(
            _scaled_psi(lines, base, k % base**t, base**t) * base ** (n - t)
            for t in range(1, n + 1)
        )
        if value > best:
            best, best_k = value, k

    return best, best_k


def f_n_max(
    sigma: Permutation,
    n: int,
    mode: str = "branch",
    part: str = "total",
    budget: Optional[NodeBudget] = None,
    threads: int = 1,
    exhaustive_cap: int = EXHAUSTIVE_CAP,
) -> FnMaximum:
    """
    Exact maximum of F_n over [0, 1].

    ### Arguments
    - sigma: the permutation.
    - n: number of terms, at least 1.
    - mode: `branch` (pruned digit tree) or `exhaustive` (every k/b^n).
    - part: `total`, `plus` or `minus`.
    - budget: optional node budget.
    - threads: workers splitting the tree on the least significant digit.
    - exhaustive_cap: largest b^n accepted by the exhaustive mode.

    ### Returns
    - FnMaximum with the smallest argmax.

    ### Errors
    - ResourceLimitError: budget exhausted or exhaustive cap exceeded.

    ### Notes
    - The maximum is reached on the grid k/b^n because ψ is convex between
    consecutive multiples of 1/b.
    """

    if n < 1:
        raise PsiError(f"n must be at least 1, got {n}")

    if mode not in MODES:
        raise PsiError(f"Unknown mode {mode!r}, choose from {', '.join(MODES)}")

    budget = budget or NodeBudget()
    base = sigma.base

    if mode == "exhaustive":
        best, best_k = _exhaustive(sigma, n, part, budget, exhaustive_cap)
    else:
        search = _Search(sigma, n, part, budget)
        if threads <= 1 or n == 1:
            search.expand(0, 0, 0)
        else:
            budget.spend(base)
            first = [
                (digit, _scaled_psi(search.lines, base, digit, base) * base ** (n - 1))
                for digit in range(base)
            ]
            with ThreadPoolExecutor(max_workers=threads) as executor:
                futures = [
                    executor.submit(search.expand, 1, digit, value)
                    for digit, value in first
                ]
                for future in futures:
                    future.result()

        best, best_k = search.best, search.best_k

    result = FnMaximum(
        value=Fraction(best, base**n),
        argmax=Fraction(best_k, base**n),
        n=n,
        digits=tuple((best_k // base**t) % base for t in range(n)),
        nodes=budget.used,
    )

    logger.debug("%s: %s (%d nodes)", sigma, result.describe(base), budget.used)

    return result


def periodic_point(base: int, cycle: Sequence[int]) -> Fraction:
    """
    The point whose base-b digits after the radix point repeat `cycle`.
    """

    cycle = tuple(cycle)
    if not cycle:
        raise PsiError("Empty digit cycle")

    if any(not 0 <= digit < base for digit in cycle):
        raise PsiError(f"Digit cycle {cycle} is not in base {base}")

    numerator = 0
    for digit in cycle:
        numerator = numerator * base + digit

    return Fraction(numerator, base ** len(cycle) - 1) % 1


def f_n_eval_periodic(
    sigma: Permutation,
    cycle: Sequence[int],
    reps: int = 1,
    part: str = "total",
) -> Fraction:
    """
    F_{rq}(x̂) / (rq) at the periodic point x̂ of a q-digit cycle.

    ### Arguments
    - sigma: the permutation.
    - cycle: digits d_1..d_q of x̂ after the radix point.
    - reps: number of periods r.
    - part: `total`, `plus` or `minus`.

    ### Returns
    - The exact average, which does not depend on r.

    ### Notes
    - {b^j x̂} runs through the q rotations of the cycle, so the average
    is a lower bound for the asymptotic constant.
    """

    if reps < 1:
        raise PsiError(f"reps must be at least 1, got {reps}")

    base = sigma.base
    cycle = tuple(cycle)
    periodic_point(base, cycle)

    lines = _lines(sigma, part)
    denominator = base ** len(cycle) - 1
    numerator = 0
    for digit in cycle:
        numerator = numerator * base + digit

    total = 0
    for shift in range(len(cycle) * reps):
        rotated = (numerator * pow(base, shift, denominator)) % denominator
        total += _scaled_psi(lines, base, rotated, denominator)

    return Fraction(total, denominator * len(cycle) * reps)
