"""
Generalized two-dimensional Hammersley sets

    {(S(n - 1), (n - 1) / b^m) : 1 ≤ n ≤ b^m}

where S applies σ_j to the j-th digit of n - 1 for j < m and every later
digit contributes nothing.
"""

import logging
import math
from fractions import Fraction
from typing import Callable, List, Sequence, Tuple

import numpy as np

from vdcperm.asymptotics.brackets import s_star_swapped
from vdcperm.permutations.families import tau
from vdcperm.psi.functions import psi
from vdcperm.types.bracket import LogConstant
from vdcperm.types.budget import ResourceLimitError
from vdcperm.types.hammersley import (
    HammersleyError,
    HammersleyReport,
    HammersleySpec,
    TrendReport,
    TrendRow,
)
from vdcperm.types.permutation import Permutation
from vdcperm.utils.interval import Interval

__all__ = [
    "POINTS_CAP",
    "BRUTE_CAP",
    "points",
    "formula_parts",
    "star_formula_term",
    "brute_star_2d",
    "hammersley_check",
    "itau_vec",
    "sigma_sbar_vec",
    "trend",
    "itau_limit",
    "itau_asymptotic_check",
    "sigma_sbar_asymptotic_check",
]

logger = logging.getLogger(__name__)

POINTS_CAP = 10**6
BRUTE_CAP = 10**4

Point2D = Tuple[Fraction, Fraction]


def _check_size(spec: HammersleySpec, cap: int) -> None:
    if spec.size > cap:
        raise ResourceLimitError(
            f"{spec.base}^{spec.m} = {spec.size} points exceed the cap of {cap}"
        )


def points(spec: HammersleySpec) -> List[Point2D]:
    """
    The b^m points of the set in the order n = 1..b^m.

    ### Arguments
    - spec: the HammersleySpec.

    ### Returns
    - List of exact `(x, y)` pairs.

    ### Errors
    - ResourceLimitError: more than POINTS_CAP points.
    """

    _check_size(spec, POINTS_CAP)

    base, m, size = spec.base, spec.m, spec.size
    result = []
    for index in range(size):
        numerator = 0
        rest = index
        for position in range(m):
            rest, digit = divmod(rest, base)
            numerator += spec.sigma_vec[position](digit) * base ** (m - 1 - position)

        result.append((Fraction(numerator, size), Fraction(index, size)))

    return result


def _grid(sigma: Permutation, level: int, part: str) -> np.ndarray:
    """
    b^level ψ_part(k / b^level) for k = 0..b^level - 1.
    """

    base = sigma.base
    scale = base**level
    width = base ** (level - 1)
    lines = psi(sigma).part(part).cell_lines(base)

    values = np.empty(scale, dtype=np.int64)
    for cell, cell_lines in enumerate(lines):
        ks = np.arange(cell * width, (cell + 1) * width, dtype=np.int64)
        values[cell * width : (cell + 1) * width] = np.max(
            [slope * ks + intercept * scale for slope, intercept in cell_lines],
            axis=0,
        )

    return values


def formula_parts(spec: HammersleySpec) -> Tuple[Fraction, Fraction]:
    """
    max_n Σ_j ψ⁺_{σ_{j-1}}(n / b^j) and the same sum for ψ⁻, with
    1 ≤ n ≤ b^m and 1 ≤ j ≤ m.
    """

    _check_size(spec, POINTS_CAP)

    base, m, size = spec.base, spec.m, spec.size
    indices = np.arange(1, size + 1, dtype=np.int64)
    sums = {}
    for part in ("plus", "minus"):
        total = np.zeros(size, dtype=np.int64)
        for level in range(1, m + 1):
            grid = _grid(spec.sigma_vec[level - 1], level, part)
            total += grid[indices % base**level] * base ** (m - level)

        sums[part] = Fraction(int(total.max()), size)

    return sums["plus"], sums["minus"]


def star_formula_term(spec: HammersleySpec) -> Fraction:
    """
    The max-of-sums term of the star discrepancy formula, without c_m.

    ### Arguments
    - spec: the HammersleySpec.

    ### Returns
    - The exact term.

    ### Notes
    - The sums over j are evaluated for every n at once with numpy.
    """

    return max(formula_parts(spec))


def brute_star_2d(points_2d: Sequence[Point2D]) -> Fraction:
    """
    Unnormalized star discrepancy sup |A([0, α) × [0, β)) - αβN| of a
    finite planar set.

    ### Arguments
    - points_2d: exact points in [0, 1)².

    ### Returns
    - The exact supremum.

    ### Errors
    - ResourceLimitError: more than BRUTE_CAP points.

    ### Notes
    - The supremum is reached next to a corner (α, β) with α among the
    abscissas and 1 and β among the ordinates and 1: closed counts give
    the excess from the right, open counts the deficit from the left.
    """

    count = len(points_2d)
    if count == 0:
        raise HammersleyError("Empty point set")

    if count > BRUTE_CAP:
        raise ResourceLimitError(f"{count} points exceed the cap of {BRUTE_CAP}")

    scale = math.lcm(*(value.denominator for point in points_2d for value in point))
    dtype = np.int64 if scale * scale * count < 2**62 else object

    xs = np.array([int(x * scale) for x, _ in points_2d], dtype=dtype)
    ys = np.array([int(y * scale) for _, y in points_2d], dtype=dtype)
    alphas = np.unique(np.append(xs, np.array([scale], dtype=dtype)))
    betas = np.unique(np.append(ys, np.array([scale], dtype=dtype)))

    area = scale * scale
    best = 0
    for alpha in alphas:
        closed = np.searchsorted(np.sort(ys[xs <= alpha]), betas, side="right")
        opened = np.searchsorted(np.sort(ys[xs < alpha]), betas, side="left")
        closed, opened = closed.astype(dtype), opened.astype(dtype)
        volume = alpha * betas * count
        best = max(
            best,
            int((closed * area - volume).max()),
            int((volume - opened * area).max()),
        )

    return Fraction(best, area)


def hammersley_check(spec: HammersleySpec) -> HammersleyReport:
    """
    Formula term and brute force star discrepancy of one set.
    """

    report = HammersleyReport(
        spec, star_formula_term(spec), brute_star_2d(points(spec))
    )

    logger.debug(
        "Hammersley %s (b=%d, m=%d): term %s, D* %s, c_m %s",
        spec,
        spec.base,
        spec.m,
        report.term,
        report.brute,
        report.c_m,
    )

    return report


def _split(m: int) -> Tuple[int, int]:
    if m < 1:
        raise HammersleyError(f"m must be at least 1, got {m}")

    return m // 2, m - m // 2


def itau_vec(base: int, m: int) -> List[Permutation]:
    """
    i-τ vector: (m - 1) / 2 identities then (m + 1) / 2 reversals for odd
    m, m / 2 of each for even m.
    """

    first, second = _split(m)
    return [Permutation.identity(base)] * first + [tau(base)] * second


def sigma_sbar_vec(sigma: Permutation, m: int) -> List[Permutation]:
    """
    Same split as `itau_vec` with σ and σ̄ = τ ∘ σ.
    """

    first, second = _split(m)
    return [sigma] * first + [tau(sigma.base).compose(sigma)] * second


def trend(
    base: int,
    m_max: int,
    vector: Callable[[int], Sequence[Permutation]],
    limit: Interval,
) -> TrendReport:
    """
    term / (m log b) for m = 1..m_max of the sets built by `vector(m)`.
    """

    rows = []
    for m in range(1, m_max + 1):
        term = star_formula_term(HammersleySpec(base, m, tuple(vector(m))))
        rows.append(TrendRow(m, term, LogConstant(term / m, base).interval))

    return TrendReport(base, limit, tuple(rows))


def itau_limit(base: int) -> LogConstant:
    """
    Limit of D* / log b^m for i-τ sets: (b - 1) / (8 log b) for odd b,
    b² / (8 (b + 1) log b) for even b.
    """

    if base % 2:
        return LogConstant(Fraction(base - 1, 8), base)

    return LogConstant(Fraction(base * base, 8 * (base + 1)), base)


def itau_asymptotic_check(base: int, m_max: int) -> TrendReport:
    """
    Trend of the i-τ formula term towards its limit.

    ### Arguments
    - base: b, at most 5.
    - m_max: largest m, at most 8.

    ### Returns
    - TrendReport; `approaching` compares the first and last ratios.
    """

    if base > 5 or m_max > 8:
        raise HammersleyError(
            f"The i-τ trend is limited to b ≤ 5 and m ≤ 8, got b={base}, m={m_max}"
        )

    return trend(base, m_max, lambda m: itau_vec(base, m), itau_limit(base).interval)


def sigma_sbar_asymptotic_check(
    sigma: Permutation, m_max: int, **kwargs
) -> TrendReport:
    """
    Trend of the σσ̄ formula term towards (α⁺ + α⁻) / (2 log b), the limit
    being enclosed by the ± brackets of σ (keyword arguments go to
    `alpha_bracket`).
    """

    bracket = s_star_swapped(sigma, **kwargs)
    return trend(
        sigma.base, m_max, lambda m: sigma_sbar_vec(sigma, m), bracket.interval
    )
