"""
The φ_{b,h}^σ family and the ψ functions built from it.

On the cell [(k-1)/b, k/b) the function φ_h is the line
`c - h x` when h ≤ σ(k-1) and `(b - h) x - (k - c)` otherwise, where
c = #{i < k : σ(i) < h}. ψ⁺ = max_h φ_h, ψ⁻ = max_h -φ_h, ψ = ψ⁺ + ψ⁻.
Every φ_h is continuous on the circle, so the three ψ functions are
continuous and convex on each cell.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

import numpy as np

from vdcperm.types.permutation import Permutation
from vdcperm.types.piecewise import (
    PARTS,
    PartialPsi,
    Piece,
    PiecewiseAffine,
    PsiError,
    PsiTriple,
)

__all__ = [
    "phi",
    "psi",
    "psi_at",
    "partial_psi",
    "breakpoint_values",
    "max_psi",
    "near_zero_slopes",
]

logger = logging.getLogger(__name__)

Lines = List[Tuple[int, int]]


def _cells(base: int, images: Sequence[int]) -> Iterator[Tuple[int, Lines, Lines]]:
    """
    Yield `(k, phi_lines, negated_lines)` for the cells k = 1..len(images).
    """

    below = [0] * (base + 1)  # below[h] = #{i < k : σ(i) < h}
    for cell, value in enumerate(images, start=1):
        for h in range(value + 1, base + 1):
            below[h] += 1

        lines = []
        for h in range(base):
            if h <= value:
                lines.append((-h, below[h]))
            else:
                lines.append((base - h, below[h] - cell))

        yield cell, lines, [(-slope, -intercept) for slope, intercept in lines]


def phi(sigma: Permutation, h: int) -> PiecewiseAffine:
    """
    φ_{b,h}^σ as a piecewise affine function with breakpoints k/b.

    ### Arguments
    - sigma: the permutation.
    - h: 0 ≤ h < b.

    ### Returns
    - The canonical function (φ_{b,0} is identically 0).
    """

    base = sigma.base
    if not 0 <= h < base:
        raise PsiError(f"h must lie in [0, {base}), got {h}")

    pieces = []
    for cell, lines, _ in _cells(base, sigma.image):
        slope, intercept = lines[h]
        pieces.append(
            Piece(Fraction(cell - 1, base), Fraction(slope), Fraction(intercept))
        )

    return PiecewiseAffine.canonical(pieces)


@lru_cache(maxsize=1024)
def psi(sigma: Permutation) -> PsiTriple:
    """
    ψ⁺, ψ⁻ and ψ of a permutation, each in canonical piece form.

    ### Arguments
    - sigma: the permutation.

    ### Returns
    - The PsiTriple.
    """

    base = sigma.base
    plus_cells = []
    minus_cells = []
    for cell, lines, negated in _cells(base, sigma.image):
        low, high = Fraction(cell - 1, base), Fraction(cell, base)
        plus_cells.append((low, high, lines))
        minus_cells.append((low, high, negated))

    plus = PiecewiseAffine.envelope(plus_cells)
    minus = PiecewiseAffine.envelope(minus_cells)
    total = plus + minus

    logger.debug(
        "ψ of %s: %d/%d/%d pieces",
        sigma,
        len(plus.pieces),
        len(minus.pieces),
        len(total.pieces),
    )

    return PsiTriple(sigma, plus, minus, total)


def psi_at(sigma: Permutation, x: Fraction, part: str = "total") -> Fraction:
    """
    Exact value of ψ (or ψ⁺, ψ⁻) at a rational point, 1-periodic.

    ### Notes
    - Only the lines of the cell holding x are built, which keeps a single
    evaluation linear in b.
    """

    if part not in PARTS:
        raise PsiError(f"Unknown ψ part: {part}")

    base = sigma.base
    x = Fraction(x) % 1
    numerator, denominator = x.numerator, x.denominator
    cell = numerator * base // denominator + 1

    images = np.asarray(sigma.image[:cell], dtype=np.int64)
    below = np.concatenate(([0], np.cumsum(np.bincount(images, minlength=base))))[:base]
    h = np.arange(base, dtype=np.int64)
    upper = h <= sigma(cell - 1)
    slopes = np.where(upper, -h, base - h)
    intercepts = np.where(upper, below, below - cell)

    if denominator * base >= 2**31:
        slopes, intercepts = slopes.astype(object), intercepts.astype(object)

    scaled = slopes * numerator + intercepts * denominator
    plus, minus = int(scaled.max()), -int(scaled.min())

    value = {"total": plus + minus, "plus": plus, "minus": minus}[part]
    return Fraction(value, denominator)


def near_zero_slopes(sigma: Permutation) -> Tuple[int, int, int]:
    """
    Slopes of (ψ⁺, ψ⁻, ψ) on [0, 1/b]: b - 1 - σ(0), σ(0) and b - 1.
    """

    base = sigma.base
    return base - 1 - sigma(0), sigma(0), base - 1


def partial_psi(base: int, prefix: Sequence[int]) -> PartialPsi:
    """
    ψ on [0, k/b) for the first k images of a permutation.

    ### Arguments
    - base: b.
    - prefix: k distinct images.

    ### Returns
    - Values ψ(j/b) for j = 1..k and the pieces on [0, k/b).

    ### Notes
    - ψ on the cell [(j-1)/b, j/b) only depends on the set of the first j
    images, so two prefixes with equal sets share ψ(k/b) and the last cell.
    """

    prefix = tuple(prefix)
    if len(set(prefix)) != len(prefix):
        raise PsiError(f"Duplicate images in prefix {prefix}")

    for value in prefix:
        if not 0 <= value < base:
            raise PsiError(f"Image {value} out of range for base {base}")

    if not prefix:
        return PartialPsi(base, prefix, (), ())

    plus_cells = []
    minus_cells = []
    values = []
    for cell, lines, negated in _cells(base, prefix):
        low, high = Fraction(cell - 1, base), Fraction(cell, base)
        plus_cells.append((low, high, lines))
        minus_cells.append((low, high, negated))

        # at x = cell/b each φ_h equals below[h] - h cell / b
        scaled = [slope * cell + base * intercept for slope, intercept in lines]
        values.append(Fraction(max(scaled) - min(scaled), base))

    end = Fraction(len(prefix), base)
    if len(prefix) < base:
        plus_cells.append((end, Fraction(1), [(0, 0)]))
        minus_cells.append((end, Fraction(1), [(0, 0)]))

    total = PiecewiseAffine.envelope(plus_cells) + PiecewiseAffine.envelope(minus_cells)

    return PartialPsi(base, prefix, tuple(values), total.restrict(end))


def breakpoint_values(sigma: Permutation) -> Tuple[np.ndarray, np.ndarray]:
    """
    b ψ⁺(k/b) and b ψ⁻(k/b) for k = 0..b as integer arrays.

    ### Notes
    - With C[k, h] = #{i < k : σ(i) < h}, b φ_h(k/b) = b C[k, h] - h k.
    """

    base = sigma.base
    hits = np.zeros((base, base), dtype=np.int64)
    hits[np.arange(base), np.asarray(sigma.image)] = 1

    prefix_hits = np.vstack(
        [np.zeros((1, base), dtype=np.int64), np.cumsum(hits, axis=0)]
    )
    below = np.hstack(
        [
            np.zeros((base + 1, 1), dtype=np.int64),
            np.cumsum(prefix_hits, axis=1)[:, :-1],
        ]
    )

    scaled = base * below - np.outer(np.arange(base + 1), np.arange(base))

    return scaled.max(axis=1), (-scaled).max(axis=1)


def max_psi(sigma: Permutation, part: str = "total") -> Tuple[Fraction, Fraction]:
    """
    Maximum of ψ (or ψ⁺, ψ⁻) over [0, 1) and its smallest argmax.
    Convexity on every cell puts the maximum on a breakpoint k/b.
    """

    if part not in PARTS:
        raise PsiError(f"Unknown ψ part: {part}")

    plus, minus = breakpoint_values(sigma)
    values = {"total": plus + minus, "plus": plus, "minus": minus}[part]
    index = int(np.argmax(values[:-1]))

    return Fraction(int(values[index]), sigma.base), Fraction(index, sigma.base)
