"""
Piecewise affine functions on the unit circle, the container for the
φ and ψ families.
"""

import math
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from numbers import Rational
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from vdcperm.types.permutation import Permutation

__all__ = [
    "Piece",
    "PiecewiseAffine",
    "PsiTriple",
    "PartialPsi",
    "FnMaximum",
    "PsiError",
    "PARTS",
]

PARTS = ("total", "plus", "minus")

Number = Union[int, Fraction]


class PsiError(Exception):
    """
    Base class for all exceptions related to φ/ψ functions.
    """


class Piece(NamedTuple):
    """
    Affine piece `slope * x + intercept`, valid from `start` up to the next
    piece's start.
    """

    start: Fraction
    slope: Fraction
    intercept: Fraction

    def at(self, x: Number) -> Fraction:
        """
        Value of the affine map at x.
        """

        return self.slope * x + self.intercept


def _fraction(value: Number) -> Fraction:
    if isinstance(value, Rational):
        return Fraction(value)

    raise PsiError(f"Exact rational expected, got {value!r}")


def _upper_envelope(
    lines: Iterable[Tuple[Fraction, Fraction]], low: Fraction, high: Fraction
) -> List[Piece]:
    """
    Upper envelope of a set of lines restricted to [low, high).
    """

    best: Dict[Fraction, Fraction] = {}
    for slope, intercept in lines:
        if slope not in best or intercept > best[slope]:
            best[slope] = intercept

    hull: List[Tuple[Fraction, Fraction]] = []
    for line in sorted(best.items()):
        while len(hull) >= 2:
            (s1, c1), (s2, c2) = hull[-2], hull[-1]
            s3, c3 = line
            # middle line never strictly on top
            if (c1 - c3) * (s2 - s1) <= (c1 - c2) * (s3 - s1):
                hull.pop()
            else:
                break
        hull.append(line)

    pieces: List[Piece] = []
    for index, (slope, intercept) in enumerate(hull):
        start = low
        if index > 0:
            prev_slope, prev_intercept = hull[index - 1]
            start = max(low, (prev_intercept - intercept) / (slope - prev_slope))

        end = high
        if index + 1 < len(hull):
            next_slope, next_intercept = hull[index + 1]
            end = min(high, (intercept - next_intercept) / (next_slope - slope))

        if start < end:
            pieces.append(Piece(start, slope, intercept))

    return pieces


@dataclass(frozen=True)
class PiecewiseAffine:
    """
    1-periodic piecewise affine function. Pieces are half-open,
    [start_i, start_{i+1}), so the value at a breakpoint is taken
    from the piece on its right.
    """

    pieces: Tuple[Piece, ...]
    continuous: bool = True

    def __post_init__(self):
        pieces = tuple(
            Piece(_fraction(p.start), _fraction(p.slope), _fraction(p.intercept))
            for p in self.pieces
        )
        object.__setattr__(self, "pieces", pieces)

        if not pieces or pieces[0].start != 0:
            raise PsiError("The first piece must start at 0")

        for left, right in zip(pieces, pieces[1:]):
            if not left.start < right.start:
                raise PsiError("Breakpoints must be strictly increasing")

        if pieces[-1].start >= 1:
            raise PsiError("Breakpoints must lie in [0, 1)")

    @classmethod
    def canonical(
        cls, pieces: Sequence[Piece], continuous: bool = True
    ) -> "PiecewiseAffine":
        """
        Build a function, merging adjacent pieces with equal coefficients.
        """

        merged: List[Piece] = []
        for piece in pieces:
            if merged and (merged[-1].slope, merged[-1].intercept) == (
                piece.slope,
                piece.intercept,
            ):
                continue

            merged.append(piece)

        return cls(tuple(merged), continuous)

    @classmethod
    def constant(cls, value: Number = 0) -> "PiecewiseAffine":
        """
        Constant function.
        """

        return cls((Piece(Fraction(0), Fraction(0), _fraction(value)),))

    @cached_property
    def breakpoints(self) -> Tuple[Fraction, ...]:
        """
        Piece starts in increasing order.
        """

        return tuple(piece.start for piece in self.pieces)

    def piece_index(self, x: Number) -> int:
        """
        Index of the piece holding `x mod 1`.
        """

        reduced = _fraction(x) - math.floor(x)
        return bisect_right(self.breakpoints, reduced) - 1

    def __call__(self, x: Number) -> Fraction:
        reduced = _fraction(x) - math.floor(x)
        return self.pieces[bisect_right(self.breakpoints, reduced) - 1].at(reduced)

    def piece_end(self, index: int) -> Fraction:
        """
        Right end of the piece with the given index.
        """

        if index + 1 < len(self.pieces):
            return self.pieces[index + 1].start

        return Fraction(1)

    def __add__(self, other: "PiecewiseAffine") -> "PiecewiseAffine":
        starts = sorted(set(self.breakpoints) | set(other.breakpoints))
        pieces = []
        for start in starts:
            left = self.pieces[self.piece_index(start)]
            right = other.pieces[other.piece_index(start)]
            pieces.append(
                Piece(
                    start,
                    left.slope + right.slope,
                    left.intercept + right.intercept,
                )
            )

        return PiecewiseAffine.canonical(pieces, self.continuous and other.continuous)

    def __neg__(self) -> "PiecewiseAffine":
        return PiecewiseAffine(
            tuple(Piece(p.start, -p.slope, -p.intercept) for p in self.pieces),
            self.continuous,
        )

    @classmethod
    def maximum(cls, functions: Sequence["PiecewiseAffine"]) -> "PiecewiseAffine":
        """
        Pointwise maximum, computed per common interval by an upper hull sweep
        with exact intersection points.

        ### Arguments
        - functions: at least one function.

        ### Returns
        - The canonical pointwise maximum.
        """

        if not functions:
            raise PsiError("Maximum of an empty family")

        starts = sorted(set().union(*(f.breakpoints for f in functions)))
        ends = starts[1:] + [Fraction(1)]
        pieces: List[Piece] = []
        for start, end in zip(starts, ends):
            lines = []
            for function in functions:
                piece = function.pieces[function.piece_index(start)]
                lines.append((piece.slope, piece.intercept))

            pieces.extend(_upper_envelope(lines, start, end))

        return cls.canonical(pieces, all(f.continuous for f in functions))

    @classmethod
    def envelope(
        cls,
        cells: Sequence[Tuple[Fraction, Fraction, Iterable[Tuple[Number, Number]]]],
        continuous: bool = True,
    ) -> "PiecewiseAffine":
        """
        Build the function that equals the upper envelope of the given lines
        on each cell.

        ### Arguments
        - cells: `(start, end, lines)` covering [0, 1) in order.
        """

        pieces: List[Piece] = []
        for start, end, lines in cells:
            exact = [(_fraction(s), _fraction(c)) for s, c in lines]
            pieces.extend(_upper_envelope(exact, start, end))

        return cls.canonical(pieces, continuous)

    def max_on_unit(self) -> Tuple[Fraction, Fraction]:
        """
        Exact supremum over [0, 1) and the smallest point reaching it.

        ### Returns
        - Tuple of (value, argmax).

        ### Notes
        - For discontinuous functions the supremum may be a left limit; the
        reported argmax is then the right end of that piece.
        """

        candidates = [(piece.at(piece.start), piece.start) for piece in self.pieces]
        if not self.continuous:
            candidates.extend(
                (piece.at(self.piece_end(index)), self.piece_end(index))
                for index, piece in enumerate(self.pieces)
            )

        value = max(candidate[0] for candidate in candidates)
        argmax = min(x for v, x in candidates if v == value)

        return value, argmax

    def restrict(self, end: Fraction) -> Tuple[Piece, ...]:
        """
        Pieces meeting [0, end).
        """

        return tuple(piece for piece in self.pieces if piece.start < end)

    def cell_lines(self, base: int) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
        """
        Integer (slope, intercept) pairs of the pieces meeting every cell
        [k/b, (k+1)/b). Only valid for functions that are convex on each cell
        with integer coefficients, which is the case for the ψ family; the
        value on cell k is then the maximum of its lines.
        """

        cells = []
        for index in range(base):
            high = Fraction(index + 1, base)
            position = self.piece_index(Fraction(index, base))
            lines = []
            while position < len(self.pieces) and self.pieces[position].start < high:
                piece = self.pieces[position]
                if piece.slope.denominator != 1 or piece.intercept.denominator != 1:
                    raise PsiError("Cell lines need integer coefficients")

                lines.append((piece.slope.numerator, piece.intercept.numerator))
                position += 1

            cells.append(tuple(lines))

        return tuple(cells)


@dataclass(frozen=True)
class PsiTriple:
    """
    ψ⁺, ψ⁻ and ψ = ψ⁺ + ψ⁻ of a permutation.
    """

    permutation: Permutation
    plus: PiecewiseAffine
    minus: PiecewiseAffine
    total: PiecewiseAffine

    @property
    def base(self) -> int:
        """
        Base of the source permutation.
        """

        return self.permutation.base

    def part(self, name: str) -> PiecewiseAffine:
        """
        Select `total`, `plus` or `minus`.
        """

        if name not in PARTS:
            raise PsiError(f"Unknown ψ part: {name}")

        return getattr(self, name)


@dataclass(frozen=True)
class PartialPsi:
    """
    ψ restricted to [0, k/b) for a prefix of k images.
    """

    base: int
    prefix: Tuple[int, ...]
    values: Tuple[Fraction, ...]
    pieces: Tuple[Piece, ...]

    @property
    def max_value(self) -> Fraction:
        """
        Maximum of ψ over [0, k/b].
        """

        return max(self.values, default=Fraction(0))

    @property
    def last_piece(self) -> Tuple[Piece, ...]:
        """
        Pieces on the last cell [(k-1)/b, k/b).
        """

        low = Fraction(len(self.prefix) - 1, self.base)
        active = [piece for piece in self.pieces if piece.start <= low][-1:]
        later = [piece for piece in self.pieces if piece.start > low]

        return tuple(
            Piece(max(piece.start, low), piece.slope, piece.intercept)
            for piece in active + later
        )


@dataclass(frozen=True)
class FnMaximum:
    """
    Exact maximum of F_n over [0, 1] with its smallest argmax k/b^n.
    """

    value: Fraction
    argmax: Fraction
    n: int
    digits: Tuple[int, ...]
    nodes: int = 0

    @property
    def normalized(self) -> Fraction:
        """
        max F_n / n.
        """

        return self.value / self.n

    def describe(self, base: Optional[int] = None) -> str:
        """
        Short human readable summary.
        """

        where = f"x = {self.argmax}"
        if base is not None:
            where += f" (digits {';'.join(map(str, self.digits))} in base {base})"

        return f"max F_{self.n} = {self.value} at {where}"
