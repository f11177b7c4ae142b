"""
Record permutations with their published asymptotic constants.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from vdcperm.types.bracket import LogConstant
from vdcperm.types.permutation import Permutation, PermutationError

__all__ = ["Record", "RECORDS", "get_record", "record_names"]


@dataclass(frozen=True)
class Record:
    """
    A named permutation and the constant it is known for.

    - `measure`: `s` (extreme discrepancy, constant σ), `s_star` (star
    discrepancy under the block swap schedule) or `diaphony`.
    - `constant`: exact value as rational / log b when published in that form.
    - `bounds`: published open float bounds when only those are known.
    """

    name: str
    permutation: Permutation
    measure: str
    constant: Optional[LogConstant] = None
    bounds: Optional[Tuple[float, float]] = None
    note: str = ""


def _record(
    name: str,
    image: Tuple[int, ...],
    measure: str,
    rational: Optional[Fraction] = None,
    bounds: Optional[Tuple[float, float]] = None,
    note: str = "",
) -> Record:
    permutation = Permutation(image)
    constant = None if rational is None else LogConstant(rational, permutation.base)
    return Record(name, permutation, measure, constant, bounds, note)


# fmt: off
RECORDS: Dict[str, Record] = {
    record.name: record
    for record in (
        _record(
            "faure12",
            (0, 7, 3, 10, 5, 2, 9, 6, 1, 8, 4, 11),
            "s",
            bounds=(0.375, 0.38),
            note="Faure 1981, base 12",
        ),
        _record(
            "faure12_swap",
            (0, 5, 9, 3, 7, 1, 10, 4, 8, 2, 6, 11),
            "s_star",
            rational=Fraction(1919, 3454),
            note="Faure 1981, base 12 under the block swap schedule",
        ),
        _record(
            "faure36",
            (
                0, 25, 17, 7, 31, 11, 20, 3, 27, 13, 34, 22, 5, 15, 29, 9, 23, 1,
                18, 32, 8, 28, 14, 4, 21, 33, 12, 26, 2, 19, 10, 30, 6, 16, 24, 35,
            ),
            "s",
            rational=Fraction(46, 35),
            note="Faure 1992, base 36",
        ),
        _record(
            "ostromoukhov84",
            (
                0, 22, 64, 32, 50, 76, 10, 38, 56, 18, 72, 45, 6, 28, 59, 79, 41,
                13, 67, 25, 54, 2, 36, 70, 16, 48, 81, 30, 61, 8, 43, 74, 20, 52,
                4, 34, 66, 15, 46, 77, 26, 11, 62, 39, 82, 57, 23, 69, 33, 3, 51,
                19, 73, 42, 7, 60, 29, 80, 47, 14, 65, 35, 1, 53, 24, 68, 12, 40,
                78, 58, 27, 5, 44, 71, 17, 55, 37, 83, 21, 49, 75, 9, 31, 63,
            ),
            "s",
            rational=Fraction(130, 83),
            note="Ostromoukhov 2009, base 84",
        ),
        _record(
            "ostromoukhov60",
            (
                0, 15, 30, 40, 2, 48, 20, 35, 8, 52, 23, 43, 12, 26, 55, 4, 32, 45,
                17, 37, 6, 50, 28, 10, 57, 21, 41, 13, 33, 54, 1, 25, 46, 18, 38,
                5, 49, 29, 9, 58, 22, 42, 14, 34, 53, 3, 27, 47, 16, 36, 7, 51, 19,
                44, 31, 11, 56, 24, 39, 59,
            ),
            "s_star",
            rational=Fraction(32209, 35400),
            note="Ostromoukhov 2009, base 60, ψ⁻ vanishes",
        ),
        _record(
            "chaix_faure19",
            (0, 11, 5, 15, 9, 3, 17, 7, 13, 1, 12, 6, 16, 2, 8, 14, 4, 10, 18),
            "diaphony",
            note="Chaix and Faure 1993, base 19",
        ),
        _record(
            "pausinger_schmid57",
            (
                0, 24, 37, 8, 43, 18, 52, 29, 11, 48, 33, 4, 21, 40, 14, 54, 26,
                45, 6, 35, 16, 50, 31, 2, 20, 39, 10, 47, 27, 55, 13, 42, 23, 3,
                32, 51, 17, 36, 7, 46, 28, 56, 15, 41, 22, 5, 34, 49, 9, 25, 53,
                38, 12, 30, 1, 19, 44,
            ),
            "diaphony",
            note="Pausinger and Schmid 2010, base 57",
        ),
        _record("omega3", (0, 1, 2), "omega"),
        _record("omega7", (0, 4, 1, 3, 5, 2, 6), "omega"),
        _record(
            "omega15",
            (0, 8, 4, 12, 1, 9, 3, 7, 11, 5, 13, 2, 10, 6, 14),
            "omega",
        ),
        _record(
            "omega31",
            (
                0, 16, 8, 24, 4, 20, 12, 28, 1, 17, 9, 25, 3, 19, 7, 15, 23, 11,
                27, 5, 21, 13, 29, 2, 18, 10, 26, 6, 22, 14, 30,
            ),
            "omega",
        ),
    )
}
# fmt: on


def record_names() -> Tuple[str, ...]:
    """
    Names of every catalogued permutation.
    """

    return tuple(sorted(RECORDS))


def get_record(name: str) -> Record:
    """
    Look up a record by name.

    ### Errors
    - PermutationError: unknown name.
    """

    try:
        return RECORDS[name]
    except KeyError as exception:
        raise PermutationError(
            f"Unknown record {name!r}, choose from {', '.join(record_names())}"
        ) from exception
