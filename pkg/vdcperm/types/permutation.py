"""
Permutation module that holds the Permutation, DigitVector and
ContinuedFraction classes.
"""

from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, Tuple

__all__ = ["Permutation", "DigitVector", "ContinuedFraction", "PermutationError"]


class PermutationError(Exception):
    """
    Base class for all exceptions related to permutations.
    """


@dataclass(frozen=True)
class Permutation:
    """
    A bijection of {0, ..., b-1}, stored as its dense image array.
    `image[i]` is the value assigned to the digit `i`.
    """

    image: Tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(value) for value in self.image)
        object.__setattr__(self, "image", image)

        if len(image) < 2:
            raise PermutationError(
                f"A permutation needs a base of at least 2, got {len(image)}"
            )

        if sorted(image) != list(range(len(image))):
            raise PermutationError(
                f"{','.join(map(str, image))} is not a permutation "
                f"of 0..{len(image) - 1}"
            )

    @property
    def base(self) -> int:
        """
        The base b the permutation acts on.
        """

        return len(self.image)

    @classmethod
    def identity(cls, base: int) -> "Permutation":
        """
        Identity permutation in the given base.

        ### Arguments
        - base: the base, at least 2.

        ### Returns
        - The identity permutation.
        """

        if base < 2:
            raise PermutationError(f"Invalid base: {base}")

        return cls(tuple(range(base)))

    @classmethod
    def from_string(cls, text: str) -> "Permutation":
        """
        Parse the comma separated text format, e.g. `0,7,3,10,5,2,9,6,1,8,4,11`.

        ### Arguments
        - text: the permutation literal.

        ### Returns
        - The parsed permutation, base inferred from the length.

        ### Errors
        - PermutationError: if the text is not a list of integers or not a bijection.
        """

        try:
            values = [int(value) for value in text.strip().split(",")]
        except ValueError as exception:
            raise PermutationError(
                f"Invalid permutation literal: {text!r}"
            ) from exception

        return cls(tuple(values))

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Permutation":
        """
        Create a Permutation object from a dictionary.

        ### Arguments
        - data: The dictionary, as produced by `json`.

        ### Returns
        - The Permutation object.
        """

        permutation = cls(tuple(data["image"]))
        if "base" in data and data["base"] != permutation.base:
            raise PermutationError(
                f"Base mismatch: declared {data['base']}, found {permutation.base}"
            )

        return permutation

    @property
    def json(self) -> Dict[str, Any]:
        """
        Returns a dictionary of the permutation's data.
        """

        return {"base": self.base, "image": list(self.image)}

    def __str__(self) -> str:
        return ",".join(str(value) for value in self.image)

    def __call__(self, digit: int) -> int:
        return self.image[digit]

    def __len__(self) -> int:
        return len(self.image)

    def __iter__(self) -> Iterator[int]:
        return iter(self.image)

    def compose(self, other: "Permutation") -> "Permutation":
        """
        Composition `self ∘ other`, i.e. `x -> self(other(x))`.

        ### Arguments
        - other: permutation applied first, same base.

        ### Returns
        - The composed permutation.
        """

        if other.base != self.base:
            raise PermutationError(
                f"Cannot compose bases {self.base} and {other.base}"
            )

        return Permutation(tuple(self.image[value] for value in other.image))

    def inverse(self) -> "Permutation":
        """
        Inverse permutation.
        """

        inverse = [0] * self.base
        for index, value in enumerate(self.image):
            inverse[value] = index

        return Permutation(tuple(inverse))

    @property
    def is_identity(self) -> bool:
        """
        True if the permutation fixes every digit.
        """

        return all(index == value for index, value in enumerate(self.image))


@dataclass(frozen=True)
class DigitVector:
    """
    Finite base-b expansion, least significant digit first.
    Digits past the stored length are zero.
    """

    base: int
    digits: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))

        if self.base < 2:
            raise PermutationError(f"Invalid base: {self.base}")

        for digit in self.digits:
            if not 0 <= digit < self.base:
                raise PermutationError(
                    f"Digit {digit} out of range for base {self.base}"
                )

    @property
    def value(self) -> int:
        """
        The integer the digits represent.
        """

        return sum(digit * self.base**index for index, digit in enumerate(self.digits))

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self) -> Iterator[int]:
        return iter(self.digits)

    def __str__(self) -> str:
        return ";".join(str(digit) for digit in self.digits)

    @classmethod
    def from_string(cls, base: int, text: str) -> "DigitVector":
        """
        Parse a `;` or `,` separated digit list.
        """

        parts: Iterable[str] = text.replace(";", ",").split(",")
        try:
            return cls(base, tuple(int(part) for part in parts if part.strip()))
        except ValueError as exception:
            raise PermutationError(f"Invalid digit list: {text!r}") from exception


@dataclass(frozen=True)
class ContinuedFraction:
    """
    Expansion numerator/denominator = [0; q_1, ..., q_m] in canonical form
    (last quotient at least 2).
    """

    numerator: int
    denominator: int
    quotients: Tuple[int, ...]

    @property
    def alpha_max(self) -> int:
        """
        Largest partial quotient.
        """

        return max(self.quotients)

    @property
    def value(self) -> Fraction:
        """
        Rational value rebuilt from the quotients.
        """

        value = Fraction(0)
        for quotient in reversed(self.quotients):
            value = 1 / (quotient + value)

        return value

    @property
    def json(self) -> Dict[str, Any]:
        """
        Returns a dictionary of the expansion.
        """

        return {**asdict(self), "alpha_max": self.alpha_max}

    def __str__(self) -> str:
        return f"[0; {', '.join(str(quotient) for quotient in self.quotients)}]"
