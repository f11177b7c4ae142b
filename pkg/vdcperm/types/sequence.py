"""
Sequence module that holds the swap schedules, permutation sequences and
the values produced from them.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import isqrt
from typing import Any, Dict, FrozenSet, Iterable, Optional, Tuple, Union

from vdcperm.types.permutation import Permutation

__all__ = [
    "SwapSchedule",
    "SigmaSequence",
    "SeqPoint",
    "Enclosure",
    "DiscrepancyReport",
    "DiscrepancyError",
    "Exact",
]


class DiscrepancyError(Exception):
    """
    Base class for all exceptions related to sequences and discrepancy.
    """


def in_faure_a(index: int) -> bool:
    """
    Membership in A = ∪_H {H(H-1)+1, ..., H²}.
    """

    if index < 1:
        return False

    block = isqrt(index - 1) + 1
    return index > block * block - block


@dataclass(frozen=True)
class SwapSchedule:
    """
    Set of digit positions keeping σ; every other position uses τ_b ∘ σ.

    - `faure-a`: the block set A.
    - `periodic`: membership of j is `pattern[j % len(pattern)]`.
    - `explicit`: j is a member iff j is in `members`, or `default` is set
    and j is past the largest listed member.
    """

    kind: str
    pattern: Tuple[bool, ...] = ()
    members: FrozenSet[int] = field(default_factory=frozenset)
    default: bool = False

    def __post_init__(self):
        if self.kind not in ("faure-a", "periodic", "explicit"):
            raise DiscrepancyError(f"Unknown swap schedule: {self.kind}")

        if self.kind == "periodic" and not self.pattern:
            raise DiscrepancyError("A periodic schedule needs a pattern")

    @classmethod
    def faure_a(cls) -> "SwapSchedule":
        """
        The block schedule A.
        """

        return cls("faure-a")

    @classmethod
    def periodic(cls, pattern: Iterable[bool]) -> "SwapSchedule":
        """
        Schedule repeating the given membership pattern.
        """

        return cls("periodic", pattern=tuple(bool(item) for item in pattern))

    @classmethod
    def explicit(cls, members: Iterable[int], default: bool = False) -> "SwapSchedule":
        """
        Finite membership list, `default` past its largest element.
        """

        return cls("explicit", members=frozenset(members), default=default)

    @classmethod
    def from_string(cls, text: str) -> "SwapSchedule":
        """
        Parse `faure-a`, `periodic:1;0;0` or `explicit:1;4;5[:default]`.
        """

        kind, _, rest = text.partition(":")
        try:
            if kind == "faure-a":
                return cls.faure_a()

            if kind == "periodic":
                return cls.periodic(int(item) != 0 for item in rest.split(";"))

            if kind == "explicit":
                values, _, default = rest.partition(":")
                members = [int(item) for item in values.split(";") if item]
                return cls.explicit(members, default.lower() in ("1", "true"))
        except ValueError as exception:
            raise DiscrepancyError(f"Invalid swap schedule: {text!r}") from exception

        raise DiscrepancyError(f"Unknown swap schedule: {text!r}")

    def __contains__(self, index: int) -> bool:
        if self.kind == "faure-a":
            return in_faure_a(index)

        if self.kind == "periodic":
            return self.pattern[index % len(self.pattern)]

        if index in self.members:
            return True

        return self.default and index > max(self.members, default=-1)

    def periodicity(self) -> Optional[Tuple[int, int]]:
        """
        `(start, period)` such that membership is periodic from `start` on,
        or None when it never becomes periodic.
        """

        if self.kind == "periodic":
            return 0, len(self.pattern)

        if self.kind == "explicit":
            return max(self.members, default=-1) + 1, 1

        return None

    def __str__(self) -> str:
        if self.kind == "periodic":
            return "periodic:" + ";".join(str(int(item)) for item in self.pattern)

        if self.kind == "explicit":
            members = ";".join(str(item) for item in sorted(self.members))
            return f"explicit:{members}:{int(self.default)}"

        return self.kind


@dataclass(frozen=True)
class SigmaSequence:
    """
    Rule producing σ_j for every digit position j ≥ 0.

    - constant: σ_j = σ.
    - swapped: σ_j = σ for j in the schedule, τ_b ∘ σ otherwise.
    - explicit: σ_j = prefix[j] while j < len(prefix), then σ.
    """

    sigma: Permutation
    schedule: Optional[SwapSchedule] = None
    prefix: Tuple[Permutation, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))

        if self.schedule is not None and self.prefix:
            raise DiscrepancyError("A sequence is either swapped or explicit")

        for permutation in self.prefix:
            if permutation.base != self.sigma.base:
                raise DiscrepancyError(
                    f"Base mismatch in prefix: {permutation.base} != {self.sigma.base}"
                )

    @classmethod
    def constant(cls, sigma: Permutation) -> "SigmaSequence":
        """
        σ_j = σ for every j.
        """

        return cls(sigma)

    @classmethod
    def swapped(cls, sigma: Permutation, schedule: SwapSchedule) -> "SigmaSequence":
        """
        σ on the schedule, τ_b ∘ σ elsewhere.
        """

        return cls(sigma, schedule=schedule)

    @classmethod
    def explicit(
        cls, prefix: Iterable[Permutation], default: Optional[Permutation] = None
    ) -> "SigmaSequence":
        """
        Listed permutations first, then `default` (identity if omitted).
        """

        prefix = tuple(prefix)
        if not prefix and default is None:
            raise DiscrepancyError("An explicit sequence needs a prefix or a default")

        if default is None:
            default = Permutation.identity(prefix[0].base)

        return cls(default, prefix=prefix)

    @property
    def base(self) -> int:
        """
        Common base of every σ_j.
        """

        return self.sigma.base

    @property
    def kind(self) -> str:
        """
        `constant`, `swapped` or `explicit`.
        """

        if self.schedule is not None:
            return "swapped"

        if self.prefix:
            return "explicit"

        return "constant"

    @cached_property
    def reversed_sigma(self) -> Permutation:
        """
        τ_b ∘ σ, i.e. x -> b - 1 - σ(x).
        """

        return Permutation(tuple(self.base - 1 - value for value in self.sigma))

    def sigma_at(self, index: int) -> Permutation:
        """
        σ_j for digit position j.
        """

        if self.schedule is not None:
            return self.sigma if index in self.schedule else self.reversed_sigma

        if index < len(self.prefix):
            return self.prefix[index]

        return self.sigma

    def periodicity(self) -> Optional[Tuple[int, int]]:
        """
        `(start, period)` with σ_j = σ_{j+period} for all j ≥ start, or None.
        """

        if self.schedule is not None:
            return self.schedule.periodicity()

        return len(self.prefix), 1

    def describe(self) -> str:
        """
        One line summary used in logs.
        """

        if self.kind == "swapped":
            return f"σ={self.sigma} swapped on {self.schedule}"

        if self.kind == "explicit":
            return f"{len(self.prefix)} listed permutations then σ={self.sigma}"

        return f"σ={self.sigma}"


@dataclass(frozen=True)
class Enclosure:
    """
    Certified rational interval [lo, hi].
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise DiscrepancyError(f"Empty enclosure [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        """
        hi - lo.
        """

        return self.hi - self.lo

    def __contains__(self, value: Union[Fraction, int]) -> bool:
        return self.lo <= value <= self.hi

    def within(self, other: "Enclosure") -> bool:
        """
        True if this enclosure is nested in `other`.
        """

        return other.lo <= self.lo and self.hi <= other.hi

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


Exact = Union[Fraction, Enclosure]


@dataclass(frozen=True)
class SeqPoint:
    """
    Exact value of the n-th sequence point.
    """

    index: int
    value: Exact


@dataclass(frozen=True)
class DiscrepancyReport:
    """
    Unnormalized discrepancies of the first N points.
    """

    count: int
    plus: Exact
    minus: Exact
    total: Exact
    star: Exact

    @property
    def is_exact(self) -> bool:
        """
        True if no value is an enclosure.
        """

        return not any(
            isinstance(value, Enclosure)
            for value in (self.plus, self.minus, self.total, self.star)
        )

    @property
    def json(self) -> Dict[str, Any]:
        """
        Returns a dictionary of the report with values as strings.
        """

        return {
            "N": self.count,
            "Dplus": str(self.plus),
            "Dminus": str(self.minus),
            "D": str(self.total),
            "Dstar": str(self.star),
        }
