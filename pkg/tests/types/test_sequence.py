from fractions import Fraction

import pytest

from vdcperm.types.permutation import Permutation
from vdcperm.types.sequence import (
    DiscrepancyError,
    DiscrepancyReport,
    Enclosure,
    SigmaSequence,
    SwapSchedule,
    in_faure_a,
)


def test_in_faure_a():
    """
    Tests membership in the block set {H(H-1)+1, ..., H²}.
    """

    members = [index for index in range(17) if in_faure_a(index)]

    assert members == [1, 3, 4, 7, 8, 9, 13, 14, 15, 16]


def test_swap_schedule_parsing():
    """
    Tests the three schedule kinds and their text form.
    """

    assert SwapSchedule.from_string("faure-a") == SwapSchedule.faure_a()

    periodic = SwapSchedule.from_string("periodic:1;0;0")
    assert [index in periodic for index in range(6)] == [
        True,
        False,
        False,
        True,
        False,
        False,
    ]
    assert periodic.periodicity() == (0, 3)
    assert str(periodic) == "periodic:1;0;0"

    explicit = SwapSchedule.from_string("explicit:1;4;5:1")
    assert 4 in explicit
    assert 2 not in explicit
    assert 100 in explicit
    assert explicit.periodicity() == (6, 1)
    assert str(explicit) == "explicit:1;4;5:1"

    assert SwapSchedule.faure_a().periodicity() is None


@pytest.mark.parametrize("text", ["random", "periodic:", "periodic:a", "explicit:1;x"])
def test_swap_schedule_invalid(text):
    """
    Tests if malformed schedules are rejected.
    """

    with pytest.raises(DiscrepancyError):
        SwapSchedule.from_string(text)


def test_sigma_sequence_kinds():
    """
    Tests σ_j for constant, swapped and explicit sequences.
    """

    sigma = Permutation((0, 2, 1))

    constant = SigmaSequence.constant(sigma)
    assert constant.kind == "constant"
    assert constant.sigma_at(7) == sigma
    assert constant.periodicity() == (0, 1)

    swapped = SigmaSequence.swapped(sigma, SwapSchedule.periodic([True, False]))
    assert swapped.kind == "swapped"
    assert swapped.sigma_at(0) == sigma
    assert swapped.sigma_at(1).image == (2, 0, 1)
    assert swapped.reversed_sigma.image == (2, 0, 1)

    explicit = SigmaSequence.explicit([Permutation((2, 1, 0))])
    assert explicit.kind == "explicit"
    assert explicit.sigma_at(0).image == (2, 1, 0)
    assert explicit.sigma_at(1).is_identity
    assert explicit.periodicity() == (1, 1)
    assert explicit.base == 3


def test_sigma_sequence_invalid():
    """
    Tests mixed bases and empty explicit sequences.
    """

    with pytest.raises(DiscrepancyError):
        SigmaSequence.explicit([])

    with pytest.raises(DiscrepancyError):
        SigmaSequence(Permutation.identity(3), prefix=(Permutation.identity(2),))


def test_enclosure():
    """
    Tests the rational enclosure.
    """

    enclosure = Enclosure(Fraction(1, 3), Fraction(1, 2))

    assert enclosure.width == Fraction(1, 6)
    assert Fraction(2, 5) in enclosure
    assert Fraction(3, 5) not in enclosure
    assert enclosure.within(Enclosure(Fraction(0), Fraction(1)))

    with pytest.raises(DiscrepancyError):
        Enclosure(Fraction(1), Fraction(0))


def test_discrepancy_report():
    """
    Tests the exactness flag and the json form.
    """

    exact = DiscrepancyReport(3, Fraction(3, 2), Fraction(0), Fraction(3, 2), Fraction(3, 2))
    assert exact.is_exact
    assert exact.json == {
        "N": 3,
        "Dplus": "3/2",
        "Dminus": "0",
        "D": "3/2",
        "Dstar": "3/2",
    }

    enclosed = DiscrepancyReport(
        3,
        Enclosure(Fraction(1), Fraction(2)),
        Fraction(0),
        Fraction(3, 2),
        Enclosure(Fraction(1), Fraction(2)),
    )
    assert not enclosed.is_exact
