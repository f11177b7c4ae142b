from fractions import Fraction

import pytest

from vdcperm import Vdcperm
from vdcperm.types.permutation import Permutation, PermutationError
from vdcperm.types.sequence import SigmaSequence, SwapSchedule
from vdcperm.utils.config import COMPUTE_OPTIONS


@pytest.fixture()
def vdcperm():
    return Vdcperm(settings={"n_max": 2, "cycle_depth": 2})


def test_settings(vdcperm):
    """
    Tests if missing settings take the defaults.
    """

    assert vdcperm.settings["n_max"] == 2
    assert vdcperm.settings["threads"] == COMPUTE_OPTIONS["threads"]
    assert Vdcperm().settings == COMPUTE_OPTIONS


def test_permutation_inputs(identity_3):
    """
    Tests the accepted permutation inputs.
    """

    assert Vdcperm.permutation("0,1,2") == identity_3
    assert Vdcperm.permutation([0, 1, 2]) == identity_3
    assert Vdcperm.permutation(identity_3) is identity_3

    with pytest.raises(PermutationError):
        Vdcperm.permutation("0,1,1")


def test_psi(vdcperm):
    """
    Tests ψ, max ψ and F_n through the facade.
    """

    assert vdcperm.psi("0,1").minus(Fraction(1, 4)) == 0
    assert vdcperm.max_psi("0,1,2") == (Fraction(2, 3), Fraction(1, 3))
    assert vdcperm.f_n_max("0,1", 2).value == Fraction(3, 4)


def test_alpha(vdcperm):
    """
    Tests the α bracket of id_3.
    """

    bracket = vdcperm.alpha("0,1,2")

    assert bracket.lower == Fraction(1, 2)
    assert bracket.upper_n <= 2


def test_discrepancies(vdcperm):
    """
    Tests constant and explicit sequences.
    """

    reports = vdcperm.discrepancies("0,1", 1, 3)
    assert [report.count for report in reports] == [1, 2, 3]
    assert reports[-1].star == Fraction(3, 2)

    swapped = SigmaSequence.swapped(
        Permutation((0, 1)), SwapSchedule.periodic([True, False])
    )
    assert len(vdcperm.discrepancies(swapped, 1, 2)) == 2


def test_search(vdcperm):
    """
    Tests the search with a rational threshold string.
    """

    result = vdcperm.search(4, "1", symmetry_reduction=False)

    assert result.complete
    assert all(survivor.max_psi < 1 for survivor in result.survivors)


def test_hammersley(vdcperm):
    """
    Tests the Hammersley comparison.
    """

    report = vdcperm.hammersley(2, ["0,1"])

    assert report.term == Fraction(1, 2)
    assert report.c_m == 1
