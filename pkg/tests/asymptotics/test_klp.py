from fractions import Fraction

import pytest

from vdcperm.asymptotics.klp import klp_check, klp_stats
from vdcperm.permutations.families import tau
from vdcperm.types.bracket import AsymptoticsError
from vdcperm.types.permutation import Permutation


def test_klp_stats(identity_2):
    """
    Tests S and T of an alternating prefix.
    """

    flip = tau(2)
    stats = klp_stats([flip, identity_2, flip, identity_2], 4)

    assert (stats.m, stats.s, stats.t) == (4, 2, 2)
    assert klp_stats([identity_2] * 5, 3).s == 3
    assert klp_stats([flip] * 3, 3).t == 0


def test_klp_check(identity_2):
    """
    Tests if the bounds hold for short prefixes.
    """

    flip = tau(2)

    report = klp_check([identity_2] * 4, 4)
    assert report.holds
    assert report.lower_bound == Fraction(4, 3) - 4
    assert report.upper_bound == Fraction(4, 3) + Fraction(56, 9)

    assert klp_check([flip, identity_2, flip, identity_2, flip], 5).holds


def test_klp_invalid(identity_2, identity_3):
    """
    Tests if other permutations, short prefixes and m < 1 are rejected.
    """

    with pytest.raises(AsymptoticsError):
        klp_stats([identity_3] * 3, 3)

    with pytest.raises(AsymptoticsError):
        klp_stats([identity_2] * 2, 3)

    with pytest.raises(AsymptoticsError):
        klp_stats([identity_2] * 2, 0)
