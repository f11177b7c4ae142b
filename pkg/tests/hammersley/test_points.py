from fractions import Fraction

import pytest

from vdcperm.hammersley.points import (
    brute_star_2d,
    formula_parts,
    hammersley_check,
    itau_asymptotic_check,
    itau_limit,
    itau_vec,
    points,
    sigma_sbar_asymptotic_check,
    sigma_sbar_vec,
    star_formula_term,
)
from vdcperm.discrepancy.sequence import point
from vdcperm.permutations.families import tau
from vdcperm.types.budget import ResourceLimitError
from vdcperm.types.hammersley import HammersleyError, HammersleySpec
from vdcperm.types.permutation import Permutation
from vdcperm.types.sequence import SigmaSequence


def test_points(identity_2):
    """
    Tests the binary Hammersley set with two digits.
    """

    spec = HammersleySpec(2, 2, (identity_2, identity_2))

    assert points(spec) == [
        (Fraction(0), Fraction(0)),
        (Fraction(1, 2), Fraction(1, 4)),
        (Fraction(1, 4), Fraction(1, 2)),
        (Fraction(3, 4), Fraction(3, 4)),
    ]


def test_points_permuted(identity_2):
    """
    Tests if σ_j acts on the j-th digit only.
    """

    spec = HammersleySpec(2, 2, (tau(2), identity_2))
    xs = [x for x, _ in points(spec)]

    assert xs == [Fraction(1, 2), Fraction(0), Fraction(3, 4), Fraction(1, 4)]


def test_points_cap(identity_2):
    """
    Tests if oversized sets are refused.
    """

    with pytest.raises(ResourceLimitError):
        points(HammersleySpec(2, 21, (identity_2,) * 21))


def test_brute_star_2d():
    """
    Tests the planar star discrepancy on tiny sets.
    """

    assert brute_star_2d([(Fraction(0), Fraction(0))]) == 1
    assert brute_star_2d(
        [(Fraction(0), Fraction(0)), (Fraction(1, 2), Fraction(1, 2))]
    ) == Fraction(3, 2)

    with pytest.raises(HammersleyError):
        brute_star_2d([])


def test_formula_parts(identity_2):
    """
    Tests the ψ⁺ and ψ⁻ sums for m = 1.
    """

    spec = HammersleySpec(2, 1, (identity_2,))

    assert formula_parts(spec) == (Fraction(1, 2), Fraction(0))
    assert star_formula_term(spec) == Fraction(1, 2)


@pytest.mark.parametrize(
    "base, m",
    [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (5, 2)],
)
def test_hammersley_check(base, m):
    """
    Tests if 0 ≤ c_m ≤ 2 for identity and i-τ sets.
    """

    identity = HammersleySpec(base, m, (Permutation.identity(base),) * m)
    mixed = HammersleySpec(base, m, tuple(itau_vec(base, m)))

    for spec in (identity, mixed):
        report = hammersley_check(spec)
        assert report.holds
        assert report.brute >= report.term


def test_hammersley_check_first(identity_2):
    """
    Tests the single digit binary set.
    """

    report = hammersley_check(HammersleySpec(2, 1, (identity_2,)))

    assert report.term == Fraction(1, 2)
    assert report.brute == Fraction(3, 2)
    assert report.c_m == 1


def test_vectors(identity_3):
    """
    Tests the i-τ and σσ̄ splits.
    """

    reversal = tau(3)

    assert itau_vec(3, 3) == [identity_3, reversal, reversal]
    assert itau_vec(3, 2) == [identity_3, reversal]
    assert sigma_sbar_vec(identity_3, 1) == [reversal]

    sigma = Permutation((0, 2, 1))
    assert sigma_sbar_vec(sigma, 2)[1] == reversal.compose(sigma)

    with pytest.raises(HammersleyError):
        itau_vec(3, 0)


def test_itau_limit():
    """
    Tests the i-τ limits for odd and even bases.
    """

    assert itau_limit(3).rational == Fraction(1, 4)
    assert itau_limit(2).rational == Fraction(1, 6)
    assert itau_limit(5).base == 5


def test_itau_asymptotic_check():
    """
    Tests the trend rows and the size limits.
    """

    report = itau_asymptotic_check(2, 4)

    assert [row.m for row in report.rows] == [1, 2, 3, 4]
    assert report.rows[0].term == Fraction(1, 2)

    with pytest.raises(HammersleyError):
        itau_asymptotic_check(6, 2)

    with pytest.raises(HammersleyError):
        itau_asymptotic_check(2, 9)


@pytest.mark.parametrize(
    "vector",
    [
        (Permutation((0, 2, 1)), Permutation((1, 0, 2)), Permutation((0, 1, 2))),
        (Permutation((0, 1)), Permutation((1, 0)), Permutation((1, 0))),
        (Permutation((0, 3, 1, 4, 2)), Permutation((4, 3, 2, 1, 0))),
    ],
)
def test_points_project_onto_sequence(vector):
    """
    Tests that the first coordinates are the first b^m points of the
    sequence with the same σ-vector and identities afterwards.
    """

    spec = HammersleySpec(vector[0].base, len(vector), vector)
    seq = SigmaSequence.explicit(vector)

    assert [x for x, _ in points(spec)] == [
        point(seq, index).value for index in range(spec.size)
    ]


def test_sigma_sbar_asymptotic_check(identity_3):
    """
    Tests the σσ̄ trend of the identity against the i-τ trend.
    """

    report = sigma_sbar_asymptotic_check(identity_3, 6, n_max=2, cycle_depth=2)

    assert [row.term for row in report.rows] == [
        row.term for row in itau_asymptotic_check(3, 6).rows
    ]
    assert report.limit.intersects(itau_limit(3).interval)
    assert report.approaching
