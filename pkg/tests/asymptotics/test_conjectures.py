import math
from fractions import Fraction

import pytest

from vdcperm.asymptotics.conjectures import (
    StrictnessReport,
    conjecture1_expected,
    conjecture1_scan,
    conjecture2_eval,
    conjecture2_lower,
    fibonacci_permutation,
    fractional_strictness,
    omega_peak_point,
    omega_peak_profile,
)
from vdcperm.permutations.families import fractional_affine
from vdcperm.psi.functions import psi_at
from vdcperm.types.bracket import AsymptoticsError


def test_conjecture1_expected():
    """
    Tests the closed form of d_{2^n - 1} for even and odd n.
    """

    assert conjecture1_expected(2) == Fraction(2, 3)
    assert conjecture1_expected(3) == Fraction(8, 7)
    assert conjecture1_expected(4) == Fraction(5, 3)


def test_conjecture1_scan():
    """
    Tests the scans over the blocks of bases [2^{n-1}, 2^n - 1].
    """

    report = conjecture1_scan(3)
    assert [row.base for row in report.rows] == [4, 5, 6, 7]
    assert report.top_base == 7
    assert report.top_value == Fraction(8, 7)
    assert report.formula_holds
    assert report.expected_argmin is None

    report = conjecture1_scan(4)
    assert report.formula_holds
    assert report.argmin == 9
    assert report.min_holds

    # base 2 beats base 3
    assert not conjecture1_scan(2).max_holds

    for n in (1, 11):
        with pytest.raises(AsymptoticsError):
            conjecture1_scan(n)


@pytest.mark.parametrize("n", range(3, 9))
def test_conjecture1_block_maximum(n):
    """
    Tests that 2^n - 1 gives the largest d_b / log b in its block for n ≥ 3.
    """

    report = conjecture1_scan(n)

    assert report.max_holds
    assert report.argmax == 2**n - 1


@pytest.mark.parametrize("m", range(4))
def test_omega_peak_point(m):
    """
    Tests ψ of ω at the points x_m in bases 9 · 2^m.
    """

    point = omega_peak_point(m)

    assert point.base == 9 * 2**m
    assert point.expected == Fraction(m + 3, 3)
    assert point.holds


@pytest.mark.parametrize("m", [1, 2])
def test_omega_peak_profile(m):
    """
    Tests the linear profile of ψ next to x_m.
    """

    points = omega_peak_profile(m)

    assert len(points) == 3
    assert all(point.holds for point in points)
    assert points[-1].x - points[0].x == Fraction(1, 9 * 2**m)


def test_omega_peak_invalid():
    """
    Tests if negative m and profiles for m = 0 are rejected.
    """

    with pytest.raises(AsymptoticsError):
        omega_peak_point(-1)

    with pytest.raises(AsymptoticsError):
        omega_peak_profile(0)


def test_fibonacci_permutation():
    """
    Tests μ_n(x) = F_{n-1} x mod F_n.
    """

    sigma = fibonacci_permutation(8)

    assert sigma.base == 21
    assert sigma.image[1] == 13
    assert sigma.image[2] == 5

    with pytest.raises(AsymptoticsError):
        fibonacci_permutation(3)


def test_conjecture2_eval():
    """
    Tests the Fibonacci bracket for n = 8.
    """

    report = conjecture2_eval(8)

    assert (report.base, report.digit) == (21, 6)
    assert report.lower == Fraction(13, 10)
    assert report.lower <= report.upper
    assert report.lower_interval.midpoint == pytest.approx(1.3 / math.log(21))
    assert report.lower_interval.midpoint == pytest.approx(0.4269, abs=1e-4)
    assert report.periodic_consistent

    assert conjecture2_lower(8).midpoint == pytest.approx(
        report.lower_interval.midpoint
    )

    with pytest.raises(AsymptoticsError):
        conjecture2_eval(7)


def test_conjecture2_eval_depth():
    """
    The periodic average stays fixed over more periods; m_max below 1 is refused.
    """

    shallow = conjecture2_eval(9)
    deep = conjecture2_eval(9, m_max=5)

    assert deep.periodic_consistent
    assert (deep.lower, deep.upper) == (shallow.lower, shallow.upper)
    assert conjecture2_eval(9, m_max=1).periodic_consistent

    with pytest.raises(AsymptoticsError):
        conjecture2_eval(9, m_max=0)


def test_fractional_strictness():
    """
    Tests the family scan for p = 5: ties at k = 2 only, strict elsewhere.
    """

    report = fractional_strictness(5)

    assert report.modulus == 5
    assert report.identity_max == Fraction(6, 5)
    assert report.tie_k == 2
    assert 0 < report.size <= 4 * 5 * 5
    assert report.holds
    assert report.off_peak_max < report.identity_max
    assert report.family_max == report.identity_max
    assert 0 < report.ties <= report.size


def test_fractional_strictness_inverse_map():
    """
    x^(p-2) shares the prefix {0, 1} with the identity, so it ties at k = 2
    and stays below at k = 3.
    """

    inverse_map = fractional_affine(5, 1, 0, 0)

    assert inverse_map.image == (0, 1, 3, 2, 4)
    assert psi_at(inverse_map, Fraction(2, 5)) == Fraction(6, 5)
    assert psi_at(inverse_map, Fraction(3, 5)) < Fraction(6, 5)


@pytest.mark.parametrize("modulus", [7, 11])
def test_fractional_strictness_larger(modulus):
    """
    Tests the family scan for larger primes.
    """

    report = fractional_strictness(modulus)

    assert report.holds
    assert report.family_max == report.identity_max
    assert report.ties > 0


def test_strictness_report_holds():
    """
    Tests the verdict of a strictness report.
    """

    assert StrictnessReport(5, Fraction(6, 5), Fraction(6, 5), Fraction(1), 3, 10).holds
    assert not StrictnessReport(
        5, Fraction(6, 5), Fraction(6, 5), Fraction(6, 5), 3, 10
    ).holds

    with pytest.raises(AsymptoticsError):
        fractional_strictness(4)
