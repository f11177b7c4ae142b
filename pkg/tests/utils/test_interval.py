import math
from fractions import Fraction

import pytest

from vdcperm.utils.interval import Interval, IntervalError


def test_from_fraction():
    """
    Tests if rationals are enclosed tightly.
    """

    assert Interval.from_fraction(Fraction(1, 2)) == Interval(0.5, 0.5)

    third = Interval.from_fraction(Fraction(1, 3))
    assert Fraction(third.lo) <= Fraction(1, 3) <= Fraction(third.hi)
    assert third.lo < third.hi
    assert third.hi == math.nextafter(third.lo, math.inf)


def test_from_bounds():
    """
    Tests rational bounds.
    """

    interval = Interval.from_bounds(Fraction(1, 3), Fraction(2, 3))

    assert Fraction(interval.lo) <= Fraction(1, 3)
    assert Fraction(interval.hi) >= Fraction(2, 3)
    assert 0.5 in interval


def test_log():
    """
    Tests the logarithm enclosure.
    """

    for value in (2, 3, 10, 21, 987):
        assert math.log(value) in Interval.log(value)

    with pytest.raises(IntervalError):
        Interval.log(0)


def test_arithmetic():
    """
    Tests addition, division and scaling.
    """

    one = Interval(1.0, 1.0)
    third = Interval.from_fraction(Fraction(1, 3))

    assert 2 / 3 in third + third
    assert 0.5 in one / Interval(2.0, 2.0)
    assert -0.5 in Interval(-1.0, 1.0) / Interval(2.0, 2.0)
    assert 0.25 in Interval(0.5, 0.5).scale(Fraction(1, 2))

    with pytest.raises(IntervalError):
        one / Interval(-1.0, 1.0)

    with pytest.raises(IntervalError):
        one.scale(Fraction(-1))


def test_properties():
    """
    Tests width, midpoint, intersection and validation.
    """

    interval = Interval(1.0, 2.0)

    assert interval.width >= 1.0
    assert interval.midpoint == 1.5
    assert interval.intersects(Interval(2.0, 3.0))
    assert not interval.intersects(Interval(2.5, 3.0))
    assert str(interval) == "[1.0, 2.0]"

    with pytest.raises(IntervalError):
        Interval(2.0, 1.0)
