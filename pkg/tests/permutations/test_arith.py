from fractions import Fraction

import pytest

from vdcperm.permutations.arith import (
    continued_fraction,
    digits,
    fibonacci,
    is_prime,
    mod_inverse,
    z_seq,
)
from vdcperm.types.permutation import PermutationError


def test_digits():
    """
    Tests the least significant first expansion.
    """

    assert digits(10, 3).digits == (1, 0, 1)
    assert digits(0, 7).digits == ()
    assert digits(255, 2).value == 255

    with pytest.raises(PermutationError):
        digits(5, 1)

    with pytest.raises(PermutationError):
        digits(-1, 2)


def test_is_prime():
    """
    Tests primality on small numbers.
    """

    assert [n for n in range(30) if is_prime(n)] == [
        2,
        3,
        5,
        7,
        11,
        13,
        17,
        19,
        23,
        29,
    ]


def test_mod_inverse():
    """
    Tests the inverse with the 0 -> 0 convention.
    """

    assert mod_inverse(0, 7) == 0
    assert mod_inverse(3, 7) == 5
    assert all(x * mod_inverse(x, 11) % 11 == 1 for x in range(1, 11))


def test_continued_fraction():
    """
    Tests the canonical expansion and its validation.
    """

    expansion = continued_fraction(3, 8)

    assert expansion.quotients == (2, 1, 2)
    assert expansion.alpha_max == 2
    assert expansion.value == Fraction(3, 8)
    assert continued_fraction(1, 7).quotients == (7,)

    with pytest.raises(PermutationError):
        continued_fraction(2, 8)

    with pytest.raises(PermutationError):
        continued_fraction(8, 8)


def test_fibonacci_sequences():
    """
    Tests the Fibonacci numbers and the z sequence.
    """

    assert [fibonacci(n) for n in range(1, 11)] == [1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    assert [z_seq(n) for n in range(1, 8)] == [1, 1, 1, 2, 4, 6, 9]

    with pytest.raises(PermutationError):
        fibonacci(0)

    with pytest.raises(PermutationError):
        z_seq(0)
