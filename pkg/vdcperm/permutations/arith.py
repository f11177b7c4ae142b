"""
Integer helpers: base-b digits, primality, continued fractions and the
Fibonacci-type sequences.
"""

import logging
from functools import lru_cache
from math import gcd, isqrt

from vdcperm.types.permutation import ContinuedFraction, DigitVector, PermutationError

__all__ = [
    "digits",
    "is_prime",
    "mod_inverse",
    "continued_fraction",
    "fibonacci",
    "z_seq",
]

logger = logging.getLogger(__name__)


def digits(number: int, base: int) -> DigitVector:
    """
    Base-b expansion of a non-negative integer, least significant digit first.

    ### Arguments
    - number: the integer to expand.
    - base: the base, at least 2.

    ### Returns
    - The digits, without trailing zeros (zero has no digits).

    ### Errors
    - PermutationError: invalid base or negative number.
    """

    if base < 2:
        raise PermutationError(f"Invalid base: {base}")

    if number < 0:
        raise PermutationError(f"Cannot expand negative number {number}")

    result = []
    while number:
        number, digit = divmod(number, base)
        result.append(digit)

    return DigitVector(base, tuple(result))


def is_prime(number: int) -> bool:
    """
    Trial division primality test, meant for desk scale moduli.
    """

    if number < 2:
        return False

    if number % 2 == 0:
        return number == 2

    return all(number % divisor for divisor in range(3, isqrt(number) + 1, 2))


def mod_inverse(value: int, modulus: int) -> int:
    """
    x^(p-2) convention: the inverse of a unit, 0 for 0.
    """

    value %= modulus
    if value == 0:
        return 0

    return pow(value, -1, modulus)


def continued_fraction(numerator: int, denominator: int) -> ContinuedFraction:
    """
    Canonical continued fraction of numerator/denominator in (0, 1).

    ### Arguments
    - numerator: a0 with 0 < a0 < p.
    - denominator: p, coprime to a0.

    ### Returns
    - The expansion [0; q_1, ..., q_m], last quotient at least 2.

    ### Errors
    - PermutationError: out of range or non-coprime input.
    """

    if not 0 < numerator < denominator:
        raise PermutationError(
            f"Expected 0 < a0 < p, got {numerator}/{denominator}"
        )

    if gcd(numerator, denominator) != 1:
        raise PermutationError(f"{numerator} and {denominator} are not coprime")

    quotients = []
    top, bottom = numerator, denominator
    while top:
        quotient, remainder = divmod(bottom, top)
        quotients.append(quotient)
        bottom, top = top, remainder

    return ContinuedFraction(numerator, denominator, tuple(quotients))


@lru_cache(maxsize=None)
def fibonacci(index: int) -> int:
    """
    Fibonacci numbers with F(1) = F(2) = 1.
    """

    if index < 1:
        raise PermutationError(f"Fibonacci index must be positive, got {index}")

    previous, current = 0, 1
    for _ in range(index - 1):
        previous, current = current, previous + current

    return current


@lru_cache(maxsize=None)
def z_seq(index: int) -> int:
    """
    z(n) = z(n-1) + z(n-3) + z(n-4) with z(1) = z(2) = z(3) = 1, z(4) = 2.
    These are the repeating digits of the extremal point in Fibonacci bases.
    """

    if index < 1:
        raise PermutationError(f"z index must be positive, got {index}")

    values = [1, 1, 1, 2]
    while len(values) < index:
        values.append(values[-1] + values[-3] + values[-4])

    return values[index - 1]
