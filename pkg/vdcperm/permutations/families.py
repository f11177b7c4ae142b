"""
Structured permutation families: reversal, symmetries, intrication and the
affine, fractional-affine and Carlitz rank 2 families over 𝔽_p.
"""

import logging
from itertools import product
from math import gcd
from typing import FrozenSet, NamedTuple, Tuple

from vdcperm.permutations.arith import is_prime, mod_inverse
from vdcperm.types.permutation import Permutation, PermutationError

__all__ = [
    "tau",
    "shift",
    "reflect",
    "intricate",
    "affine",
    "fractional_affine",
    "carlitz2",
    "carlitz_partner",
    "CarlitzPartner",
    "affine_family",
    "fractional_family",
    "families_disjoint",
]

logger = logging.getLogger(__name__)


class CarlitzPartner(NamedTuple):
    """
    Parameters of the Carlitz rank 2 permutation matching a fractional-affine
    one, and the two points where their values are exchanged.
    """

    a0: int
    a1: int
    a2: int
    x1: int
    x2: int


def tau(base: int) -> Permutation:
    """
    Reversal τ_b(k) = b - 1 - k.
    """

    if base < 2:
        raise PermutationError(f"Invalid base: {base}")

    return Permutation(tuple(range(base - 1, -1, -1)))


def shift(sigma: Permutation, amount: int) -> Permutation:
    """
    x -> σ(x) + a mod b.

    ### Arguments
    - sigma: the permutation.
    - amount: a with 0 < a < b.

    ### Returns
    - The shifted permutation.
    """

    if not 0 < amount < sigma.base:
        raise PermutationError(
            f"Shift must satisfy 0 < a < {sigma.base}, got {amount}"
        )

    return Permutation(tuple((value + amount) % sigma.base for value in sigma))


def reflect(sigma: Permutation) -> Permutation:
    """
    x -> -σ(x) mod b.
    """

    return Permutation(tuple((-value) % sigma.base for value in sigma))


def intricate(sigma: Permutation, other: Permutation) -> Permutation:
    """
    Intrication σ·τ in base bc: (σ·τ)(k''b + k') = c σ(k') + τ(k'').

    ### Arguments
    - sigma: permutation in base b, acting on the low digit.
    - other: permutation in base c, acting on the high digit.

    ### Returns
    - The permutation in base bc.
    """

    low, high = sigma.base, other.base
    return Permutation(
        tuple(
            high * sigma(index % low) + other(index // low)
            for index in range(low * high)
        )
    )


def _check_field(modulus: int, strict: bool = True) -> None:
    if strict and not is_prime(modulus):
        raise PermutationError(f"{modulus} is not prime")

    if modulus < 2:
        raise PermutationError(f"Invalid modulus: {modulus}")


def _check_unit(value: int, modulus: int, name: str) -> None:
    if not 0 < value < modulus or gcd(value, modulus) != 1:
        raise PermutationError(f"{name} must be a unit modulo {modulus}, got {value}")


def _check_residue(value: int, modulus: int, name: str) -> None:
    if not 0 <= value < modulus:
        raise PermutationError(f"{name} must lie in [0, {modulus}), got {value}")


def affine(modulus: int, a0: int, a1: int, strict: bool = True) -> Permutation:
    """
    σ_{a0,a1}(x) = a0 x + a1 mod p.

    ### Arguments
    - modulus: p, prime unless `strict` is False.
    - a0: multiplier, a unit modulo p.
    - a1: offset.
    - strict: require a prime modulus; Fibonacci bases need `strict=False`.

    ### Returns
    - The affine permutation.
    """

    _check_field(modulus, strict)
    _check_unit(a0, modulus, "a0")
    _check_residue(a1, modulus, "a1")

    return Permutation(tuple((a0 * x + a1) % modulus for x in range(modulus)))


def fractional_affine(modulus: int, a0: int, a1: int, a2: int) -> Permutation:
    """
    π_{a0,a1,a2}(x) = (a0 x + a1)^(p-2) + a2 mod p.
    """

    _check_field(modulus)
    _check_unit(a0, modulus, "a0")
    _check_residue(a1, modulus, "a1")
    _check_residue(a2, modulus, "a2")

    return Permutation(
        tuple(
            (mod_inverse(a0 * x + a1, modulus) + a2) % modulus
            for x in range(modulus)
        )
    )


def carlitz2(modulus: int, a0: int, a1: int, a2: int, a3: int) -> Permutation:
    """
    τ(x) = ((A0 x + A1)^(p-2) + A2)^(p-2) + A3 mod p, parameters in index order.
    """

    _check_field(modulus)
    _check_unit(a0, modulus, "A0")
    _check_residue(a1, modulus, "A1")
    _check_unit(a2, modulus, "A2")
    _check_residue(a3, modulus, "A3")

    return Permutation(
        tuple(
            (
                mod_inverse(mod_inverse(a0 * x + a1, modulus) + a2, modulus) + a3
            )
            % modulus
            for x in range(modulus)
        )
    )


def carlitz_partner(modulus: int, a0: int, a1: int, a2: int) -> CarlitzPartner:
    """
    Carlitz rank 2 parameters (A0, A1, A2) whose permutation agrees with
    π_{a0,a1,a2} except at X1, X2, where the two values are swapped.

    ### Arguments
    - modulus: prime p.
    - a0, a1, a2: fractional-affine parameters, a0 and a2 non-zero.

    ### Returns
    - CarlitzPartner(A0, A1, A2, X1, X2) with A3 = 0 implied.

    ### Notes
    - X1 = X2 would need a1 a2 + 1 = a1 a2, so the two points always differ.
    """

    _check_field(modulus)
    _check_unit(a0, modulus, "a0")
    _check_residue(a1, modulus, "a1")
    if a2 % modulus == 0:
        raise PermutationError("a2 must be non-zero for a Carlitz partner")

    _check_residue(a2, modulus, "a2")

    a2_inv = mod_inverse(a2, modulus)
    a0_inv = mod_inverse(a0, modulus)

    return CarlitzPartner(
        a0=(-a0 * a2 * a2) % modulus,
        a1=(-a1 * a2 * a2 - a2) % modulus,
        a2=a2_inv,
        x1=(-(a1 * a2 + 1) * a0_inv * a2_inv) % modulus,
        x2=(-a1 * a0_inv) % modulus,
    )


def affine_family(modulus: int) -> FrozenSet[Tuple[int, ...]]:
    """
    Images of every affine permutation modulo a prime.
    """

    return frozenset(
        affine(modulus, a0, a1).image
        for a0, a1 in product(range(1, modulus), range(modulus))
    )


def fractional_family(modulus: int) -> FrozenSet[Tuple[int, ...]]:
    """
    Images of every fractional-affine permutation modulo a prime.
    """

    return frozenset(
        fractional_affine(modulus, a0, a1, a2).image
        for a0, a1, a2 in product(range(1, modulus), range(modulus), range(modulus))
    )


def families_disjoint(modulus: int) -> bool:
    """
    Exhaustive check that no fractional-affine permutation is affine.

    ### Notes
    - For p in {2, 3} x^(p-2) is the identity, so the families coincide and
    the result is False.
    """

    overlap = affine_family(modulus) & fractional_family(modulus)
    logger.debug(
        "p=%d: %d permutations in both families", modulus, len(overlap)
    )

    return not overlap
