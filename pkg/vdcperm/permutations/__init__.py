"""
Permutations package: representation helpers and every structured
construction (ω_b, affine, fractional-affine, Carlitz rank 2, intrication).
"""

from vdcperm.permutations.arith import (
    continued_fraction,
    digits,
    fibonacci,
    is_prime,
    mod_inverse,
    z_seq,
)
from vdcperm.permutations.catalogue import RECORDS, Record, get_record, record_names
from vdcperm.permutations.families import (
    CarlitzPartner,
    affine,
    carlitz2,
    carlitz_partner,
    families_disjoint,
    fractional_affine,
    fractional_family,
    intricate,
    reflect,
    shift,
    tau,
)
from vdcperm.permutations.omega import faure_omega
from vdcperm.types.permutation import (
    ContinuedFraction,
    DigitVector,
    Permutation,
    PermutationError,
)

__all__ = [
    "Permutation",
    "PermutationError",
    "DigitVector",
    "ContinuedFraction",
    "CarlitzPartner",
    "Record",
    "RECORDS",
    "digits",
    "is_prime",
    "mod_inverse",
    "continued_fraction",
    "fibonacci",
    "z_seq",
    "tau",
    "shift",
    "reflect",
    "intricate",
    "affine",
    "fractional_affine",
    "carlitz2",
    "carlitz_partner",
    "fractional_family",
    "families_disjoint",
    "faure_omega",
    "get_record",
    "record_names",
]
