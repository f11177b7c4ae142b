"""
Generalized van der Corput points, their exact discrepancies and the
brute force oracles.
"""

from vdcperm.discrepancy.exact import discrepancy_table, exact_discrepancies, max_exact
from vdcperm.discrepancy.oracles import (
    QuadraticIrrational,
    brute_diaphony_sq,
    brute_extreme,
    brute_l2,
    brute_plus_minus,
    brute_star,
    exhaustive_extreme,
    exhaustive_star,
    integrate_anchored_sq,
    integrate_wrapped_sq,
    kronecker,
)
from vdcperm.discrepancy.sequence import DIGITS_CAP, generate, geometric_tail, point

__all__ = [
    "discrepancy_table",
    "exact_discrepancies",
    "max_exact",
    "QuadraticIrrational",
    "brute_diaphony_sq",
    "brute_extreme",
    "brute_l2",
    "brute_plus_minus",
    "brute_star",
    "exhaustive_extreme",
    "exhaustive_star",
    "integrate_anchored_sq",
    "integrate_wrapped_sq",
    "kronecker",
    "DIGITS_CAP",
    "generate",
    "geometric_tail",
    "point",
]
