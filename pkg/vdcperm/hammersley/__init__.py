"""
Generalized Hammersley point sets and their star discrepancy.
"""

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
    trend,
)

__all__ = [
    "brute_star_2d",
    "formula_parts",
    "hammersley_check",
    "itau_asymptotic_check",
    "itau_limit",
    "itau_vec",
    "points",
    "sigma_sbar_asymptotic_check",
    "sigma_sbar_vec",
    "star_formula_term",
    "trend",
]
