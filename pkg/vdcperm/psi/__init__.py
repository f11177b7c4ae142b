"""
φ/ψ functions of a permutation and the exact maximization of F_n.
"""

from vdcperm.psi.functions import (
    breakpoint_values,
    max_psi,
    near_zero_slopes,
    partial_psi,
    phi,
    psi,
    psi_at,
)
from vdcperm.psi.maximize import (
    EXHAUSTIVE_CAP,
    MODES,
    f_n_at,
    f_n_eval_periodic,
    f_n_max,
    periodic_point,
)

__all__ = [
    "breakpoint_values",
    "max_psi",
    "near_zero_slopes",
    "partial_psi",
    "phi",
    "psi",
    "psi_at",
    "EXHAUSTIVE_CAP",
    "MODES",
    "f_n_at",
    "f_n_eval_periodic",
    "f_n_max",
    "periodic_point",
]
