"""
Asymptotic constants: α brackets, closed forms, the base-2 KLP bounds and
the conjecture scans.
"""

from vdcperm.asymptotics.brackets import (
    CYCLE_ENUMERATION_CAP,
    IdClosedForm,
    affine_bound,
    affine_bound_from_quotient,
    alpha_bracket,
    alpha_pm_bracket,
    candidate_cycles,
    id_closed_form,
    s_constant,
    s_star_swapped,
)
from vdcperm.asymptotics.conjectures import (
    Conjecture1Report,
    Conjecture1Row,
    Conjecture2Report,
    StrictnessReport,
    OmegaPeakPoint,
    conjecture1_expected,
    conjecture1_scan,
    conjecture2_eval,
    conjecture2_lower,
    fibonacci_permutation,
    fractional_strictness,
    omega_peak_point,
    omega_peak_profile,
)
from vdcperm.asymptotics.klp import klp_check, klp_stats

__all__ = [
    "CYCLE_ENUMERATION_CAP",
    "IdClosedForm",
    "affine_bound",
    "affine_bound_from_quotient",
    "alpha_bracket",
    "alpha_pm_bracket",
    "candidate_cycles",
    "id_closed_form",
    "s_constant",
    "s_star_swapped",
    "Conjecture1Report",
    "Conjecture1Row",
    "Conjecture2Report",
    "StrictnessReport",
    "OmegaPeakPoint",
    "conjecture1_expected",
    "conjecture1_scan",
    "conjecture2_eval",
    "conjecture2_lower",
    "fibonacci_permutation",
    "fractional_strictness",
    "omega_peak_point",
    "omega_peak_profile",
    "klp_check",
    "klp_stats",
]
