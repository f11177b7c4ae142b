"""
Scans around the Faure ω permutations in bases near powers of 2 and the
affine permutations in Fibonacci bases.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import log
from typing import List, Optional, Tuple

from vdcperm.permutations.arith import fibonacci, z_seq
from vdcperm.permutations.families import affine, fractional_affine
from vdcperm.permutations.omega import faure_omega
from vdcperm.psi.functions import max_psi, psi_at
from vdcperm.psi.maximize import f_n_eval_periodic
from vdcperm.types.bracket import AsymptoticsError
from vdcperm.types.permutation import Permutation
from vdcperm.utils.interval import Interval

__all__ = [
    "Conjecture1Row",
    "Conjecture1Report",
    "OmegaPeakPoint",
    "Conjecture2Report",
    "StrictnessReport",
    "conjecture1_expected",
    "conjecture1_scan",
    "omega_peak_point",
    "omega_peak_profile",
    "fibonacci_permutation",
    "conjecture2_eval",
    "conjecture2_lower",
    "fractional_strictness",
]

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Conjecture1Row:
    """
    d_b = max ψ_b^ω and d_b / log b.
    """

    base: int
    d: Fraction

    @property
    def ratio(self) -> float:
        """
        d_b / log b.
        """

        return float(self.d) / log(self.base)


@dataclass(frozen=True)
class Conjecture1Report:
    """
    One block B_n = [2^{n-1}, 2^n - 1] of bases.
    """

    n: int
    rows: Tuple[Conjecture1Row, ...]

    @property
    def top_base(self) -> int:
        """
        b_n = 2^n - 1.
        """

        return 2**self.n - 1

    @property
    def argmin(self) -> int:
        """
        Base minimizing d_b / log b (the smallest on ties).
        """

        return min(self.rows, key=lambda row: (row.ratio, row.base)).base

    @property
    def argmax(self) -> int:
        """
        Base maximizing d_b / log b (the smallest on ties).
        """

        return max(self.rows, key=lambda row: (row.ratio, -row.base)).base

    @property
    def expected_argmin(self) -> Optional[int]:
        """
        9 · 2^{n-4} for n ≥ 4.
        """

        return 9 * 2 ** (self.n - 4) if self.n >= 4 else None

    @property
    def top_value(self) -> Fraction:
        """
        d_{b_n}.
        """

        return next(row.d for row in self.rows if row.base == self.top_base)

    @property
    def formula_holds(self) -> bool:
        """
        d_{b_n} matches the closed form.
        """

        return self.top_value == conjecture1_expected(self.n)

    @property
    def min_holds(self) -> bool:
        """
        The minimum of d_b / log b sits at 9 · 2^{n-4}.
        """

        return self.expected_argmin is None or self.argmin == self.expected_argmin

    @property
    def max_holds(self) -> bool:
        """
        The maximum of d_b / log b sits at b_n.
        """

        return self.argmax == self.top_base


def conjecture1_expected(n: int) -> Fraction:
    """
    n/2 - 1/3 for even n, n/2 - 1/3 - 1/(6 b_n) for odd n, b_n = 2^n - 1.
    """

    value = Fraction(n, 2) - Fraction(1, 3)
    if n % 2:
        value -= Fraction(1, 6 * (2**n - 1))

    return value


def conjecture1_scan(n: int) -> Conjecture1Report:
    """
    max ψ_b^ω for every b in B_n = [2^{n-1}, 2^n - 1].

    ### Arguments
    - n: 2 ≤ n ≤ 10.

    ### Returns
    - Conjecture1Report, which exposes the checks as properties.
    """

    if not 2 <= n <= 10:
        raise AsymptoticsError(f"n must lie in [2, 10], got {n}")

    rows = []
    for base in range(2 ** (n - 1), 2**n):
        value, _ = max_psi(faure_omega(base))
        rows.append(Conjecture1Row(base, value))

    report = Conjecture1Report(n, tuple(rows))
    logger.debug(
        "B_%d: argmin %d, argmax %d, d_%d = %s",
        n,
        report.argmin,
        report.argmax,
        report.top_base,
        report.top_value,
    )

    return report


@dataclass(frozen=True)
class OmegaPeakPoint:
    """
    ψ_{9·2^m}^ω at a point x next to x_m, with the value predicted there.
    """

    m: int
    base: int
    x: Fraction
    value: Fraction
    expected: Fraction

    @property
    def holds(self) -> bool:
        """
        value == expected.
        """

        return self.value == self.expected


def _omega_peak_x(m: int) -> Fraction:
    return Fraction(1, 3) + sum(
        (Fraction((-1) ** i, 9 * 2**i) for i in range(1, m + 1)), Fraction(0)
    )


def omega_peak_point(m: int) -> OmegaPeakPoint:
    """
    ψ_{b_m}^ω(x_m) with b_m = 9 · 2^m and
    x_m = 3/9 + Σ_{i=1..m} (-1)^i / (9 · 2^i), expected (m + 3) / 3.
    """

    if m < 0:
        raise AsymptoticsError(f"m must be non-negative, got {m}")

    base = 9 * 2**m
    x = _omega_peak_x(m)

    return OmegaPeakPoint(m, base, x, psi_at(faure_omega(base), x), Fraction(m + 3, 3))


def omega_peak_profile(m: int) -> List[OmegaPeakPoint]:
    """
    ψ_{b_m}^ω on the interval J_m of length 1/b_m ending at x_m (even m)
    or starting there (odd m), where it equals
    (8 + 3m + (-2)^m (27x - 8)) / 9. Checked at both ends and the middle.
    """

    if m < 1:
        raise AsymptoticsError(f"m must be at least 1, got {m}")

    base = 9 * 2**m
    sigma = faure_omega(base)
    x_m = _omega_peak_x(m)
    if m % 2 == 0:
        low, high = x_m - Fraction(1, base), x_m
    else:
        low, high = x_m, x_m + Fraction(1, base)

    points = []
    for x in (low, (low + high) / 2, high):
        expected = (8 + 3 * m + (-2) ** m * (27 * x - 8)) / 9
        points.append(OmegaPeakPoint(m, base, x, psi_at(sigma, x), expected))

    return points


def fibonacci_permutation(n: int) -> Permutation:
    """
    μ_n(x) = F_{n-1} x mod F_n, the affine permutation of a Fibonacci base.
    """

    if n < 4:
        raise AsymptoticsError(f"n must be at least 4, got {n}")

    return affine(fibonacci(n), fibonacci(n - 1), 0, strict=False)


@dataclass(frozen=True)
class Conjecture2Report:
    """
    Bracket of s for μ_n: the lower end from the fixed point with digit
    z(n-2), the upper end from max ψ.
    """

    n: int
    base: int
    digit: int
    lower: Fraction
    upper: Fraction
    lower_interval: Interval
    upper_interval: Interval
    peak_at_z_n2: bool
    peak_at_z_n1: bool
    periodic_consistent: bool


def conjecture2_eval(n: int, m_max: int = 2) -> Conjecture2Report:
    """
    Evaluate the periodic lower bound of α for μ_n and locate max ψ.

    ### Arguments
    - n: 8 ≤ n ≤ 16.
    - m_max: the averages over 2..m_max periods must all equal the
    one-period lower bound.

    ### Returns
    - Conjecture2Report with α bounds and their enclosures divided by log p.
    """

    if not 8 <= n <= 16:
        raise AsymptoticsError(f"n must lie in [8, 16], got {n}")
    if m_max < 1:
        raise AsymptoticsError(f"m_max must be at least 1, got {m_max}")

    sigma = fibonacci_permutation(n)
    base = sigma.base
    digit = z_seq(n - 2)

    lower = f_n_eval_periodic(sigma, (digit,))
    upper, _ = max_psi(sigma)

    return Conjecture2Report(
        n=n,
        base=base,
        digit=digit,
        lower=lower,
        upper=upper,
        lower_interval=Interval.from_fraction(lower) / Interval.log(base),
        upper_interval=Interval.from_fraction(upper) / Interval.log(base),
        peak_at_z_n2=psi_at(sigma, Fraction(digit, base)) == upper,
        peak_at_z_n1=psi_at(sigma, Fraction(z_seq(n - 1), base)) == upper,
        periodic_consistent=all(
            f_n_eval_periodic(sigma, (digit,), reps=reps) == lower
            for reps in range(2, m_max + 1)
        ),
    )


def conjecture2_lower(n: int) -> Interval:
    """
    ψ(z(n-2) / (F_n - 1)) / log F_n for μ_n, a single ψ evaluation.
    """

    if n < 4:
        raise AsymptoticsError(f"n must be at least 4, got {n}")

    sigma = fibonacci_permutation(n)
    base = sigma.base
    value = psi_at(sigma, Fraction(z_seq(n - 2), base - 1))

    logger.debug("μ_%d in base %d: α ≥ %s", n, base, value)

    return Interval.from_fraction(value) / Interval.log(base)


@dataclass(frozen=True)
class StrictnessReport:
    """
    ψ at the grid points k/p over the fractional-affine family against the
    identity maximum.

    The identity peaks at k = (p - 1) / 2 and k = (p + 1) / 2. Members are
    compared at every k except (p - 1) / 2, where ties are counted instead.
    """

    modulus: int
    identity_max: Fraction
    family_max: Fraction
    off_peak_max: Fraction
    ties: int
    size: int

    @property
    def tie_k(self) -> int:
        """
        The grid index where members may reach the identity maximum.
        """

        return (self.modulus - 1) // 2

    @property
    def holds(self) -> bool:
        """
        Every member stays strictly below the identity away from k = (p - 1) / 2.
        """

        return self.off_peak_max < self.identity_max


def fractional_strictness(modulus: int) -> StrictnessReport:
    """
    Exhaustive comparison of ψ^π(k/p) with max_k ψ^{id}(k/p) over the whole
    fractional-affine family.

    ### Arguments
    - modulus: an odd prime p.

    ### Returns
    - StrictnessReport with the family maximum, the maximum away from
    k = (p - 1) / 2 and the number of members tying the identity there.

    ### Notes
    - No member maps {0, ..., (p - 1) / 2} onto a circular run, so the
    identity maximum is never reached at k = (p + 1) / 2. At k = (p - 1) / 2
    the first images can form a circular run and the maximum is tied.
    """

    if modulus < 3 or modulus % 2 == 0:
        raise AsymptoticsError(f"The modulus must be an odd prime, got {modulus}")

    identity_max, _ = max_psi(Permutation.identity(modulus))
    tie_k = (modulus - 1) // 2

    members = {
        fractional_affine(modulus, a0, a1, a2)
        for a0, a1, a2 in product(range(1, modulus), range(modulus), range(modulus))
    }

    family_max = off_peak_max = Fraction(0)
    ties = 0
    for member in members:
        values = [psi_at(member, Fraction(k, modulus)) for k in range(1, modulus)]
        family_max = max(family_max, max(values))
        off_peak_max = max(
            off_peak_max, max(v for k, v in enumerate(values, 1) if k != tie_k)
        )
        ties += values[tie_k - 1] == identity_max

    logger.debug(
        "p=%d: %d members, %d tie the identity at k=%d",
        modulus,
        len(members),
        ties,
        tie_k,
    )

    return StrictnessReport(
        modulus, identity_max, family_max, off_peak_max, ties, len(members)
    )
