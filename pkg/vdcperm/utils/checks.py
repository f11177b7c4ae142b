"""
Acceptance checks that reproduce the published constants: closed forms,
record permutations, conjecture data and the oracle cross checks.

Every check returns the expected value, the computed one and a verdict.
The quick profile is a subset of the full profile.
"""

import logging
import math
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations as all_orders
from typing import Any, Callable, Dict, List, NamedTuple, Optional, Tuple

from vdcperm.asymptotics.brackets import alpha_bracket, id_closed_form, s_star_swapped
from vdcperm.asymptotics.conjectures import (
    conjecture1_scan,
    conjecture2_eval,
    conjecture2_lower,
    fractional_strictness,
    omega_peak_point,
    omega_peak_profile,
)
from vdcperm.asymptotics.klp import klp_check
from vdcperm.discrepancy.exact import exact_discrepancies
from vdcperm.discrepancy.oracles import brute_plus_minus
from vdcperm.discrepancy.sequence import point
from vdcperm.hammersley.points import (
    hammersley_check,
    itau_limit,
    itau_vec,
    sigma_sbar_asymptotic_check,
)
from vdcperm.permutations.catalogue import get_record
from vdcperm.permutations.families import (
    carlitz2,
    carlitz_partner,
    fractional_affine,
    intricate,
    reflect,
    shift,
    tau,
)
from vdcperm.permutations.omega import faure_omega
from vdcperm.psi.functions import max_psi, psi
from vdcperm.search.tree import search
from vdcperm.types.bracket import LogConstant
from vdcperm.types.hammersley import HammersleySpec
from vdcperm.types.permutation import Permutation
from vdcperm.types.search import SearchConfig
from vdcperm.types.sequence import SigmaSequence
from vdcperm.utils.interval import Interval

__all__ = [
    "PROFILES",
    "VerifyError",
    "Outcome",
    "Check",
    "CheckResult",
    "CHECKS",
    "checks_for",
    "run_check",
]

logger = logging.getLogger(__name__)

PROFILES = ("quick", "full")

SEED = 20240601


class VerifyError(Exception):
    """
    Base class for all exceptions related to the acceptance checks.
    """


class Outcome(NamedTuple):
    """
    What a check expected, what it found, and whether they agree.
    """

    expected: str
    actual: str
    passed: bool


@dataclass(frozen=True)
class Check:
    """
    A named check; `quick` checks also run in the quick profile.
    """

    name: str
    run: Callable[[], Outcome]
    quick: bool = False


@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of one check with its wall time.
    """

    name: str
    expected: str
    actual: str
    passed: bool
    seconds: float

    @property
    def json(self) -> Dict[str, Any]:
        """
        Returns a dictionary of the result.
        """

        return {
            "name": self.name,
            "expected": self.expected,
            "actual": self.actual,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
        }


def _random_permutation(
    rng: random.Random, base: int, fix_zero: bool = False
) -> Permutation:
    if fix_zero:
        return Permutation((0,) + tuple(rng.sample(range(1, base), base - 1)))

    return Permutation(tuple(rng.sample(range(base), base)))


def _failures(items: List[str]) -> str:
    if not items:
        return "no failures"

    shown = ", ".join(items[:5])
    return shown + (f" and {len(items) - 5} more" if len(items) > 5 else "")


def _truncated(value: float, decimals: int = 4) -> float:
    return math.floor(value * 10**decimals) / 10**decimals


def theoreme6_b3() -> Outcome:
    """
    α of id_3 is (b - 1) / 4 = 1/2, so s = 1 / (2 log 3).
    """

    closed = id_closed_form(3)
    bracket = alpha_bracket(Permutation.identity(3), n_max=2, cycle_depth=2)

    return Outcome(
        expected=f"{closed.s} = 1/(2 log 3)",
        actual=f"alpha in [{bracket.lower}, {bracket.upper}]",
        passed=bracket.lower == closed.alpha and closed.alpha in bracket,
    )


def identity_closed_forms() -> Outcome:
    """
    Periodic lower bound of α(id_b) equals the closed form for 2 ≤ b ≤ 40.
    """

    failures = []
    for base in range(2, 41):
        closed = id_closed_form(base)
        bracket = alpha_bracket(Permutation.identity(base), n_max=2, cycle_depth=2)
        if bracket.lower != closed.alpha or closed.alpha not in bracket:
            failures.append(f"b={base}: {bracket.lower} != {closed.alpha}")

    return Outcome(
        "lower == closed form for b = 2..40", _failures(failures), not failures
    )


def identity_s_base2() -> Outcome:
    """
    s(S_2) = 1 / (3 log 2) = 0.4808...
    """

    bracket = alpha_bracket(Permutation.identity(2), n_max=2, cycle_depth=2)
    interval = LogConstant(bracket.lower, 2).interval
    rendered = {_truncated(interval.lo), _truncated(interval.hi)}

    return Outcome(
        expected="1/3 / log(2) = 0.4808",
        actual=f"{bracket.lower} / log(2) in {interval}",
        passed=bracket.lower == Fraction(1, 3) and rendered == {0.4808},
    )


def _oracle_equivalence(bases: Tuple[int, ...], per_base: int, count: int) -> Outcome:
    rng = random.Random(SEED)
    failures = []
    for base in bases:
        for _ in range(per_base):
            sigma = _random_permutation(rng, base, fix_zero=True)
            seq = SigmaSequence.constant(sigma)
            values = [point(seq, index).value for index in range(count)]
            for size in range(1, count + 1):
                report = exact_discrepancies(seq, size)
                plus, minus = brute_plus_minus(values[:size])
                if (report.plus, report.minus, report.total, report.star) != (
                    plus,
                    minus,
                    plus + minus,
                    max(plus, minus),
                ):
                    failures.append(f"{sigma} N={size}")
                    break

    return Outcome(
        f"exact == brute force for N ≤ {count}, bases {bases}",
        _failures(failures),
        not failures,
    )


def oracle_equivalence_small() -> Outcome:
    """
    Exact discrepancies against sorted point counts, desk size.
    """

    return _oracle_equivalence((2, 3, 5, 9, 12), 1, 60)


def oracle_equivalence() -> Outcome:
    """
    Exact discrepancies against sorted point counts for N ≤ 500.
    """

    return _oracle_equivalence((2, 3, 5, 9, 12), 5, 500)


def sigma36_bracket() -> Outcome:
    """
    The base 36 record: 46/35 inside a bracket of width at most 0.05.
    """

    record = get_record("faure36")
    bracket = alpha_bracket(record.permutation, n_max=4, cycle_depth=2)
    target = Fraction(46, 35)
    window = Interval(0.3667 - 0.02, 0.3667 + 0.02)

    return Outcome(
        expected=f"{target} in bracket, width ≤ 0.05, s ≈ 0.3667",
        actual=f"[{bracket.lower}, {bracket.upper}], s in {bracket.s_interval}",
        passed=target in bracket
        and bracket.width <= Fraction(1, 20)
        and bracket.s_interval.intersects(window),
    )


def ostromoukhov_psi_minus_zero_b60() -> Outcome:
    """
    ψ⁻ of the base 60 record vanishes identically.
    """

    minus = psi(get_record("ostromoukhov60").permutation).minus
    vanishes = all(piece.slope == 0 and piece.intercept == 0 for piece in minus.pieces)

    return Outcome(
        expected="psi minus == 0",
        actual=f"{len(minus.pieces)} pieces, max {minus.max_on_unit()[0]}",
        passed=vanishes,
    )


def ostromoukhov60_alpha_plus() -> Outcome:
    """
    α⁺ of the base 60 record brackets 32209/17700, s* ≈ 0.222223.
    """

    record = get_record("ostromoukhov60")
    bracket = alpha_bracket(record.permutation, n_max=4, cycle_depth=2, part="plus")
    target = Fraction(32209, 17700)
    s_star = bracket.s_interval.scale(Fraction(1, 2))

    return Outcome(
        expected=f"{target} in bracket, width ≤ 0.1, s* ≈ 0.222223",
        actual=f"[{bracket.lower}, {bracket.upper}], s* in {s_star}",
        passed=target in bracket
        and bracket.width <= Fraction(1, 10)
        and s_star.intersects(Interval(0.222223 - 0.01, 0.222223 + 0.01)),
    )


def faure12_upper_bound() -> Outcome:
    """
    max F_n / n of the base 12 record gives s < 0.40.
    """

    sigma = get_record("faure12").permutation
    bracket = alpha_bracket(sigma, n_max=4, cycle_depth=1)
    bound = LogConstant(bracket.upper, 12).interval

    return Outcome(
        expected="max F_n / (n log 12) < 0.40",
        actual=f"{bracket.upper} at n={bracket.upper_n}, s ≤ {bound.hi!r}",
        passed=bound.hi < 0.40,
    )


def faure12_bracket() -> Outcome:
    """
    The bracket of s for the base 12 record meets (0.375, 0.38).
    """

    sigma = get_record("faure12").permutation
    bracket = alpha_bracket(sigma, n_max=4, cycle_depth=2)

    return Outcome(
        expected="s bracket meets (0.375, 0.38)",
        actual=f"s in {bracket.s_interval}",
        passed=bracket.s_interval.intersects(Interval(0.375, 0.38)),
    )


def faure12_swap() -> Outcome:
    """
    Swapped base 12 record: α⁺ + α⁻ brackets 1919/1727.
    """

    record = get_record("faure12_swap")
    bracket = s_star_swapped(record.permutation, n_max=3, cycle_depth=2)

    return Outcome(
        expected=f"{record.constant} inside the s* bracket",
        actual=f"alpha sum in [{bracket.alpha_lower}, {bracket.alpha_upper}]",
        passed=bracket.contains(record.constant),
    )


def omega_construction() -> Outcome:
    """
    ω_b for b = 3, 7, 15, 31 and bit reversal for b = 2^n.
    """

    records = [get_record(name) for name in ("omega3", "omega7", "omega15", "omega31")]
    failures = [
        record.name
        for record in records
        if faure_omega(record.permutation.base) != record.permutation
    ]

    for n in range(1, 11):
        reversal = tuple(int(format(k, f"0{n}b")[::-1], 2) for k in range(2**n))
        if faure_omega(2**n).image != reversal:
            failures.append(f"2^{n}")

    return Outcome(
        "listed ω values and bit reversal", _failures(failures), not failures
    )


def _conjecture1(blocks: range) -> Outcome:
    failures = []
    for n in blocks:
        report = conjecture1_scan(n)
        if not report.formula_holds:
            failures.append(f"n={n}: d = {report.top_value}")
        if not report.min_holds:
            failures.append(f"n={n}: argmin {report.argmin}")

    return Outcome(
        f"closed form and argmin 9·2^(n-4) for n = {blocks.start}..{blocks.stop - 1}",
        _failures(failures),
        not failures,
    )


def conjecture1_small() -> Outcome:
    """
    Conjecture 1 data for n ≤ 6.
    """

    return _conjecture1(range(2, 7))


def conjecture1() -> Outcome:
    """
    Conjecture 1 data for n ≤ 10, bases up to 1023.
    """

    return _conjecture1(range(2, 11))


def omega_peak_values() -> Outcome:
    """
    ψ_{9·2^m}^ω(x_m) = (m + 3) / 3 for 0 ≤ m ≤ 6.
    """

    failures = [
        f"m={item.m}: {item.value}"
        for item in (omega_peak_point(m) for m in range(7))
        if not item.holds
    ]

    return Outcome("(m + 3) / 3 for m = 0..6", _failures(failures), not failures)


def omega_peak_profiles() -> Outcome:
    """
    The affine profile of ψ_{9·2^m}^ω on J_m for 1 ≤ m ≤ 6.
    """

    failures = [
        f"m={item.m} x={item.x}"
        for m in range(1, 7)
        for item in omega_peak_profile(m)
        if not item.holds
    ]

    return Outcome(
        "(8 + 3m + (-2)^m (27x - 8)) / 9 on J_m", _failures(failures), not failures
    )


def _strictness(moduli: Tuple[int, ...]) -> Outcome:
    reports = [fractional_strictness(modulus) for modulus in moduli]
    failures = [
        f"p={report.modulus}: {report.off_peak_max} ≥ {report.identity_max}"
        for report in reports
        if not report.holds
    ]
    found = ", ".join(
        f"p={report.modulus}: {report.ties}/{report.size} tie at k={report.tie_k}"
        for report in reports
    )

    return Outcome(
        f"family < identity max away from k = (p - 1)/2 for p in {moduli}",
        f"{found}; {_failures(failures)}",
        not failures,
    )


def fractional_strictness_small() -> Outcome:
    """
    Fractional-affine strictness for p = 5, 7.
    """

    return _strictness((5, 7))


def fractional_strictness_full() -> Outcome:
    """
    Fractional-affine strictness for p = 5, 7, 11, 13.
    """

    return _strictness((5, 7, 11, 13))


def carlitz_partner_relation() -> Outcome:
    """
    The Carlitz partner agrees off {X1, X2} and swaps the two values there.
    """

    rng = random.Random(SEED)
    primes = (5, 7, 11, 13, 17, 19, 23, 29, 31)
    failures = []
    for _ in range(200):
        modulus = rng.choice(primes)
        a0, a1, a2 = (
            rng.randrange(1, modulus),
            rng.randrange(modulus),
            rng.randrange(1, modulus),
        )
        fractional = fractional_affine(modulus, a0, a1, a2)
        partner = carlitz_partner(modulus, a0, a1, a2)
        other = carlitz2(modulus, partner.a0, partner.a1, partner.a2, 0)

        agrees = all(
            fractional(x) == other(x)
            for x in range(modulus)
            if x not in (partner.x1, partner.x2)
        )
        swapped = fractional(partner.x1) == other(partner.x2) and fractional(
            partner.x2
        ) == other(partner.x1)
        if partner.x1 == partner.x2 or not agrees or not swapped:
            failures.append(f"p={modulus} ({a0},{a1},{a2})")

    return Outcome("200 random partners", _failures(failures), not failures)


def _klp(vectors: int, m: int) -> Outcome:
    rng = random.Random(SEED)
    choices = (Permutation.identity(2), tau(2))
    failures = []
    for _ in range(vectors):
        prefix = [rng.choice(choices) for _ in range(m)]
        report = klp_check(prefix, m)
        if not report.holds:
            failures.append(
                f"S={report.stats.s} T={report.stats.t} max D* = {report.max_star}"
            )

    return Outcome(
        f"S/3 + T/48 - 4 ≤ max D* ≤ S/3 + 2T/9 + 56/9, {vectors} vectors, m={m}",
        _failures(failures),
        not failures,
    )


def klp_bounds_small() -> Outcome:
    """
    Base 2 bounds for 10 random vectors at m = 6.
    """

    return _klp(10, 6)


def klp_bounds() -> Outcome:
    """
    Base 2 bounds for 100 random vectors at m = 10.
    """

    return _klp(100, 10)


def _hammersley(bases: Tuple[int, ...], size_cap: int, per_size: int) -> Outcome:
    rng = random.Random(SEED)
    failures = []
    checked = 0
    for base in bases:
        m = 1
        while base**m <= size_cap:
            vectors = [tuple(itau_vec(base, m))] + [
                tuple(_random_permutation(rng, base) for _ in range(m))
                for _ in range(per_size)
            ]
            for vector in vectors:
                report = hammersley_check(HammersleySpec(base, m, vector))
                checked += 1
                if not report.holds:
                    failures.append(f"b={base} m={m} {report.spec}: c_m={report.c_m}")
            m += 1

    return Outcome(
        f"c_m in [0, 2] for b in {bases}, b^m ≤ {size_cap}",
        f"{checked} sets, {_failures(failures)}",
        not failures,
    )


def hammersley_c_m_small() -> Outcome:
    """
    Formula term against brute force for b = 2, 3 and b^m ≤ 81.
    """

    return _hammersley((2, 3), 81, 1)


def hammersley_c_m() -> Outcome:
    """
    Formula term against brute force for b = 2, 3, 5 and b^m ≤ 3125.
    """

    return _hammersley((2, 3, 5), 3125, 3)


def sigma_sbar_trend() -> Outcome:
    """
    σσ̄ Hammersley sets of identities (ψ⁻ ≡ 0) approach (α⁺ + α⁻) / (2 log b).
    """

    failures = []
    found = []
    for base, m_max in ((3, 7), (5, 6)):
        identity = Permutation.identity(base)
        report = sigma_sbar_asymptotic_check(identity, m_max, n_max=2, cycle_depth=2)
        last = report.rows[-1]
        found.append(f"b={base}: m={last.m} ratio {last.ratio.midpoint:.4f}")
        if not report.approaching or not report.limit.intersects(
            itau_limit(base).interval
        ):
            failures.append(f"b={base}: limit {report.limit}")

    return Outcome(
        "term / (m log b) approaches the bracketed limit",
        f"{'; '.join(found)}; {_failures(failures)}",
        not failures,
    )


FIBONACCI_BRACKETS = {8: (0.4269, 0.4693), 9: (0.4382, 0.4588), 10: (0.4159, 0.4538)}

FIBONACCI_LOWER_BOUNDS = {
    17: 0.4263,
    18: 0.4159,
    19: 0.4102,
    20: 0.4192,
    21: 0.4241,
    22: 0.4159,
    23: 0.4112,
    24: 0.4185,
    25: 0.4226,
    26: 0.4158,
    27: 0.4119,
    28: 0.4181,
    29: 0.4216,
    30: 0.4158,
}

TOLERANCE = 1e-4


def fibonacci_brackets() -> Outcome:
    """
    Fibonacci brackets for n = 8, 9, 10 against the published table.
    """

    failures = []
    found = []
    for n, (lower, upper) in FIBONACCI_BRACKETS.items():
        report = conjecture2_eval(n)
        low, high = report.lower_interval.midpoint, report.upper_interval.midpoint
        found.append(f"n={n}: {low:.5f}/{high:.5f}")
        if abs(low - lower) > TOLERANCE or abs(high - upper) > TOLERANCE:
            failures.append(f"n={n}")

    expected = ", ".join(f"n={n}: {low}/{high}" for n, (low, high) in FIBONACCI_BRACKETS.items())
    return Outcome(expected, "; ".join(found), not failures)


def fibonacci_lower_bounds() -> Outcome:
    """
    Fibonacci lower bounds for n = 17..30.
    """

    failures = []
    for n, lower in FIBONACCI_LOWER_BOUNDS.items():
        value = conjecture2_lower(n).midpoint
        if abs(value - lower) > TOLERANCE:
            failures.append(f"n={n}: {value:.5f}")

    return Outcome(
        "published lower bounds n = 17..30", _failures(failures), not failures
    )


def _search_completeness(base: int, thresholds: Tuple[Fraction, ...]) -> Outcome:
    every = [Permutation(order) for order in all_orders(range(base))]
    peaks = {sigma: max_psi(sigma)[0] for sigma in every}

    failures = []
    sizes = []
    for threshold in thresholds:
        naive = {sigma for sigma, peak in peaks.items() if peak < threshold}
        result = search(SearchConfig(base, threshold, symmetry_reduction=False))
        sizes.append(f"T={threshold}: {len(naive)}")
        if set(result.permutations) != naive or not result.complete:
            failures.append(f"T={threshold}")

    return Outcome(
        f"search == enumeration in base {base}",
        f"{', '.join(sizes)}; {_failures(failures)}",
        not failures,
    )


def search_completeness_small() -> Outcome:
    """
    Search against naive enumeration in base 6.
    """

    return _search_completeness(6, (Fraction(1), Fraction(3, 2), Fraction(2)))


def search_completeness() -> Outcome:
    """
    Search against naive enumeration in base 8.
    """

    return _search_completeness(8, (Fraction(3, 2), Fraction(2), Fraction(5, 2)))


def psi_identities() -> Outcome:
    """
    Intrication on every grid point k/(bc) of 60 random pairs, symmetry and
    swapping on 100 random cases each.
    """

    rng = random.Random(SEED)
    failures = []

    pairs = ((2, 3), (3, 4), (2, 9))
    for case in range(60):
        low, high = pairs[case % len(pairs)]
        sigma, other = _random_permutation(rng, low), _random_permutation(rng, high)
        joined = psi(intricate(sigma, other)).total
        first, second = psi(sigma).total, psi(other).total
        size = low * high
        for k in range(size + 1):
            x = Fraction(k, size)
            if joined(x) != first(high * x) + second(x):
                failures.append(f"intrication {sigma}·{other} at {x}")
                break

    for _ in range(100):
        base = rng.choice((3, 5, 7, 12))
        sigma = _random_permutation(rng, base)
        total = psi(sigma).total
        if psi(shift(sigma, rng.randrange(1, base))).total != total:
            failures.append(f"shift {sigma}")
        if psi(reflect(sigma)).total != total:
            failures.append(f"reflection {sigma}")

    for _ in range(100):
        base = rng.choice((3, 5, 12))
        sigma = _random_permutation(rng, base)
        swapped = psi(tau(base).compose(sigma))
        if swapped.plus != psi(sigma).minus or swapped.minus != psi(sigma).plus:
            failures.append(f"swapping {sigma}")

    return Outcome("260 identities", _failures(failures), not failures)


CHECKS: Tuple[Check, ...] = (
    Check("theoreme6_b3", theoreme6_b3, quick=True),
    Check("identity_s_base2", identity_s_base2, quick=True),
    Check("omega_construction", omega_construction, quick=True),
    Check(
        "ostromoukhov_psi_minus_zero_b60",
        ostromoukhov_psi_minus_zero_b60,
        quick=True,
    ),
    Check("faure12_upper_bound", faure12_upper_bound, quick=True),
    Check("omega_peak_values", omega_peak_values, quick=True),
    Check("omega_peak_profiles", omega_peak_profiles, quick=True),
    Check("oracle_equivalence_small", oracle_equivalence_small, quick=True),
    Check("conjecture1_small", conjecture1_small, quick=True),
    Check("fractional_strictness_small", fractional_strictness_small, quick=True),
    Check("carlitz_partner_relation", carlitz_partner_relation, quick=True),
    Check("klp_bounds_small", klp_bounds_small, quick=True),
    Check("hammersley_c_m_small", hammersley_c_m_small, quick=True),
    Check("fibonacci_brackets", fibonacci_brackets, quick=True),
    Check("search_completeness_small", search_completeness_small, quick=True),
    Check("psi_identities", psi_identities, quick=True),
    Check("identity_closed_forms", identity_closed_forms),
    Check("oracle_equivalence", oracle_equivalence),
    Check("sigma36_bracket", sigma36_bracket),
    Check("ostromoukhov60_alpha_plus", ostromoukhov60_alpha_plus),
    Check("faure12_bracket", faure12_bracket),
    Check("faure12_swap", faure12_swap),
    Check("conjecture1", conjecture1),
    Check("fractional_strictness", fractional_strictness_full),
    Check("klp_bounds", klp_bounds),
    Check("hammersley_c_m", hammersley_c_m),
    Check("sigma_sbar_trend", sigma_sbar_trend),
    Check("fibonacci_lower_bounds", fibonacci_lower_bounds),
    Check("search_completeness", search_completeness),
)


def checks_for(profile: str, names: Optional[List[str]] = None) -> List[Check]:
    """
    Checks of a profile, optionally restricted to the given names.

    ### Errors
    - VerifyError: unknown profile or check name.
    """

    if profile not in PROFILES:
        raise VerifyError(
            f"Unknown profile {profile!r}, choose from {', '.join(PROFILES)}"
        )

    selected = [check for check in CHECKS if profile == "full" or check.quick]
    if names is not None:
        known = {check.name for check in selected}
        unknown = [name for name in names if name not in known]
        if unknown:
            raise VerifyError(f"Unknown checks for {profile}: {', '.join(unknown)}")

        selected = [check for check in selected if check.name in names]

    return selected


def run_check(check: Check) -> CheckResult:
    """
    Run one check and time it. An exception inside the check counts as a
    failure carrying the error message.
    """

    start = time.perf_counter()
    try:
        outcome = check.run()
    except Exception as exception:  # pylint: disable=broad-except
        logger.exception("Check %s raised", check.name)
        outcome = Outcome("no error", f"{type(exception).__name__}: {exception}", False)

    seconds = time.perf_counter() - start
    status = "ok" if outcome.passed else "FAILED"
    logger.debug("%s: %s in %.2fs", check.name, status, seconds)

    return CheckResult(
        check.name, outcome.expected, outcome.actual, outcome.passed, seconds
    )
