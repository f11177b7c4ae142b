import math
import random
from fractions import Fraction

import pytest

from vdcperm.asymptotics.brackets import (
    affine_bound,
    affine_bound_from_quotient,
    alpha_bracket,
    alpha_pm_bracket,
    candidate_cycles,
    id_closed_form,
    s_constant,
    s_star_swapped,
)
from vdcperm.types.bracket import AsymptoticsError
from vdcperm.types.budget import NodeBudget
from vdcperm.types.permutation import Permutation


@pytest.mark.parametrize(
    "base, alpha",
    [
        (2, Fraction(1, 3)),
        (3, Fraction(1, 2)),
        (4, Fraction(4, 5)),
        (5, Fraction(1)),
        (6, Fraction(9, 7)),
    ],
)
def test_id_closed_form(base, alpha):
    """
    Tests α of the identity for odd and even bases.
    """

    closed = id_closed_form(base)

    assert closed.alpha == alpha
    assert closed.s.rational == alpha
    assert closed.s_star_swapped.rational == alpha / 2


def test_id_closed_form_invalid():
    """
    Tests if bases below 2 are rejected.
    """

    with pytest.raises(AsymptoticsError):
        id_closed_form(1)


@pytest.mark.parametrize("base", range(2, 9))
def test_alpha_bracket_identity(base):
    """
    Tests if the periodic lower bound of the identity is its closed form.
    """

    bracket = alpha_bracket(Permutation.identity(base), n_max=2, cycle_depth=2)
    closed = id_closed_form(base)

    assert bracket.lower == closed.alpha
    assert closed.alpha in bracket
    assert bracket.complete


def test_alpha_bracket_base_3(identity_3):
    """
    Tests the base 3 identity bracket and its s enclosure.
    """

    bracket = alpha_bracket(identity_3, n_max=2, cycle_depth=2)

    assert bracket.lower == Fraction(1, 2)
    assert bracket.upper >= bracket.lower
    assert bracket.uppers[0] == Fraction(2, 3)
    assert bracket.s_interval.lo == pytest.approx(0.5 / math.log(3))


def test_alpha_bracket_budget(omega_9):
    """
    Tests if an exhausted budget keeps the last completed n.
    """

    bracket = alpha_bracket(omega_9, n_max=4, cycle_depth=1, budget=NodeBudget(9))

    assert not bracket.complete
    assert bracket.upper_n == 1
    assert bracket.upper == 1

    with pytest.raises(AsymptoticsError):
        alpha_bracket(omega_9, n_max=0)


def test_alpha_pm_bracket(identity_2):
    """
    Tests the ψ⁺ and ψ⁻ brackets of the binary identity.
    """

    plus, minus = alpha_pm_bracket(identity_2, n_max=2, cycle_depth=2)

    assert plus.lower == Fraction(1, 3)
    assert plus.part == "plus"
    assert (minus.lower, minus.upper) == (0, 0)


def test_s_brackets(identity_3):
    """
    Tests s and the swapped s* of the identity against the closed forms.
    """

    closed = id_closed_form(3)

    assert s_constant(identity_3, n_max=2, cycle_depth=2).contains(closed.s)
    assert s_star_swapped(identity_3, n_max=2, cycle_depth=2).contains(
        closed.s_star_swapped
    )


def test_candidate_cycles():
    """
    Tests the order and the cap of the candidate cycles.
    """

    assert candidate_cycles(3, 1) == [(1,), (0,), (2,)]
    assert candidate_cycles(2, 1, seeds=[(1, 1, 0)])[:2] == [(1, 1, 0), (1, 0)]
    assert len(candidate_cycles(10, 5, cap=1000)) == 10 + 100 + 1000


def test_affine_bounds():
    """
    Tests the continued fraction bound (α_max + 1) / log(α_max + 1).
    """

    value = affine_bound_from_quotient(2)

    assert value >= 3 / math.log(3)
    assert value == pytest.approx(3 / math.log(3))
    assert affine_bound(8, 3) == value

    with pytest.raises(AsymptoticsError):
        affine_bound_from_quotient(0)


def _sample(base, count, seed):
    rng = random.Random(seed)
    return [Permutation(tuple(rng.sample(range(base), base))) for _ in range(count)]


@pytest.mark.parametrize("base", [3, 4, 5, 6])
def test_alpha_below_plus_and_minus(base):
    """
    Tests max F_n / n ≤ max F⁺_n / n + max F⁻_n / n at every n and that the
    lower bound of α stays below both upper bounds combined.
    """

    for sigma in _sample(base, 4, base):
        total = alpha_bracket(sigma, n_max=3, cycle_depth=2)
        plus, minus = alpha_pm_bracket(sigma, n_max=3, cycle_depth=2)

        assert len(total.uppers) == len(plus.uppers) == len(minus.uppers) == 3
        for value, upper_plus, upper_minus in zip(
            total.uppers, plus.uppers, minus.uppers
        ):
            assert value <= upper_plus + upper_minus

        assert total.lower <= plus.upper + minus.upper


@pytest.mark.parametrize("base", [3, 4, 5, 7])
def test_identity_bounds_every_bracket(base):
    """
    Tests that the identity dominates: lower bounds stay below α(id_b) and
    each max F_n / n stays below the identity's.
    """

    closed = id_closed_form(base)
    identity = alpha_bracket(Permutation.identity(base), n_max=3, cycle_depth=2)

    for sigma in _sample(base, 4, 100 + base):
        bracket = alpha_bracket(sigma, n_max=3, cycle_depth=2)

        assert bracket.lower <= closed.alpha
        assert bracket.s_interval.lo <= closed.s.interval.hi
        for value, identity_value in zip(bracket.uppers, identity.uppers):
            assert value <= identity_value
