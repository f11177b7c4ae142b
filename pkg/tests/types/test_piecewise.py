from fractions import Fraction

import pytest

from vdcperm.types.piecewise import FnMaximum, Piece, PiecewiseAffine, PsiError

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)


@pytest.fixture()
def tent():
    return PiecewiseAffine((Piece(0, 1, 0), Piece(HALF, -1, 1)))


def test_piecewise_call(tent):
    """
    Tests evaluation, including the periodic extension.
    """

    assert tent(QUARTER) == QUARTER
    assert tent(HALF) == HALF
    assert tent(Fraction(5, 4)) == QUARTER
    assert tent(Fraction(-1, 4)) == QUARTER
    assert tent.breakpoints == (0, HALF)
    assert tent.piece_end(0) == HALF
    assert tent.piece_end(1) == 1


def test_piecewise_validation():
    """
    Tests if malformed piece lists are rejected.
    """

    with pytest.raises(PsiError):
        PiecewiseAffine((Piece(QUARTER, 1, 0),))

    with pytest.raises(PsiError):
        PiecewiseAffine((Piece(0, 1, 0), Piece(0, 2, 0)))

    with pytest.raises(PsiError):
        PiecewiseAffine((Piece(0, 1.5, 0),))


def test_piecewise_sum(tent):
    """
    Tests if a function and its negation cancel to one constant piece.
    """

    zero = tent + (-tent)

    assert zero == PiecewiseAffine.constant(0)
    assert (tent + tent)(QUARTER) == HALF


def test_piecewise_maximum(tent):
    """
    Tests the exact pointwise maximum with a constant.
    """

    result = PiecewiseAffine.maximum([tent, PiecewiseAffine.constant(QUARTER)])

    assert result.breakpoints == (0, QUARTER, HALF, Fraction(3, 4))
    assert result(Fraction(1, 8)) == QUARTER
    assert result(Fraction(3, 8)) == Fraction(3, 8)
    assert result(Fraction(7, 8)) == QUARTER

    with pytest.raises(PsiError):
        PiecewiseAffine.maximum([])


def test_max_on_unit(tent):
    """
    Tests the supremum for continuous and discontinuous functions.
    """

    assert tent.max_on_unit() == (HALF, HALF)

    sawtooth = PiecewiseAffine((Piece(0, 1, 0),), continuous=False)
    assert sawtooth.max_on_unit() == (1, 1)


def test_cell_lines(tent):
    """
    Tests the integer lines per cell.
    """

    assert tent.cell_lines(2) == (((1, 0),), ((-1, 1),))
    assert tent.cell_lines(4) == (((1, 0),), ((1, 0),), ((-1, 1),), ((-1, 1),))


def test_fn_maximum():
    """
    Tests the F_n maximum summary.
    """

    result = FnMaximum(Fraction(3, 4), QUARTER, 2, (1, 0))

    assert result.normalized == Fraction(3, 8)
    assert result.describe(2) == "max F_2 = 3/4 at x = 1/4 (digits 1;0 in base 2)"
