import csv

import pytest

from tests.conftest import clean_ansi_sequence


def test_perm_omega(cli, capsys):
    """
    Faure's ω_7
    """

    cli("perm", "--omega", "7")

    out, _ = capsys.readouterr()
    assert "0,4,1,3,5,2,6\n" in out


def test_perm_families(cli, capsys):
    """
    Reversal and affine permutations
    """

    cli("perm", "--tau", "4")
    assert "3,2,1,0\n" in capsys.readouterr().out

    cli("perm", "--affine", "5,2,1")
    assert "1,3,0,2,4\n" in capsys.readouterr().out


def test_perm_partner(cli, capsys):
    """
    Carlitz partner parameters of a fractional-affine permutation
    """

    cli("perm", "--partner", "5,1,0,1")

    out, _ = capsys.readouterr()
    rows = list(csv.reader(out.splitlines()))
    header = rows.index(["a0", "a1", "a2", "x1", "x2", "perm"])

    assert rows[header + 1][:5] == ["4", "4", "1", "4", "0"]


def test_perm_cf(cli, capsys):
    """
    Continued fraction of 3/8 with the affine bound
    """

    cli("perm", "--cf", "3/8")

    out, _ = capsys.readouterr()
    assert "a0,p,quotients,alpha_max,bound\n" in out
    assert "\n3,8,2;1;2,2," in out


def test_perm_needs_family(cli):
    """
    perm without a family exits with code 2
    """

    with pytest.raises(SystemExit) as exc_info:
        cli("perm")

    assert exc_info.value.code == 2


def test_perm_not_prime(cli):
    """
    Affine permutations need a prime modulus
    """

    with pytest.raises(SystemExit) as exc_info:
        cli("perm", "--affine", "6,5,1")

    assert exc_info.value.code == 2


def test_perm_cf_not_reduced(cli, capsys):
    """
    --cf keeps the given numerator and denominator, so 6/21 exits with code 2
    """

    with pytest.raises(SystemExit) as exc_info:
        cli("perm", "--cf", "6/21")

    assert exc_info.value.code == 2
    assert "not coprime" in clean_ansi_sequence(capsys.readouterr().out)
