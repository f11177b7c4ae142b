import csv
from fractions import Fraction

import pytest


def test_search(cli, capsys):
    """
    Every printed survivor stays below the threshold
    """

    cli("search", "--base", "4", "--threshold", "1", "--no-symmetry")

    out, _ = capsys.readouterr()
    lines = out.splitlines()
    start = lines.index("perm,max_psi_num,max_psi_den,f2_num,f2_den")
    rows = [line.split(",") for line in lines[start + 1 :] if line]

    assert rows
    for row in rows:
        # the permutation itself is comma separated
        value = Fraction(int(row[-4]), int(row[-3]))
        assert value < 1


def test_search_stage2(cli, capsys):
    """
    --stage2 fills the F_2 columns
    """

    cli("search", "--base", "4", "--threshold", "3/2", "--stage2")

    out, _ = capsys.readouterr()
    fields = next(
        row for row in csv.reader(out.splitlines()) if row[:1] == ["0,2,1,3"]
    )

    assert fields[1:3] == ["3", "4"]
    assert all(field.isdigit() for field in fields[3:])


def test_search_missing_threshold(cli):
    """
    The threshold is required
    """

    with pytest.raises(SystemExit) as exc_info:
        cli("search", "--base", "4")

    assert exc_info.value.code == 1


def test_search_plus_needs_no_symmetry(cli):
    """
    ψ⁺ pruning with symmetry reduction is refused
    """

    with pytest.raises(SystemExit) as exc_info:
        cli("search", "--base", "4", "--threshold", "1", "--prune", "plus")

    assert exc_info.value.code == 2
