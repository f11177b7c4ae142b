import sys
from argparse import Namespace

import pytest

from vdcperm.utils.arguments import (
    ArgumentsError,
    create_parser,
    parse_arguments,
    require,
)


def test_parse_arguments():
    with pytest.raises(SystemExit):
        vars(parse_arguments())


def test_parse_arguments_unknown_operation(monkeypatch, capsys):
    """
    Tests if usage errors exit with code 1.
    """

    monkeypatch.setattr(sys, "argv", ["dummy", "download"])

    with pytest.raises(SystemExit) as exc_info:
        parse_arguments()

    assert exc_info.value.code == 1
    assert "invalid choice" in capsys.readouterr().err


def test_parse_arguments_destinations():
    """
    Tests flags whose destinations are spelled differently.
    """

    arguments = create_parser().parse_args(
        [
            "alpha",
            "--base",
            "3",
            "--N",
            "1..5",
            "--budget",
            "100",
            "--cycles",
            "2",
            "--digits",
            "20",
            "--float",
            "--no-symmetry",
            "--full",
        ]
    )

    assert arguments.operation == "alpha"
    assert arguments.base == 3
    assert arguments.range == "1..5"
    assert arguments.node_budget == 100
    assert arguments.cycle_depth == 2
    assert arguments.digits_cap == 20
    assert arguments.with_float
    assert arguments.symmetry is False
    assert arguments.profile_name == "full"


def test_parse_arguments_defaults():
    """
    Tests if unset settings stay None so the config file can fill them.
    """

    arguments = create_parser().parse_args(["disc"])

    assert arguments.threads is None
    assert arguments.node_budget is None
    assert arguments.normalized is None
    assert arguments.float_digits is None
    assert arguments.log_level is None
    assert arguments.symmetry is True
    assert arguments.mode == "branch"
    assert arguments.profile_name is None


def test_require():
    """
    Tests the missing option message.
    """

    require(Namespace(operation="gen", range="0..3"), "range")

    with pytest.raises(ArgumentsError, match="gen needs --N"):
        require(Namespace(operation="gen", range=None), "range")

    with pytest.raises(ArgumentsError, match="search needs --threshold, --budget"):
        require(Namespace(operation="search"), "threshold", "node_budget")
