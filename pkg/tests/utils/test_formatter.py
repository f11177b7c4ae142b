from fractions import Fraction

import pytest

from vdcperm.types.piecewise import Piece, PiecewiseAffine
from vdcperm.types.sequence import Enclosure
from vdcperm.utils.formatter import (
    FormatterError,
    format_exact,
    format_float,
    format_rational,
    function_polyline,
    parse_int_list,
    parse_range,
    parse_ratio,
    parse_rational,
    render_svg,
    to_csv,
    write_output,
)

HALF = Fraction(1, 2)


def test_format_rational():
    """
    Test rational formatting
    """

    assert format_rational(Fraction(3, 4)) == "3/4"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(0) == "0"
    assert format_rational(Fraction(-1, 3)) == "-1/3"


def test_format_float():
    """
    Test significant digit rounding of exact rationals
    """

    assert format_float(Fraction(1, 3), 5) == "0.33333"
    assert format_float(Fraction(2, 3), 3) == "0.667"
    assert format_float(Fraction(1, 8), 2) == "0.12"
    assert format_float(0, 4) == "0"
    assert format_float(Fraction(3, 2)) == "1.5"


def test_format_exact():
    """
    Test rationals and enclosures
    """

    assert format_exact(Fraction(3, 2)) == "3/2"
    assert format_exact(Enclosure(Fraction(1, 3), HALF)) == "[1/3;1/2]"


def test_parsers():
    """
    Test rational, range and list parsing
    """

    assert parse_rational("3/8") == Fraction(3, 8)
    assert parse_rational(" 2 ") == 2
    assert parse_ratio("6/21") == (6, 21)
    assert parse_range("1..5") == (1, 5)
    assert parse_range("7") == (7, 7)
    assert parse_int_list("0,2,1") == [0, 2, 1]
    assert parse_int_list("1;2", ";") == [1, 2]

    for parser, text in (
        (parse_rational, "1/0"),
        (parse_rational, "x"),
        (parse_ratio, "3"),
        (parse_ratio, "a/8"),
        (parse_range, "1..b"),
        (parse_int_list, "1,a"),
    ):
        with pytest.raises(FormatterError):
            parser(text)


def test_to_csv():
    """
    Test CSV rendering
    """

    assert to_csv(["N", "D"], [[1, "1/2"], [2, "3/4"]]) == "N,D\n1,1/2\n2,3/4\n"


def test_write_output(capsys, tmpdir):
    """
    Test writing to stdout and to nested files
    """

    write_output("a,b\n")
    assert capsys.readouterr().out == "a,b\n"

    target = tmpdir / "nested" / "out.csv"
    write_output("a,b\n", str(target))
    assert target.read_text(encoding="utf-8") == "a,b\n"


def test_function_polyline():
    """
    Test polyline vertices of a tent and of a jump
    """

    tent = PiecewiseAffine((Piece(0, 1, 0), Piece(HALF, -1, 1)))
    assert function_polyline(tent) == [(0, 0), (HALF, HALF), (1, 0)]

    jump = PiecewiseAffine((Piece(0, 0, 0), Piece(HALF, 0, 1)))
    assert function_polyline(jump) == [(0, 0), (HALF, 0), (HALF, 1), (1, 1)]


def test_render_svg(tmpdir):
    """
    Test SVG output
    """

    tent = PiecewiseAffine((Piece(0, 1, 0), Piece(HALF, -1, 1)))
    target = tmpdir / "psi.svg"
    render_svg(tent, str(target), "psi")

    svg = target.read_text(encoding="utf-8")
    assert svg.startswith("<svg")
    assert "<title>psi</title>" in svg
    assert "<polyline" in svg
