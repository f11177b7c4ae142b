"""
Module for turning exact results into text: rationals, floats, CSV and SVG.
"""

import csv
import io
import logging
from decimal import ROUND_HALF_EVEN, Context, Decimal
from fractions import Fraction
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from vdcperm.types.piecewise import PiecewiseAffine
from vdcperm.types.sequence import Enclosure
from vdcperm.utils.config import GlobalConfig

__all__ = [
    "FormatterError",
    "format_rational",
    "format_float",
    "format_exact",
    "parse_rational",
    "parse_ratio",
    "parse_range",
    "parse_int_list",
    "PIECE_HEADER",
    "to_csv",
    "write_output",
    "function_polyline",
    "render_svg",
]

logger = logging.getLogger(__name__)

SVG_WIDTH = 800
SVG_HEIGHT = 400

PIECE_HEADER = (
    "x_num",
    "x_den",
    "slope_num",
    "slope_den",
    "intercept_num",
    "intercept_den",
)


class FormatterError(Exception):
    """
    Base class for all exceptions related to formatting and parsing.
    """


def format_rational(value: Union[Fraction, int]) -> str:
    """
    `num/den`, or `num` for integers.
    """

    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)

    return f"{value.numerator}/{value.denominator}"


def format_float(value: Union[Fraction, int], digits: Optional[int] = None) -> str:
    """
    Decimal rendering with `digits` significant digits, rounded half to
    even from the exact rational.
    """

    if digits is None:
        digits = GlobalConfig.get_parameter("float_digits", 17)

    value = Fraction(value)
    if value == 0:
        return "0"

    context = Context(prec=digits, rounding=ROUND_HALF_EVEN)
    result = context.divide(Decimal(value.numerator), Decimal(value.denominator))

    return str(result)


def format_exact(value: Union[Fraction, int, Enclosure]) -> str:
    """
    A rational, or `[lo;hi]` for an enclosure.
    """

    if isinstance(value, Enclosure):
        return f"[{format_rational(value.lo)};{format_rational(value.hi)}]"

    return format_rational(value)


def parse_rational(text: str) -> Fraction:
    """
    Parse `num/den` or an integer.
    """

    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exception:
        raise FormatterError(f"Invalid rational: {text!r}") from exception


def parse_ratio(text: str) -> Tuple[int, int]:
    """
    Parse `num/den` into its two integers without reducing the fraction.
    """

    numerator, separator, denominator = text.strip().partition("/")
    try:
        if not separator:
            raise ValueError(text)

        return int(numerator), int(denominator)
    except ValueError as exception:
        raise FormatterError(f"Invalid ratio: {text!r}") from exception


def parse_range(text: str) -> Tuple[int, int]:
    """
    Parse `a..b` or a single integer `a`.
    """

    start, separator, stop = text.partition("..")
    try:
        if not separator:
            return int(start), int(start)

        return int(start), int(stop)
    except ValueError as exception:
        raise FormatterError(f"Invalid range: {text!r}") from exception


def parse_int_list(text: str, separator: str = ",") -> List[int]:
    """
    Parse `1,2,3`.
    """

    try:
        return [int(item) for item in text.split(separator) if item.strip()]
    except ValueError as exception:
        raise FormatterError(f"Invalid integer list: {text!r}") from exception


def to_csv(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    """
    CSV text with a header row and `\\n` line endings.
    """

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)

    return buffer.getvalue()


def write_output(text: str, output: Optional[str] = None) -> None:
    """
    Print to stdout, or write to `output`.
    """

    if output is None:
        print(text, end="")
        return

    path = Path(output)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8", newline="\n")
    logger.info("Wrote %s", path)


def function_polyline(function: PiecewiseAffine) -> List[Tuple[Fraction, Fraction]]:
    """
    Vertices (x, f(x)) of the graph on [0, 1]; a discontinuity gives two
    vertices with the same x.
    """

    vertices: List[Tuple[Fraction, Fraction]] = []
    for index, piece in enumerate(function.pieces):
        end = function.piece_end(index)
        vertices.append((piece.start, piece.at(piece.start)))
        vertices.append((end, piece.at(end)))

    # drop repeated vertices where consecutive pieces join
    return [
        vertex
        for index, vertex in enumerate(vertices)
        if index == 0 or vertex != vertices[index - 1]
    ]


def render_svg(function: PiecewiseAffine, path: str, title: str = "") -> None:
    """
    Write an SVG polyline of the function over [0, 1].
    """

    vertices = function_polyline(function)
    low = min(Fraction(0), *(y for _, y in vertices))
    high = max(Fraction(0), *(y for _, y in vertices))
    span = high - low or Fraction(1)
    margin = 20

    def scale(x: Fraction, y: Fraction) -> str:
        px = margin + float(x) * (SVG_WIDTH - 2 * margin)
        py = SVG_HEIGHT - margin - float((y - low) / span) * (SVG_HEIGHT - 2 * margin)
        return f"{px:.3f},{py:.3f}"

    points = " ".join(scale(x, y) for x, y in vertices)
    axis = scale(Fraction(0), Fraction(0)).split(",")[1]
    svg = (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_WIDTH}" '
        f'height="{SVG_HEIGHT}" viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}">\n'
        f"  <title>{title}</title>\n"
        f'  <line x1="{margin}" y1="{axis}" x2="{SVG_WIDTH - margin}" y2="{axis}" '
        'stroke="#999" stroke-width="1"/>\n'
        '  <polyline fill="none" stroke="#a54281" stroke-width="2" '
        f'points="{points}"/>\n'
        "</svg>\n"
    )

    write_output(svg, path)
