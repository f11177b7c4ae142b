"""
Gen module for the console.
"""

import logging
from argparse import Namespace

from vdcperm.discrepancy.sequence import generate
from vdcperm.types.options import ComputeOptions, OutputOptions
from vdcperm.types.sequence import Enclosure
from vdcperm.utils.arguments import require
from vdcperm.utils.formatter import (
    format_float,
    format_rational,
    parse_range,
    to_csv,
    write_output,
)
from vdcperm.utils.selection import load_sequence

__all__ = ["gen"]

logger = logging.getLogger(__name__)


def gen(arguments: Namespace, compute: ComputeOptions, output: OutputOptions) -> None:
    """
    Print the points S(n) for n in the --N range as CSV.

    ### Arguments
    - arguments: parsed command line arguments.
    - compute: compute options.
    - output: output options.

    ### Notes
    - Sequences that are not eventually periodic give enclosures; the
    table then gains `lo` and `hi` columns.
    """

    require(arguments, "range")
    start, stop = parse_range(arguments.range)
    seq = load_sequence(arguments)

    points = generate(seq, start, stop, compute["digits_cap"])
    enclosed = any(isinstance(point.value, Enclosure) for point in points)

    header = ["n", "value_num", "value_den"]
    if enclosed:
        header += ["lo", "hi"]
    if arguments.with_float:
        header.append("value_float")

    rows = []
    for point in points:
        value = point.value
        if isinstance(value, Enclosure):
            row = [
                point.index,
                "",
                "",
                format_rational(value.lo),
                format_rational(value.hi),
            ]
            middle = (value.lo + value.hi) / 2
        else:
            row = [point.index, value.numerator, value.denominator]
            if enclosed:
                row += [format_rational(value), format_rational(value)]
            middle = value

        if arguments.with_float:
            row.append(format_float(middle, output["float_digits"]))

        rows.append(row)

    logger.debug("Generated %d points of %s", len(points), seq.describe())

    write_output(to_csv(header, rows), arguments.output)
