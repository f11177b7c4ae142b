"""
Disc module for the console.
"""

import logging
from argparse import Namespace
from fractions import Fraction
from typing import List

from vdcperm.discrepancy.exact import discrepancy_table
from vdcperm.discrepancy.oracles import brute_diaphony_sq, brute_l2
from vdcperm.discrepancy.sequence import generate
from vdcperm.types.options import ComputeOptions, OutputOptions
from vdcperm.types.sequence import DiscrepancyError, Enclosure, Exact
from vdcperm.utils.arguments import require
from vdcperm.utils.formatter import (
    format_exact,
    format_float,
    parse_range,
    to_csv,
    write_output,
)
from vdcperm.utils.selection import load_sequence

__all__ = ["disc"]

logger = logging.getLogger(__name__)

COLUMNS = ["Dplus", "Dminus", "D", "Dstar"]


def _divide(value: Exact, count: int) -> Exact:
    if isinstance(value, Enclosure):
        return Enclosure(value.lo / count, value.hi / count)

    return value / count


def _midpoint(value: Exact) -> Fraction:
    if isinstance(value, Enclosure):
        return (value.lo + value.hi) / 2

    return value


def disc(arguments: Namespace, compute: ComputeOptions, output: OutputOptions) -> None:
    """
    Print D⁺_N, D⁻_N, D_N and D*_N for every N in the --N range.

    ### Arguments
    - arguments: parsed command line arguments.
    - compute: compute options.
    - output: output options.

    ### Notes
    - `--oracles` adds the L² discrepancy ∫ E([0, α))² dα and the sum
    Σ_{i,j} B_2({x_i - x_j}); the squared diaphony is 2π² times this sum.
    Neither oracle column is divided by N, even with `--normalized`.
    """

    require(arguments, "range")
    start, stop = parse_range(arguments.range)
    seq = load_sequence(arguments)
    normalized = output["normalized"]

    reports = discrepancy_table(seq, start, stop, compute["digits_cap"])

    header = ["N"] + COLUMNS
    if arguments.with_float:
        header += [column + "_float" for column in COLUMNS]
    if arguments.oracles:
        header += ["L2sq", "diaphony_sq"]

    values: List[Fraction] = []
    if arguments.oracles:
        for item in generate(seq, 0, stop - 1, compute["digits_cap"]):
            if isinstance(item.value, Enclosure):
                raise DiscrepancyError(
                    f"Point {item.index} is only enclosed, "
                    "the oracles need exact points"
                )
            values.append(item.value)

    rows = []
    for report in reports:
        count = report.count
        row_values = [report.plus, report.minus, report.total, report.star]
        if normalized:
            row_values = [_divide(value, count) for value in row_values]

        row: List[object] = [count] + [format_exact(value) for value in row_values]
        if arguments.with_float:
            row += [
                format_float(_midpoint(value), output["float_digits"])
                for value in row_values
            ]

        if arguments.oracles:
            prefix = values[:count]
            row += [
                format_exact(brute_l2(prefix)),
                format_exact(brute_diaphony_sq(prefix)),
            ]

        rows.append(row)

    logger.debug("Computed %d discrepancy rows for %s", len(rows), seq.describe())

    write_output(to_csv(header, rows), arguments.output)
