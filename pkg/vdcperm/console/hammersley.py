"""
Hammersley module for the console.
"""

import logging
from argparse import Namespace

from vdcperm.hammersley.points import brute_star_2d, points, star_formula_term
from vdcperm.types.hammersley import HammersleyReport
from vdcperm.types.options import ComputeOptions, OutputOptions
from vdcperm.utils.formatter import format_float, format_rational, to_csv, write_output
from vdcperm.utils.selection import load_hammersley

__all__ = ["hammersley"]

logger = logging.getLogger(__name__)


def hammersley(
    arguments: Namespace, compute: ComputeOptions, output: OutputOptions
) -> None:
    """
    Compare the star discrepancy formula term of a Hammersley set with its
    brute force star discrepancy.

    ### Arguments
    - arguments: parsed command line arguments.
    - compute: compute options.
    - output: output options.

    ### Notes
    - With --points the points are printed first as `n,x,y`.
    """

    spec = load_hammersley(arguments)
    point_set = points(spec)
    report = HammersleyReport(spec, star_formula_term(spec), brute_star_2d(point_set))

    if not report.holds:
        logger.warning("c_m = %s lies outside [0, 2] for %s", report.c_m, spec)

    text = ""
    if arguments.points:
        text += to_csv(
            ["n", "x", "y"],
            (
                [index, format_rational(x), format_rational(y)]
                for index, (x, y) in enumerate(point_set, start=1)
            ),
        )

    text += to_csv(
        ["term_num", "term_den", "brute_num", "brute_den", "c_m_float"],
        [
            [
                report.term.numerator,
                report.term.denominator,
                report.brute.numerator,
                report.brute.denominator,
                format_float(report.c_m, output["float_digits"]),
            ]
        ],
    )

    write_output(text, arguments.output)
