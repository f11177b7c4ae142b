"""
Psi module for the console.
"""

import logging
from argparse import Namespace

from vdcperm.psi.functions import max_psi, near_zero_slopes, psi as psi_triple
from vdcperm.psi.maximize import f_n_max
from vdcperm.types.budget import NodeBudget
from vdcperm.types.options import ComputeOptions, OutputOptions
from vdcperm.types.permutation import PermutationError
from vdcperm.utils.formatter import (
    PIECE_HEADER,
    format_rational,
    render_svg,
    to_csv,
    write_output,
)
from vdcperm.utils.selection import load_permutation

__all__ = ["psi"]

logger = logging.getLogger(__name__)


def psi(arguments: Namespace, compute: ComputeOptions, output: OutputOptions) -> None:
    """
    Print ψ (or ψ⁺, ψ⁻ with --part) of a permutation.

    ### Arguments
    - arguments: parsed command line arguments.
    - compute: compute options.
    - output: output options.

    ### Notes
    - With --csv every piece is printed as integer columns, starting at its
    breakpoint, otherwise a summary with the maximum. --svg also writes a plot and
    --fn adds max F_n.
    """

    sigma = load_permutation(arguments)
    if sigma is None:
        raise PermutationError("Select a permutation with --perm or --base")

    part = arguments.part or "total"
    function = psi_triple(sigma).part(part)

    if arguments.svg:
        render_svg(function, arguments.svg, f"ψ {part} of {sigma}")

    if arguments.csv:
        rows = [
            [
                piece.start.numerator,
                piece.start.denominator,
                piece.slope.numerator,
                piece.slope.denominator,
                piece.intercept.numerator,
                piece.intercept.denominator,
            ]
            for piece in function.pieces
        ]
        write_output(to_csv(PIECE_HEADER, rows), arguments.output)
        return None

    value, argmax = max_psi(sigma, part)
    plus, minus, total = near_zero_slopes(sigma)
    lines = [
        f"permutation {sigma} (base {sigma.base})",
        f"part {part}: {len(function.pieces)} pieces",
        f"max {format_rational(value)} at x = {format_rational(argmax)}",
        f"slopes on [0, 1/b]: plus {plus}, minus {minus}, total {total}",
    ]

    if arguments.fn:
        result = f_n_max(
            sigma,
            arguments.fn,
            mode=arguments.mode,
            part=part,
            budget=NodeBudget(compute["node_budget"]),
            threads=compute["threads"],
            exhaustive_cap=compute["exhaustive_cap"],
        )
        lines.append(result.describe(sigma.base))
        normalized = format_rational(result.normalized)
        lines.append(f"max F_{result.n} / {result.n} = {normalized}")

    write_output("\n".join(lines) + "\n", arguments.output)

    return None
