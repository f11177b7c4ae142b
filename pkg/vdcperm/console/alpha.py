"""
Alpha module for the console.
"""

import hashlib
import logging
from argparse import Namespace
from typing import List

from vdcperm.asymptotics.brackets import alpha_bracket
from vdcperm.types.bracket import AlphaBracket
from vdcperm.types.budget import NodeBudget
from vdcperm.types.options import ComputeOptions, OutputOptions
from vdcperm.types.permutation import Permutation, PermutationError
from vdcperm.utils.formatter import to_csv, write_output
from vdcperm.utils.interval import Interval
from vdcperm.utils.selection import load_permutation

__all__ = ["alpha", "perm_hash", "bracket_rows"]

logger = logging.getLogger(__name__)

HEADER = [
    "base",
    "perm_hash",
    "n",
    "upper_num",
    "upper_den",
    "cycle",
    "lower_num",
    "lower_den",
    "s_float_lo",
    "s_float_hi",
]


def perm_hash(sigma: Permutation) -> str:
    """
    Short stable identifier of a permutation.
    """

    return hashlib.sha1(str(sigma).encode("utf-8")).hexdigest()[:12]


def bracket_rows(bracket: AlphaBracket) -> List[List[object]]:
    """
    One row per n: max F_n / n, the periodic lower bound, and the
    enclosure of s from the best upper bound so far.
    """

    sigma = bracket.permutation
    cycle = ";".join(str(digit) for digit in bracket.lower_cycle)
    identifier = perm_hash(sigma)

    rows = []
    for n, upper in enumerate(bracket.uppers, start=1):
        best = min(bracket.uppers[:n])
        s_interval = Interval.from_bounds(bracket.lower, best) / Interval.log(
            sigma.base
        )
        rows.append(
            [
                sigma.base,
                identifier,
                n,
                upper.numerator,
                upper.denominator,
                cycle,
                bracket.lower.numerator,
                bracket.lower.denominator,
                repr(s_interval.lo),
                repr(s_interval.hi),
            ]
        )

    return rows


def alpha(arguments: Namespace, compute: ComputeOptions, output: OutputOptions) -> None:
    """
    Print the bracket of α for a permutation, and of α⁺ and α⁻ with --pm.

    ### Arguments
    - arguments: parsed command line arguments.
    - compute: compute options.
    - output: output options.
    """

    sigma = load_permutation(arguments)
    if sigma is None:
        raise PermutationError("Select a permutation with --perm or --base")

    parts = ["total", "plus", "minus"] if arguments.pm else [arguments.part or "total"]
    header = HEADER + (["part"] if arguments.pm else [])
    rows = []
    for part in parts:
        bracket = alpha_bracket(
            sigma,
            n_max=compute["n_max"],
            cycle_depth=compute["cycle_depth"],
            part=part,
            budget=NodeBudget(compute["node_budget"]),
            threads=compute["threads"],
        )

        if not bracket.complete:
            logger.warning(
                "Bracket of %s (%s) stopped at n=%d", sigma, part, bracket.upper_n
            )

        logger.info(
            "α (%s) of %s in [%s, %s]", part, sigma, bracket.lower, bracket.upper
        )

        for row in bracket_rows(bracket):
            rows.append(row + ([part] if arguments.pm else []))

    write_output(to_csv(header, rows), arguments.output)
