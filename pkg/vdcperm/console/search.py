"""
Search module for the console.
"""

import logging
from argparse import Namespace

from vdcperm.search.tree import search as run_search
from vdcperm.types.options import ComputeOptions, OutputOptions
from vdcperm.types.search import SearchConfig
from vdcperm.utils.arguments import require
from vdcperm.utils.formatter import parse_rational, to_csv, write_output

__all__ = ["search"]

logger = logging.getLogger(__name__)


def search(
    arguments: Namespace, compute: ComputeOptions, output: OutputOptions
) -> None:
    """
    Print the permutations of a base with max ψ below --threshold.

    ### Arguments
    - arguments: parsed command line arguments.
    - compute: compute options.
    - output: output options.
    """

    require(arguments, "base", "threshold")

    config = SearchConfig(
        base=arguments.base,
        threshold=parse_rational(arguments.threshold),
        symmetry_reduction=arguments.symmetry,
        node_budget=compute["node_budget"],
        stage2=arguments.stage2,
        prune_part=arguments.prune,
        threads=compute["threads"],
    )

    result = run_search(config)
    if not result.complete:
        logger.warning("The node budget ran out, the list below is partial")

    rows = [
        [
            str(survivor.permutation),
            survivor.max_psi.numerator,
            survivor.max_psi.denominator,
            "" if survivor.f2_half_max is None else survivor.f2_half_max.numerator,
            "" if survivor.f2_half_max is None else survivor.f2_half_max.denominator,
        ]
        for survivor in result.survivors
    ]

    write_output(
        to_csv(["perm", "max_psi_num", "max_psi_den", "f2_num", "f2_den"], rows),
        arguments.output,
    )
