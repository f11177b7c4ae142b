"""
Perm module for the console.
"""

import logging
from argparse import Namespace

from vdcperm.asymptotics.brackets import affine_bound_from_quotient
from vdcperm.permutations.arith import continued_fraction
from vdcperm.permutations.families import carlitz2, carlitz_partner
from vdcperm.types.options import ComputeOptions, OutputOptions
from vdcperm.types.permutation import PermutationError
from vdcperm.utils.formatter import parse_int_list, parse_ratio, to_csv, write_output
from vdcperm.utils.selection import load_permutation

__all__ = ["perm"]

logger = logging.getLogger(__name__)


def perm(arguments: Namespace, compute: ComputeOptions, output: OutputOptions) -> None:
    """
    Build and print a permutation of one of the families.

    ### Arguments
    - arguments: parsed command line arguments.
    - compute: compute options.
    - output: output options.

    ### Notes
    - --partner prints the Carlitz rank 2 parameters matching a
    fractional-affine permutation, --cf the continued fraction of a0/p
    with the affine discrepancy bound.
    """

    if arguments.partner:
        modulus, a0, a1, a2 = parse_int_list(arguments.partner)
        partner = carlitz_partner(modulus, a0, a1, a2)
        permutation = carlitz2(modulus, partner.a0, partner.a1, partner.a2, 0)
        text = to_csv(
            ["a0", "a1", "a2", "x1", "x2", "perm"],
            [[*partner, str(permutation)]],
        )
        write_output(text, arguments.output)
        return None

    if arguments.cf:
        expansion = continued_fraction(*parse_ratio(arguments.cf))
        text = to_csv(
            ["a0", "p", "quotients", "alpha_max", "bound"],
            [
                [
                    expansion.numerator,
                    expansion.denominator,
                    ";".join(str(quotient) for quotient in expansion.quotients),
                    expansion.alpha_max,
                    repr(affine_bound_from_quotient(expansion.alpha_max)),
                ]
            ],
        )
        write_output(text, arguments.output)
        return None

    permutation = load_permutation(arguments)
    if permutation is None:
        raise PermutationError(
            "Select a family: --omega, --tau, --affine, --fractional, --carlitz2, "
            "--intricate, --record, --partner or --cf"
        )

    logger.debug("Built %s in base %d", permutation, permutation.base)

    write_output(f"{permutation}\n", arguments.output)

    return None
