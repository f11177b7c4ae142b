"""
Resolve the permutation, sequence and vector options of the command line.
"""

import logging
from argparse import Namespace
from pathlib import Path
from typing import List, Optional

from vdcperm.hammersley.points import itau_vec, sigma_sbar_vec
from vdcperm.permutations.catalogue import get_record
from vdcperm.permutations.families import (
    affine,
    carlitz2,
    fractional_affine,
    intricate,
    tau,
)
from vdcperm.permutations.omega import faure_omega
from vdcperm.types.hammersley import HammersleySpec
from vdcperm.types.permutation import Permutation, PermutationError
from vdcperm.types.sequence import SigmaSequence, SwapSchedule
from vdcperm.utils.formatter import parse_int_list

__all__ = [
    "read_permutation_file",
    "parse_vector_item",
    "load_permutation",
    "load_sequence",
    "load_hammersley",
]

logger = logging.getLogger(__name__)


def read_permutation_file(path: str) -> List[Permutation]:
    """
    One `0,2,1` literal per line; blank lines and `#` comments are skipped.
    """

    lines = Path(path).read_text(encoding="utf-8").splitlines()
    return [
        Permutation.from_string(line)
        for line in (line.strip() for line in lines)
        if line and not line.startswith("#")
    ]


def parse_vector_item(item: str, base: int) -> Permutation:
    """
    `id`, `tau`, or a `;` separated permutation literal.
    """

    item = item.strip()
    if item == "id":
        return Permutation.identity(base)

    if item == "tau":
        return tau(base)

    return Permutation(tuple(parse_int_list(item, ";")))


def load_permutation(arguments: Namespace) -> Optional[Permutation]:
    """
    The permutation selected by --perm, --perm-file, --record, --omega,
    --tau, --affine, --fractional, --carlitz2 or --intricate, or None.

    ### Errors
    - PermutationError: the permutation disagrees with --base.
    """

    permutation = None
    if getattr(arguments, "perm", None):
        permutation = Permutation.from_string(arguments.perm)
    elif getattr(arguments, "perm_file", None):
        permutations = read_permutation_file(arguments.perm_file)
        if not permutations:
            raise PermutationError(f"No permutation in {arguments.perm_file}")
        permutation = permutations[0]
    elif getattr(arguments, "record", None):
        permutation = get_record(arguments.record).permutation
    elif getattr(arguments, "omega", None):
        permutation = faure_omega(arguments.omega)
    elif getattr(arguments, "tau", None):
        permutation = tau(arguments.tau)
    elif getattr(arguments, "affine", None):
        permutation = affine(*parse_int_list(arguments.affine))
    elif getattr(arguments, "fractional", None):
        permutation = fractional_affine(*parse_int_list(arguments.fractional))
    elif getattr(arguments, "carlitz2", None):
        permutation = carlitz2(*parse_int_list(arguments.carlitz2))
    elif getattr(arguments, "intricate", None):
        left, _, right = arguments.intricate.partition(";")
        permutation = intricate(
            Permutation.from_string(left), Permutation.from_string(right)
        )

    if permutation is None and getattr(arguments, "base", None):
        permutation = Permutation.identity(arguments.base)

    base = getattr(arguments, "base", None)
    if permutation is not None and base is not None and permutation.base != base:
        raise PermutationError(
            f"Permutation {permutation} is in base {permutation.base}, not {base}"
        )

    return permutation


def load_sequence(arguments: Namespace) -> SigmaSequence:
    """
    The sequence of the selected permutation, swapped on --schedule or --swap.
    """

    permutation = load_permutation(arguments)
    if permutation is None:
        raise PermutationError("Select a permutation with --perm or --base")

    schedule = getattr(arguments, "schedule", None) or getattr(arguments, "swap", None)
    if schedule:
        return SigmaSequence.swapped(permutation, SwapSchedule.from_string(schedule))

    return SigmaSequence.constant(permutation)


def load_hammersley(arguments: Namespace) -> HammersleySpec:
    """
    The Hammersley set of --base and --m with the vector from --vec,
    --vec-file, --itau or --sigma-sbar.
    """

    base, m = arguments.base, arguments.m
    if base is None or m is None:
        raise PermutationError("Hammersley sets need --base and --m")

    if arguments.vec:
        vector = [parse_vector_item(item, base) for item in arguments.vec.split(",")]
    elif arguments.vec_file:
        vector = read_permutation_file(arguments.vec_file)
    elif arguments.sigma_sbar:
        vector = sigma_sbar_vec(Permutation.from_string(arguments.sigma_sbar), m)
    else:
        if not arguments.itau:
            logger.info("No vector selected, using i-τ")
        vector = itau_vec(base, m)

    return HammersleySpec(base, m, tuple(vector))
