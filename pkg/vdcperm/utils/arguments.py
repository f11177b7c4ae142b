"""
Module that handles the command line arguments.
"""

import argparse
import sys
import textwrap
from argparse import ArgumentParser, Namespace, _ArgumentGroup
from typing import List, NoReturn

from vdcperm import _version
from vdcperm.types.piecewise import PARTS
from vdcperm.utils.logging import NAME_TO_LEVEL

__all__ = [
    "OPERATIONS",
    "ArgumentsError",
    "SmartFormatter",
    "create_parser",
    "parse_arguments",
    "require",
]

OPERATIONS = ["gen", "disc", "psi", "alpha", "search", "hammersley", "perm", "verify"]

# destinations whose flag is spelled differently
FLAG_NAMES = {"range": "N", "node_budget": "budget", "cycle_depth": "cycles"}


class ArgumentsError(Exception):
    """
    Base class for all exceptions related to command line arguments.
    """


class SmartFormatter(argparse.HelpFormatter):
    """
    Class that overrides the default help formatter.
    """

    def _split_lines(self, text: str, width: int) -> List[str]:
        """
        Split the text in multiple lines if a line starts
        with a N|
        """

        if text.startswith("N|"):
            return text[2:].splitlines()

        text = self._whitespace_matcher.sub(" ", text).strip()

        return textwrap.wrap(text, width)


class VdcArgumentParser(ArgumentParser):
    """
    Argument parser that reports usage errors with exit code 1.
    """

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def parse_main_options(parser: _ArgumentGroup):
    """
    Parse main options from the command line.

    ### Arguments
    - parser: The argument parser to add the options to.
    """

    parser.add_argument(
        "operation",
        choices=OPERATIONS,
        help=(
            "N|The operation to perform.\n"
            "gen: Print sequence points.\n"
            "disc: Exact discrepancies of the first N points.\n"
            "psi: Pieces of ψ, ψ⁺ or ψ⁻, optionally as SVG.\n"
            "alpha: Bracket of the asymptotic constant.\n"
            "search: Pruned search for permutations with small max ψ.\n"
            "hammersley: Star discrepancy of a two dimensional point set.\n"
            "perm: Build a permutation from a family.\n"
            "verify: Run the acceptance checks.\n\n"
        ),
    )

    # Add base argument, shared by every operation
    parser.add_argument("--base", type=int, help="The base b.")

    parser.add_argument(
        "--N",
        dest="range",
        help="Index range `a..b`, or a single value.",
    )

    parser.add_argument(
        "--config",
        action="store_true",
        help=(
            "Load settings from the config file, "
            "`~/.vdcperm/config.json` or the platform data folder."
        ),
    )


def parse_permutation_options(parser: _ArgumentGroup):
    """
    Parse the options selecting permutations and sequences.

    ### Arguments
    - parser: The argument parser to add the options to.
    """

    parser.add_argument("--perm", help="Permutation as images, `0,2,1`.")

    parser.add_argument(
        "--perm-file", help="File with one permutation per line; the first one is used."
    )

    parser.add_argument("--record", help="Catalogued permutation, see --list-records.")

    parser.add_argument("--omega", type=int, help="Faure's ω_b permutation.")

    parser.add_argument("--tau", type=int, help="Reversal τ_b.")

    parser.add_argument(
        "--schedule",
        help=(
            "N|Swap schedule of the sequence:\n"
            "faure-a, periodic:1;0;0 or explicit:1;4;5[:1]"
        ),
    )

    parser.add_argument("--swap", help="Alias of --schedule for disc.")

    parser.add_argument("--part", choices=PARTS, help="ψ part to use.")

    parser.add_argument("--affine", help="Affine permutation `p,a0,a1`.")

    parser.add_argument(
        "--fractional", help="Fractional-affine permutation `p,a0,a1,a2`."
    )

    parser.add_argument(
        "--carlitz2", help="Carlitz rank 2 permutation `p,A0,A1,A2,A3`."
    )

    parser.add_argument("--intricate", help="Intrication of two permutations `P;Q`.")

    parser.add_argument(
        "--partner", help="Carlitz partner of a fractional-affine one `p,a0,a1,a2`."
    )

    parser.add_argument("--cf", help="Continued fraction of `a0/p`.")

    parser.add_argument("--m", type=int, help="Number of digits of a Hammersley set.")

    parser.add_argument("--vec", help="Permutation vector `id,tau,0;2;1,...`.")

    parser.add_argument("--vec-file", help="File with one permutation per line.")

    parser.add_argument(
        "--itau",
        action="store_true",
        help="Use the i-τ vector for the Hammersley set.",
    )

    parser.add_argument(
        "--sigma-sbar", help="Use the σσ̄ vector built from a permutation."
    )


def parse_compute_options(parser: _ArgumentGroup):
    """
    Parse the options that bound the computations.

    ### Arguments
    - parser: The argument parser to add the options to.
    """

    parser.add_argument("--threads", type=int, help="Worker threads.")

    parser.add_argument(
        "--budget", dest="node_budget", type=int, help="Node budget of the searches."
    )

    parser.add_argument(
        "--exhaustive-cap", type=int, help="Largest b^n evaluated exhaustively."
    )

    parser.add_argument(
        "--cycles",
        dest="cycle_depth",
        type=int,
        help="Longest digit cycle tried for lower bounds.",
    )

    parser.add_argument("--n-max", type=int, help="Largest n for max F_n / n.")

    parser.add_argument(
        "--digits",
        dest="digits_cap",
        type=int,
        help="Digit position past which non periodic tails are enclosed.",
    )

    parser.add_argument("--fn", type=int, help="Also report max F_n for this n.")

    parser.add_argument(
        "--mode",
        choices=["branch", "exhaustive"],
        default="branch",
        help="F_n maximizer.",
    )

    parser.add_argument("--threshold", help="Search threshold `num/den`.")

    parser.add_argument(
        "--no-symmetry",
        dest="symmetry",
        action="store_false",
        help="Search every permutation instead of one per symmetry class.",
    )

    parser.add_argument(
        "--stage2", action="store_true", help="Rank survivors by max F_2 / 2."
    )

    parser.add_argument(
        "--prune",
        choices=["total", "plus"],
        default="total",
        help="ψ part used for pruning.",
    )

    parser.add_argument(
        "--pm", action="store_true", help="Also bracket α⁺ and α⁻."
    )

    parser.add_argument(
        "--oracles", action="store_true", help="Add L² and diaphony columns."
    )

    # Verification profiles
    profile = parser.add_mutually_exclusive_group()
    profile.add_argument(
        "--quick",
        dest="profile_name",
        action="store_const",
        const="quick",
        help="Run the quick verification profile (default).",
    )
    profile.add_argument(
        "--full",
        dest="profile_name",
        action="store_const",
        const="full",
        help="Run the full verification profile.",
    )


def parse_output_options(parser: _ArgumentGroup):
    """
    Parse output options from the command line.

    ### Arguments
    - parser: The argument parser to add the options to.
    """

    parser.add_argument(
        "--output", help="Write the CSV to this file instead of stdout."
    )

    parser.add_argument("--output-dir", help="Folder for report files.")

    parser.add_argument(
        "--normalized",
        action="store_const",
        const=True,
        help="Divide discrepancies by N when printing.",
    )

    parser.add_argument(
        "--float", dest="with_float", action="store_true", help="Add float columns."
    )

    parser.add_argument(
        "--float-digits", type=int, help="Significant digits of floats."
    )

    parser.add_argument("--csv", action="store_true", help="Print ψ pieces as CSV.")

    parser.add_argument("--svg", help="Write a plot of ψ to this file.")

    parser.add_argument(
        "--points", action="store_true", help="Print the Hammersley points."
    )

    parser.add_argument("--report", help="Write the verification report to this file.")


def parse_misc_options(parser: _ArgumentGroup):
    """
    Parse misc options from the command line.

    ### Arguments
    - parser: The argument parser to add the options to.
    """

    parser.add_argument(
        "--log-level",
        choices=NAME_TO_LEVEL.keys(),
        help="Select log level.",
    )

    parser.add_argument(
        "--log-format",
        help=(
            "Custom logging format to use. More info: "
            "https://docs.python.org/3/library/logging.html#logrecord-attributes"
        ),
    )


def parse_other_options(parser: _ArgumentGroup):
    """
    Parse other options from the command line.

    ### Arguments
    - parser: The argument parser to add the options to.
    """

    parser.add_argument(
        "--generate-config",
        action="store_true",
        help="Generate a config file. This will overwrite current config if present.",
    )

    parser.add_argument(
        "--list-records", action="store_true", help="List the catalogued permutations."
    )

    parser.add_argument(
        "--profile",
        action="store_true",
        help="Run in profile mode. Useful for debugging.",
    )

    parser.add_argument(
        "--version",
        "-v",
        action="version",
        help="Show the version number and exit.",
        version=_version.__version__,
    )


def create_parser() -> ArgumentParser:
    """
    Build the argument parser.

    ### Returns
    - The parser.
    """

    parser = VdcArgumentParser(
        prog="vdcperm",
        description=(
            "Exact discrepancy of generalized van der Corput sequences "
            "and the ψ functions of their permutations"
        ),
        formatter_class=SmartFormatter,
    )

    main_options = parser.add_argument_group("Main options")
    parse_main_options(main_options)

    permutation_options = parser.add_argument_group("Permutation options")
    parse_permutation_options(permutation_options)

    compute_options = parser.add_argument_group("Compute options")
    parse_compute_options(compute_options)

    output_options = parser.add_argument_group("Output options")
    parse_output_options(output_options)

    misc_options = parser.add_argument_group("Misc options")
    parse_misc_options(misc_options)

    other_options = parser.add_argument_group("Other options")
    parse_other_options(other_options)

    return parser


def parse_arguments() -> Namespace:
    """
    Parse arguments from the command line.

    ### Returns
    - A Namespace object containing the parsed arguments.
    """

    parser = create_parser()

    return parser.parse_args()


def require(arguments: Namespace, *names: str) -> None:
    """
    Fail with a usage error when one of the options was not given.

    ### Arguments
    - arguments: the parsed arguments.
    - names: attribute names of the required options.
    """

    missing = [name for name in names if getattr(arguments, name, None) is None]
    if missing:
        flags = ", ".join(
            "--" + FLAG_NAMES.get(name, name.replace("_", "-")) for name in missing
        )
        raise ArgumentsError(f"{arguments.operation} needs {flags}")
