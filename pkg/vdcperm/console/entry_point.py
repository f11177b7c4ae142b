"""
Module that holds the entry point for the console.
"""

import cProfile
import logging
import pstats
import sys
import time

from vdcperm.console.alpha import alpha
from vdcperm.console.disc import disc
from vdcperm.console.gen import gen
from vdcperm.console.hammersley import hammersley
from vdcperm.console.perm import perm
from vdcperm.console.psi import psi
from vdcperm.console.search import search
from vdcperm.console.verify import verify
from vdcperm.types.bracket import AsymptoticsError
from vdcperm.types.budget import ResourceLimitError
from vdcperm.types.hammersley import HammersleyError
from vdcperm.types.permutation import PermutationError
from vdcperm.types.piecewise import PsiError
from vdcperm.types.search import SearchError
from vdcperm.types.sequence import DiscrepancyError
from vdcperm.utils.arguments import ArgumentsError, parse_arguments
from vdcperm.utils.checks import VerifyError
from vdcperm.utils.config import ConfigError, GlobalConfig, create_settings
from vdcperm.utils.console import ACTIONS, generate_initial_config
from vdcperm.utils.formatter import FormatterError
from vdcperm.utils.interval import IntervalError
from vdcperm.utils.logging import init_logging

__all__ = ["console_entry_point", "entry_point", "OPERATIONS", "EXIT_CODES"]

OPERATIONS = {
    "gen": gen,
    "disc": disc,
    "psi": psi,
    "alpha": alpha,
    "search": search,
    "hammersley": hammersley,
    "perm": perm,
    "verify": verify,
}

# checked in order, the first matching class wins
EXIT_CODES = (
    (ArgumentsError, 1),
    (ResourceLimitError, 3),
    (VerifyError, 4),
    (
        (
            PermutationError,
            PsiError,
            DiscrepancyError,
            AsymptoticsError,
            SearchError,
            HammersleyError,
            ConfigError,
            FormatterError,
            IntervalError,
        ),
        2,
    ),
)

logger = logging.getLogger(__name__)


def console_entry_point():
    """
    Entry point for the console. With profile flag, it runs the code with cProfile.
    """

    if "--profile" in sys.argv:
        with cProfile.Profile() as profile:
            entry_point()

        stats = pstats.Stats(profile)
        stats.sort_stats(pstats.SortKey.TIME)
        stats.dump_stats("vdcperm.profile")
    else:
        entry_point()


def entry_point():
    """
    Console entry point for vdcperm. Parses the arguments, builds the
    settings and runs the selected operation.
    """

    # Create config file if it doesn't exist
    generate_initial_config()

    # Check if sys.argv contains an action
    # If it does, we run the action and exit
    try:
        action_to_run = next(
            action for action_name, action in ACTIONS.items() if action_name in sys.argv
        )
    except StopIteration:
        action_to_run = None

    if action_to_run:
        action_to_run()
        return None

    # Parse the arguments
    arguments = parse_arguments()

    # Create settings dicts
    compute_settings, output_settings = create_settings(arguments)

    init_logging(output_settings["log_level"], output_settings["log_format"])

    GlobalConfig.set_parameter("float_digits", output_settings["float_digits"])

    start_time = time.perf_counter()

    try:
        # Pick the operation to perform
        # based on the name and run it!
        OPERATIONS[arguments.operation](arguments, compute_settings, output_settings)
    except Exception as exception:  # pylint: disable=broad-except
        end_time = time.perf_counter()
        logger.debug("Took %d seconds", end_time - start_time)

        code = next(
            (code for kinds, code in EXIT_CODES if isinstance(exception, kinds)), None
        )
        if code is None:
            logger.exception("An error occurred")
            sys.exit(1)

        logger.error("%s", exception)
        sys.exit(code)

    end_time = time.perf_counter()
    logger.debug("Took %d seconds", end_time - start_time)

    return None
