"""
Verify module for the console.
"""

import json
import logging
import os
from argparse import Namespace
from pathlib import Path
from typing import List, Optional

from rich.console import Console
from rich.table import Table

from vdcperm.types.options import ComputeOptions, OutputOptions
from vdcperm.utils.checks import CheckResult, VerifyError, checks_for, run_check
from vdcperm.utils.config import get_output_path
from vdcperm.utils.progress import ProgressHandler

__all__ = ["verify", "render_table", "write_report"]

logger = logging.getLogger(__name__)

REPORT_NAME = "vdcperm-verify.json"


def render_table(results: List[CheckResult]) -> Table:
    """
    Rich table with one row per check.
    """

    table = Table(title="vdcperm verify")
    table.add_column("check", style="bold")
    table.add_column("expected")
    table.add_column("actual")
    table.add_column("result")
    table.add_column("seconds", justify="right")

    for result in results:
        table.add_row(
            result.name,
            result.expected,
            result.actual,
            "[green]pass" if result.passed else "[red]FAIL",
            f"{result.seconds:.2f}",
        )

    return table


def write_report(results: List[CheckResult], path: Path) -> None:
    """
    Write the results as a JSON list.
    """

    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as report_file:
        json.dump([result.json for result in results], report_file, indent=4)
        report_file.write("\n")

    logger.info("Report written to %s", path)


def _report_path(arguments: Namespace, output: OutputOptions) -> Optional[Path]:
    if arguments.report:
        return Path(arguments.report)

    if output["output_dir"] or os.environ.get("VDCPERM_OUTPUT_DIR"):
        return get_output_path(output["output_dir"]) / REPORT_NAME

    return None


def verify(
    arguments: Namespace, compute: ComputeOptions, output: OutputOptions
) -> None:
    """
    Run the acceptance checks of the selected profile.

    ### Arguments
    - arguments: parsed command line arguments.
    - compute: compute options.
    - output: output options.

    ### Errors
    - VerifyError: at least one check failed.
    """

    profile = arguments.profile_name or "quick"
    checks = checks_for(profile)
    logger.info("Running %d %s checks", len(checks), profile)

    results = []
    with ProgressHandler(len(checks), f"verify --{profile}") as progress:
        for check in checks:
            result = run_check(check)
            results.append(result)
            progress.advance(f"{check.name}: {'ok' if result.passed else 'FAILED'}")

    Console().print(render_table(results))

    path = _report_path(arguments, output)
    if path is not None:
        write_report(results, path)

    failed = [result.name for result in results if not result.passed]
    if failed:
        raise VerifyError(f"{len(failed)} checks failed: {', '.join(failed)}")

    logger.info("All %d checks passed", len(results))
