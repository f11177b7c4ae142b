"""
Module that holds the ProgressHandler class used by long running commands.
"""

import logging
from typing import Optional

from rich import get_console
from rich.console import JustifyMethod, OverflowMethod
from rich.progress import (
    BarColumn,
    Progress,
    ProgressColumn,
    Task,
    TaskID,
    TimeRemainingColumn,
)
from rich.style import StyleType
from rich.text import Text

__all__ = ["ProgressHandler", "SizedTextColumn"]

logger = logging.getLogger(__name__)


class SizedTextColumn(ProgressColumn):
    """
    Custom sized text column based on the Rich library.
    """

    def __init__(
        self,
        text_format: str,
        style: StyleType = "none",
        justify: JustifyMethod = "left",
        overflow: Optional[OverflowMethod] = None,
        width: int = 20,
    ) -> None:
        """
        A column containing text.

        ### Arguments
        - text_format: The format string to use for the text.
        - style: The style to use for the text.
        - justify: The justification to use for the text.
        - overflow: The overflow method to use for truncating the text.
        - width: The maximum width of the text.
        """

        self.text_format = text_format
        self.justify: JustifyMethod = justify
        self.style = style
        self.overflow: Optional[OverflowMethod] = overflow
        self.width = width
        super().__init__()

    def render(self, task: Task) -> Text:
        """
        Render the Column.

        ### Arguments
        - task: The Task to render.

        ### Returns
        - A Text object.
        """

        text = Text.from_markup(
            self.text_format.format(task=task), style=self.style, justify=self.justify
        )
        text.truncate(max_width=self.width, overflow=self.overflow, pad=True)
        return text


class ProgressHandler:
    """
    Progress bar over a known number of steps. Below INFO verbosity the bar
    is replaced by one log line per step, so it never fights the log output.
    """

    def __init__(self, total: int, description: str = "Working"):
        """
        Initialize the progress handler.

        ### Arguments
        - total: number of steps.
        - description: label shown left of the bar.
        """

        self.total = total
        self.completed = 0
        self.simple = logging.getLogger("vdcperm").getEffectiveLevel() < logging.INFO
        self.quiet = logging.getLogger("vdcperm").getEffectiveLevel() > logging.INFO
        self.task_id: Optional[TaskID] = None

        if not self.simple:
            console = get_console()
            self.rich_progress_bar = Progress(
                SizedTextColumn(
                    "[white]{task.description}",
                    overflow="ellipsis",
                    width=int(console.width / 3),
                ),
                SizedTextColumn(
                    "{task.fields[message]}", width=24, style="nonimportant"
                ),
                BarColumn(bar_width=None, finished_style="green"),
                "[progress.percentage]{task.percentage:>3.0f}%",
                TimeRemainingColumn(),
                console=console,
                transient=True,
            )
            self.rich_progress_bar.__enter__()
            self.task_id = self.rich_progress_bar.add_task(
                description=description,
                message="",
                total=total,
                visible=not self.quiet,
            )

    def advance(self, message: str = "") -> None:
        """
        Mark one step as done.

        ### Arguments
        - message: short status shown next to the bar.
        """

        self.completed += 1
        if self.simple:
            logger.debug("%d/%d %s", self.completed, self.total, message)
            return

        if self.task_id is not None:
            self.rich_progress_bar.update(self.task_id, message=message, advance=1)

    def close(self) -> None:
        """
        Stop the progress bar.
        """

        if not self.simple:
            self.rich_progress_bar.stop()

    def __enter__(self) -> "ProgressHandler":
        return self

    def __exit__(self, *_) -> None:
        self.close()
