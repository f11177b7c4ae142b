"""
Node budget shared by the tree searches and the F_n maximization.
"""

import threading
from typing import Optional

__all__ = ["NodeBudget", "ResourceLimitError"]


class ResourceLimitError(Exception):
    """
    Base class for all exceptions related to exhausted computation budgets.
    """


class NodeBudget:
    """
    Thread safe counter of expanded nodes. A limit of `None` means unbounded.
    """

    def __init__(self, limit: Optional[int] = None):
        if limit is not None and limit <= 0:
            raise ResourceLimitError(f"Node budget must be positive, got {limit}")

        self.limit = limit
        self.used = 0
        self._lock = threading.Lock()

    def spend(self, nodes: int = 1) -> None:
        """
        Account for expanded nodes.

        ### Arguments
        - nodes: number of nodes expanded.

        ### Errors
        - ResourceLimitError: once the limit is exceeded.
        """

        with self._lock:
            self.used += nodes
            if self.limit is not None and self.used > self.limit:
                raise ResourceLimitError(
                    f"Node budget of {self.limit} exhausted"
                )

    @property
    def remaining(self) -> Optional[int]:
        """
        Nodes left, `None` when unbounded.
        """

        if self.limit is None:
            return None

        return max(self.limit - self.used, 0)
