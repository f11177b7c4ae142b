"""
Init module for vdcperm. This module contains the main entry point for vdcperm
and the Vdcperm class.
"""

import logging
from typing import List, Optional, Sequence, Union

from vdcperm._version import __version__
from vdcperm.asymptotics.brackets import alpha_bracket
from vdcperm.console import console_entry_point
from vdcperm.discrepancy.exact import discrepancy_table
from vdcperm.hammersley.points import hammersley_check
from vdcperm.psi.functions import max_psi, psi
from vdcperm.psi.maximize import f_n_max
from vdcperm.search.tree import search
from vdcperm.types.bracket import AlphaBracket
from vdcperm.types.budget import NodeBudget
from vdcperm.types.hammersley import HammersleyReport, HammersleySpec
from vdcperm.types.options import ComputeOptionalOptions, ComputeOptions
from vdcperm.types.permutation import Permutation
from vdcperm.types.piecewise import FnMaximum, PsiTriple
from vdcperm.types.search import SearchConfig, SearchResult
from vdcperm.types.sequence import DiscrepancyReport, SigmaSequence
from vdcperm.utils.config import COMPUTE_OPTIONS
from vdcperm.utils.formatter import parse_rational

__all__ = ["Vdcperm", "console_entry_point", "__version__"]

logger = logging.getLogger(__name__)


class Vdcperm:
    """
    Vdcperm class, which applies one set of compute limits to every
    operation of the package.

    ```python
    from vdcperm import Vdcperm

    vdcperm = Vdcperm(settings={"n_max": 4, "cycle_depth": 2})

    bracket = vdcperm.alpha("0,7,3,10,5,2,9,6,1,8,4,11")
    reports = vdcperm.discrepancies("0,1", 1, 8)
    ```
    """

    def __init__(
        self,
        settings: Optional[Union[ComputeOptionalOptions, ComputeOptions]] = None,
    ):
        """
        Initialize the Vdcperm class

        ### Arguments
        - settings: compute options, missing keys take the defaults.
        """

        self.settings: ComputeOptions = {  # type: ignore
            **COMPUTE_OPTIONS,
            **(settings or {}),
        }

        logger.debug("Vdcperm initialized with %s", self.settings)

    @staticmethod
    def permutation(sigma: Union[str, Sequence[int], Permutation]) -> Permutation:
        """
        Accept a literal, an image list or a Permutation.
        """

        if isinstance(sigma, Permutation):
            return sigma

        if isinstance(sigma, str):
            return Permutation.from_string(sigma)

        return Permutation(tuple(sigma))

    def budget(self) -> NodeBudget:
        """
        Fresh node budget with the configured limit.
        """

        return NodeBudget(self.settings["node_budget"])

    def psi(self, sigma: Union[str, Sequence[int], Permutation]) -> PsiTriple:
        """
        ψ⁺, ψ⁻ and ψ of a permutation.
        """

        return psi(self.permutation(sigma))

    def max_psi(self, sigma: Union[str, Sequence[int], Permutation]):
        """
        Maximum of ψ and its smallest argmax.
        """

        return max_psi(self.permutation(sigma))

    def f_n_max(
        self, sigma: Union[str, Sequence[int], Permutation], n: int
    ) -> FnMaximum:
        """
        Exact maximum of F_n.
        """

        return f_n_max(
            self.permutation(sigma),
            n,
            budget=self.budget(),
            threads=self.settings["threads"],
            exhaustive_cap=self.settings["exhaustive_cap"],
        )

    def alpha(
        self, sigma: Union[str, Sequence[int], Permutation], part: str = "total"
    ) -> AlphaBracket:
        """
        Bracket of α, α⁺ or α⁻.
        """

        return alpha_bracket(
            self.permutation(sigma),
            n_max=self.settings["n_max"],
            cycle_depth=self.settings["cycle_depth"],
            part=part,
            budget=self.budget(),
            threads=self.settings["threads"],
        )

    def discrepancies(
        self,
        sigma: Union[str, Sequence[int], Permutation, SigmaSequence],
        start: int,
        stop: int,
    ) -> List[DiscrepancyReport]:
        """
        Exact discrepancies for start ≤ N ≤ stop of a constant or given
        sequence.
        """

        seq = (
            sigma
            if isinstance(sigma, SigmaSequence)
            else SigmaSequence.constant(self.permutation(sigma))
        )

        return discrepancy_table(seq, start, stop, self.settings["digits_cap"])

    def search(
        self, base: int, threshold: Union[str, int], **kwargs
    ) -> SearchResult:
        """
        Permutations of a base with max ψ below the threshold.
        Keyword arguments go to SearchConfig.
        """

        config = SearchConfig(
            base,
            parse_rational(str(threshold)),
            node_budget=kwargs.pop("node_budget", self.settings["node_budget"]),
            threads=kwargs.pop("threads", self.settings["threads"]),
            **kwargs,
        )

        return search(config)

    def hammersley(
        self, base: int, vector: Sequence[Union[str, Sequence[int], Permutation]]
    ) -> HammersleyReport:
        """
        Formula term and brute force star discrepancy of a Hammersley set.
        """

        permutations = tuple(self.permutation(item) for item in vector)
        return hammersley_check(HammersleySpec(base, len(permutations), permutations))
