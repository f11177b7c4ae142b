"""
Pruned permutation search and F_2 ranking.
"""

from vdcperm.search.tree import rank_f2, search, set_value

__all__ = ["rank_f2", "search", "set_value"]
