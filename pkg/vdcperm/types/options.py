"""
This file contains option types for the compute and output layers.
Options types have all the fields marked as required.
OptionalOptions types have all the fields marked as optional.
"""

from typing import Optional

from typing_extensions import TypedDict

__all__ = [
    "ComputeOptions",
    "OutputOptions",
    "VdcOptions",
    "ComputeOptionalOptions",
    "OutputOptionalOptions",
    "VdcOptionalOptions",
]


class ComputeOptions(TypedDict):
    """
    Options that bound the exact computations.
    """

    threads: int
    node_budget: int
    exhaustive_cap: int
    cycle_depth: int
    n_max: int
    digits_cap: int


class OutputOptions(TypedDict):
    """
    Options used when rendering results.
    """

    output_dir: Optional[str]
    normalized: bool
    float_digits: int
    load_config: bool
    log_level: str
    log_format: Optional[str]


class VdcOptions(ComputeOptions, OutputOptions):
    """
    Options used for initializing vdcperm.
    """


class ComputeOptionalOptions(TypedDict, total=False):
    """
    Options that bound the exact computations.
    """

    threads: int
    node_budget: int
    exhaustive_cap: int
    cycle_depth: int
    n_max: int
    digits_cap: int


class OutputOptionalOptions(TypedDict, total=False):
    """
    Options used when rendering results.
    """

    output_dir: Optional[str]
    normalized: bool
    float_digits: int
    load_config: bool
    log_level: str
    log_format: Optional[str]


class VdcOptionalOptions(ComputeOptionalOptions, OutputOptionalOptions, total=False):
    """
    Options used for initializing vdcperm.
    """
