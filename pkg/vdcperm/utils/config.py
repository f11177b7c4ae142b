"""
Module related to managing reading and writing to the config file.

Default config - vdcperm.utils.config.DEFAULT_CONFIG
"""

import json
import logging
import os
import platform
from argparse import Namespace
from pathlib import Path
from typing import Any, Dict, Tuple, Union

import platformdirs

from vdcperm.types.options import ComputeOptions, OutputOptions, VdcOptions

__all__ = [
    "ConfigError",
    "get_vdcperm_path",
    "get_config_file",
    "get_output_path",
    "get_config",
    "create_settings_type",
    "create_settings",
    "GlobalConfig",
    "COMPUTE_OPTIONS",
    "OUTPUT_OPTIONS",
    "DEFAULT_CONFIG",
]

logger = logging.getLogger(__name__)


class ConfigError(Exception):
    """
    Base class for all exceptions related to config.
    """


def get_vdcperm_path() -> Path:
    """
    Get the path to the vdcperm folder.

    ### Returns
    - The path to the vdcperm folder.

    ### Notes
    - If the vdcperm directory does not exist, it will be created.
    """

    if platform.system() == "Linux":
        # prefer the XDG data folder when it already exists
        user_data_dir = Path(platformdirs.user_data_dir("vdcperm", "vdcperm"))
        if user_data_dir.exists():
            return user_data_dir

    vdcperm_path = Path(os.path.expanduser("~"), ".vdcperm")
    if not vdcperm_path.exists():
        os.mkdir(vdcperm_path)

    return vdcperm_path


def get_config_file() -> Path:
    """
    Get config file path

    ### Returns
    - The path to the config file.
    """

    return get_vdcperm_path() / "config.json"


def get_output_path(output_dir: Union[str, None] = None) -> Path:
    """
    Get the folder that receives report files.

    ### Arguments
    - output_dir: configured folder, if any.

    ### Returns
    - `output_dir`, else `$VDCPERM_OUTPUT_DIR`, else the current directory.
    """

    folder = output_dir or os.environ.get("VDCPERM_OUTPUT_DIR") or "."
    path = Path(folder)
    path.mkdir(parents=True, exist_ok=True)

    return path


def get_config() -> Dict[str, Any]:
    """
    Get the config.

    ### Returns
    - The dictionary with the config.

    ### Errors
    - ConfigError: If the config file does not exist or is not valid JSON.
    """

    config_path = get_config_file()

    if not config_path.exists():
        raise ConfigError(
            "Config file not found. "
            "Please run `vdcperm --generate-config` to create a config file."
        )

    with open(config_path, "r", encoding="utf-8") as config_file:
        try:
            return json.load(config_file)
        except json.JSONDecodeError as exception:
            raise ConfigError(
                f"Invalid config file {config_path}: {exception}"
            ) from exception


def create_settings_type(
    arguments: Namespace,
    config: Dict[str, Any],
    default: Union[ComputeOptions, OutputOptions],
) -> Dict[str, Any]:
    """
    Create settings dict
    Argument value has always the priority, then the config file
    value, and if neither are set, use default value

    ### Arguments
    - arguments: Namespace from argparse
    - config: dict loaded from the config file
    - default: dict

    ### Returns
    - settings: dict
    """

    settings = {}
    for key, default_value in default.items():
        argument_val = arguments.__dict__.get(key)
        config_val = config.get(key)

        if argument_val is not None:
            settings[key] = argument_val
        elif config_val is not None:
            settings[key] = config_val
        else:
            settings[key] = default_value

    return settings


def create_settings(arguments: Namespace) -> Tuple[ComputeOptions, OutputOptions]:
    """
    Create settings dicts for the computations and the output
    based on the arguments and config file (if enabled)

    ### Arguments
    - arguments: Namespace from argparse

    ### Returns
    - compute_options: ComputeOptions
    - output_options: OutputOptions
    """

    # The config file is loaded automatically when it sets `load_config`
    config = {}
    if getattr(arguments, "config", False) or (
        get_config_file().exists() and get_config().get("load_config")
    ):
        config = get_config()

    # https://github.com/python/mypy/issues/8890
    compute_options = ComputeOptions(
        **create_settings_type(arguments, config, COMPUTE_OPTIONS)  # type: ignore
    )
    output_options = OutputOptions(
        **create_settings_type(arguments, config, OUTPUT_OPTIONS)  # type: ignore
    )

    return compute_options, output_options


class GlobalConfig:
    """
    Class to store global configuration
    """

    parameters: Dict[str, Any] = {}

    @classmethod
    def set_parameter(cls, key, value):
        """
        Set a process wide parameter
        """

        cls.parameters[key] = value

    @classmethod
    def get_parameter(cls, key, default=None):
        """
        Get a process wide parameter
        """

        return cls.parameters.get(key, default)


COMPUTE_OPTIONS: ComputeOptions = {
    "threads": 1,
    "node_budget": 10**7,
    "exhaustive_cap": 5 * 10**7,
    "cycle_depth": 3,
    "n_max": 6,
    "digits_cap": 64,
}

OUTPUT_OPTIONS: OutputOptions = {
    "output_dir": None,
    "normalized": False,
    "float_digits": 17,
    "load_config": True,
    "log_level": "INFO",
    "log_format": None,
}

# https://github.com/python/mypy/issues/5382
DEFAULT_CONFIG: VdcOptions = {
    **COMPUTE_OPTIONS,  # type: ignore
    **OUTPUT_OPTIONS,  # type: ignore
}
