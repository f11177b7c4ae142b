import json
import os
import platform
from argparse import Namespace
from pathlib import Path
from types import SimpleNamespace

import pytest

from vdcperm.utils.config import *


@pytest.fixture()
def setup(tmpdir, monkeypatch):
    monkeypatch.setattr(os.path, "expanduser", lambda *_: tmpdir)
    monkeypatch.setattr(platform, "system", lambda: "Windows")
    data = SimpleNamespace()
    data.directory = tmpdir
    yield data


def write_config(directory, config):
    path = Path(directory, ".vdcperm", "config.json")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(config), encoding="utf-8")
    return path


def test_get_vdcperm_path(setup):
    """
    Tests that the vdcperm path is created if it does not exist.
    """

    assert get_vdcperm_path() == Path(setup.directory, ".vdcperm")
    assert os.path.exists(os.path.join(setup.directory, ".vdcperm"))


def test_get_config_path(setup):
    """
    Tests if the path to config file is correct.
    """

    assert get_config_file() == Path(setup.directory, ".vdcperm", "config.json")


def test_get_output_path(setup, monkeypatch):
    """
    Tests the output folder priority: argument, environment, current folder.
    """

    explicit = Path(setup.directory, "reports")
    assert get_output_path(str(explicit)) == explicit
    assert explicit.exists()

    monkeypatch.setenv("VDCPERM_OUTPUT_DIR", str(Path(setup.directory, "env")))
    assert get_output_path() == Path(setup.directory, "env")

    monkeypatch.delenv("VDCPERM_OUTPUT_DIR")
    assert get_output_path() == Path(".")


def test_get_config_not_created(setup):
    """
    Tests if exception is raised if config file does not exist.
    """

    with pytest.raises(ConfigError):
        get_config()


def test_get_config_invalid(setup):
    """
    Tests if a broken config file raises a ConfigError.
    """

    path = Path(setup.directory, ".vdcperm", "config.json")
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("{threads: 2", encoding="utf-8")

    with pytest.raises(ConfigError):
        get_config()


def test_get_config(setup):
    """
    Tests if the config file is read.
    """

    write_config(setup.directory, DEFAULT_CONFIG)

    assert get_config() == DEFAULT_CONFIG


def test_create_settings_type():
    """
    Tests the priority of arguments over config over defaults.
    """

    arguments = Namespace(threads=4, node_budget=None)
    config = {"node_budget": 100, "threads": 2}

    settings = create_settings_type(arguments, config, COMPUTE_OPTIONS)

    assert settings["threads"] == 4
    assert settings["node_budget"] == 100
    assert settings["n_max"] == COMPUTE_OPTIONS["n_max"]


def test_create_settings(setup):
    """
    Tests if the config file is loaded when it sets load_config.
    """

    write_config(setup.directory, {**DEFAULT_CONFIG, "n_max": 9, "float_digits": 5})

    compute, output = create_settings(Namespace(threads=3))

    assert compute["threads"] == 3
    assert compute["n_max"] == 9
    assert output["float_digits"] == 5


def test_create_settings_skip_config(setup):
    """
    Tests if a config file with load_config off is ignored.
    """

    write_config(setup.directory, {**DEFAULT_CONFIG, "n_max": 9, "load_config": False})

    compute, output = create_settings(Namespace())

    assert compute == COMPUTE_OPTIONS
    assert output == OUTPUT_OPTIONS


def test_global_config():
    """
    Tests process wide parameters.
    """

    GlobalConfig.set_parameter("float_digits", 7)

    assert GlobalConfig.get_parameter("float_digits") == 7
    assert GlobalConfig.get_parameter("missing", "fallback") == "fallback"

    GlobalConfig.set_parameter("float_digits", 17)


def test_default_config():
    """
    Tests if the default config merges both option groups.
    """

    assert set(DEFAULT_CONFIG) == set(COMPUTE_OPTIONS) | set(OUTPUT_OPTIONS)
