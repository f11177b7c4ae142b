import re
import sys
from pathlib import Path

import numpy as np
import pytest

from vdcperm.console.entry_point import console_entry_point
from vdcperm.permutations.omega import faure_omega
from vdcperm.types.permutation import Permutation
from vdcperm.utils import config
from vdcperm.utils.logging import init_logging

init_logging("TRACE")


def clean_ansi_sequence(text: str) -> str:
    """Strip terminal colour codes from captured output"""

    return re.sub(r"\x1b\[[0-9;]*m", "", text)


@pytest.fixture()
def identity_2():
    return Permutation.identity(2)


@pytest.fixture()
def identity_3():
    return Permutation.identity(3)


@pytest.fixture()
def omega_9():
    return faure_omega(9)


@pytest.fixture()
def rng():
    return np.random.default_rng(20240101)


@pytest.fixture()
def vdcperm_home(tmpdir, monkeypatch):
    """Keep the config folder of the console tests inside tmpdir"""

    home = Path(tmpdir, ".vdcperm")
    home.mkdir(exist_ok=True)
    monkeypatch.setattr(config, "get_vdcperm_path", lambda: home)
    monkeypatch.chdir(tmpdir)

    return home


@pytest.fixture()
def cli(monkeypatch, vdcperm_home):
    """Run the console entry point with the given arguments"""

    def run(*args):
        # `dummy` stands in for the script path in sys.argv
        monkeypatch.setattr(sys, "argv", ["dummy", *args])
        console_entry_point()

    return run
