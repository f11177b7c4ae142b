import json

from vdcperm.utils.config import DEFAULT_CONFIG
from vdcperm.utils.console import generate_config, generate_initial_config, list_records


def test_generate_initial_config(vdcperm_home):
    """
    Tests if the default config is written once.
    """

    config_path = vdcperm_home / "config.json"

    generate_initial_config()
    assert json.loads(config_path.read_text(encoding="utf-8")) == DEFAULT_CONFIG

    config_path.write_text("{}", encoding="utf-8")
    generate_initial_config()
    assert config_path.read_text(encoding="utf-8") == "{}"


def test_generate_config(vdcperm_home, monkeypatch, capsys):
    """
    Tests the overwrite prompt.
    """

    config_path = vdcperm_home / "config.json"

    generate_config()
    assert "Config file generated" in capsys.readouterr().out

    config_path.write_text("{}", encoding="utf-8")
    monkeypatch.setattr("builtins.input", lambda _: "n")
    generate_config()
    assert "Exiting..." in capsys.readouterr().out
    assert config_path.read_text(encoding="utf-8") == "{}"

    monkeypatch.setattr("builtins.input", lambda _: "y")
    generate_config()
    assert json.loads(config_path.read_text(encoding="utf-8")) == DEFAULT_CONFIG


def test_list_records(capsys):
    """
    Tests the record listing.
    """

    list_records()
    out, _ = capsys.readouterr()

    assert "faure12\tbase 12\ts" in out
    assert "faure12_swap\tbase 12\ts_star\t" in out
