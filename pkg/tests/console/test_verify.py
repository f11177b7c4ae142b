import json

import pytest

from vdcperm.utils.checks import Check, Outcome


@pytest.fixture()
def fake_checks(monkeypatch):
    """Replace the acceptance checks with instant ones"""

    checks = []
    monkeypatch.setattr(
        "vdcperm.console.verify.checks_for", lambda profile: list(checks)
    )

    return checks


def test_verify_pass(cli, capsys, fake_checks, tmpdir):
    """
    Passing checks print a table and write the report
    """

    fake_checks.append(Check("instant", lambda: Outcome("1/2", "1/2", True)))
    report = tmpdir / "report.json"

    cli("verify", "--report", str(report))

    out, _ = capsys.readouterr()
    assert "vdcperm verify" in out
    assert "All 1 checks passed" in out

    (row,) = json.loads(report.read_text(encoding="utf-8"))
    assert row["name"] == "instant"
    assert row["passed"] is True


def test_verify_failure(cli, capsys, fake_checks):
    """
    A failing check exits with code 4
    """

    fake_checks.append(Check("instant", lambda: Outcome("1/2", "1/3", False)))

    with pytest.raises(SystemExit) as exc_info:
        cli("verify", "--full")

    assert exc_info.value.code == 4
    assert "1 checks failed: instant" in capsys.readouterr().out


def test_verify_output_dir(cli, fake_checks, tmpdir):
    """
    --output-dir receives the report
    """

    fake_checks.append(Check("instant", lambda: Outcome("1", "1", True)))

    cli("verify", "--output-dir", str(tmpdir / "reports"))

    assert (tmpdir / "reports" / "vdcperm-verify.json").exists()


@pytest.mark.slow
def test_verify_quick_profile(cli, capsys):
    """
    The real quick profile passes end to end and exits cleanly
    """

    cli("verify", "--quick")

    out, _ = capsys.readouterr()
    assert "checks passed" in out
    assert "FAILED" not in out
