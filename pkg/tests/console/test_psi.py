def test_psi_summary(cli, capsys):
    """
    Summary of ψ for the binary identity
    """

    cli("psi", "--perm", "0,1")

    out, _ = capsys.readouterr()
    assert "permutation 0,1 (base 2)" in out
    assert "max 1/2 at x = 1/2" in out
    assert "slopes on [0, 1/b]: plus 1, minus 0, total 1" in out


def test_psi_csv(cli, capsys):
    """
    --csv prints one row of integer columns per piece
    """

    cli("psi", "--perm", "0,1", "--csv")

    out, _ = capsys.readouterr()
    assert (
        "x_num,x_den,slope_num,slope_den,intercept_num,intercept_den\n"
        "0,1,1,1,0,1\n"
        "1,2,-1,1,1,1\n"
    ) in out


def test_psi_fn(cli, capsys):
    """
    --fn adds the maximum of F_n
    """

    cli("psi", "--perm", "0,1", "--fn", "2")

    out, _ = capsys.readouterr()
    assert "max F_2 = 3/4 at x = 1/4 (digits 1;0 in base 2)" in out
    assert "max F_2 / 2 = 3/8" in out


def test_psi_svg(cli, tmpdir):
    """
    --svg writes a plot
    """

    target = tmpdir / "psi.svg"
    cli("psi", "--omega", "9", "--part", "plus", "--svg", str(target))

    assert "<polyline" in target.read_text(encoding="utf-8")
