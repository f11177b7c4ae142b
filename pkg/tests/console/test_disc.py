def test_disc_identity(cli, capsys):
    """
    Exact discrepancies of the binary van der Corput sequence
    """

    cli("disc", "--perm", "0,1", "--N", "1..3")

    out, _ = capsys.readouterr()
    assert "N,Dplus,Dminus,D,Dstar\n" in out
    assert "3,3/2,0,3/2,3/2\n" in out


def test_disc_normalized(cli, capsys):
    """
    --normalized divides by N
    """

    cli("disc", "--perm", "0,1", "--N", "3", "--normalized")

    out, _ = capsys.readouterr()
    assert "3,1/2,0,1/2,1/2\n" in out


def test_disc_oracles(cli, capsys):
    """
    --oracles adds the L² and diaphony columns
    """

    cli("disc", "--perm", "0,1", "--N", "1", "--oracles")

    out, _ = capsys.readouterr()
    assert "N,Dplus,Dminus,D,Dstar,L2sq,diaphony_sq\n" in out
    assert "1,1,0,1,1,1/3,1/6\n" in out


def test_disc_swap_alias(cli, capsys):
    """
    --swap selects a schedule like --schedule
    """

    cli("disc", "--perm", "0,1,2", "--swap", "faure-a", "--N", "2", "--digits", "20")

    out, _ = capsys.readouterr()
    row = next(line for line in out.splitlines() if line.startswith("2,"))
    assert "[" in row


def test_disc_oracles_not_normalized(cli, capsys):
    """
    The oracle columns stay unscaled under --normalized
    """

    cli("disc", "--perm", "0,1", "--N", "2", "--oracles", "--normalized")

    out, _ = capsys.readouterr()
    assert "2,1/2,0,1/2,1/2,1/3,1/6\n" in out
