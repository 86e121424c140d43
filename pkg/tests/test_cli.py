import json
import math

import numpy as np
import pytest

from tqubit import cli, rep


@pytest.fixture
def unknot_file(tmp_path):
    path = tmp_path / "unknot.json"
    path.write_text(json.dumps({"crossings": [], "free_loops": 1, "boundary": []}))
    return str(path)


def run(argv):
    return cli.main(argv)


# -- number formatting ----------------------------------------------------------


def test_fmt12_examples():
    assert cli.fmt12(0.0) == "0"
    assert cli.fmt12(0.25) == "0.25"
    assert cli.fmt12(-math.sqrt(2)) == "-1.41421356237"
    assert cli.fmt12(math.pi) == "3.14159265359"
    assert cli.fmt12(9 / 28) == "0.321428571429"
    assert cli.fmt12(1.6e-16) == "1.6e-16"


def test_fmt_complex_examples():
    assert cli.fmt_complex(complex(-math.sqrt(2), 0)) == "-1.41421356237+0i"
    assert cli.fmt_complex(1 - 2j) == "1-2i"


# -- bracket ----------------------------------------------------------------------


def test_bracket_exact(unknot_file, capsys):
    assert run(["bracket", unknot_file, "--exact"]) == 0
    assert capsys.readouterr().out.strip() == "-1*A^-2 + -1*A^2"


def test_bracket_exact_is_the_default(unknot_file, capsys):
    assert run(["bracket", unknot_file]) == 0
    assert capsys.readouterr().out.strip() == "-1*A^-2 + -1*A^2"


def test_bracket_level_two(unknot_file, capsys):
    assert run(["bracket", unknot_file, "--k", "2"]) == 0
    assert capsys.readouterr().out.strip() == "-1.41421356237+0i"


def test_bracket_trefoil(tmp_path, capsys):
    path = tmp_path / "trefoil.json"
    path.write_text(
        json.dumps(
            {"crossings": [[1, 4, 2, 5], [3, 0, 4, 1], [5, 2, 0, 3]], "free_loops": 0}
        )
    )
    assert run(["bracket", str(path)]) == 0
    assert capsys.readouterr().out.strip() == "-1*A^-9 + 1*A^-1 + 1*A^3 + 1*A^7"


def test_bracket_parse_failures(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{nope")
    assert run(["bracket", str(bad)]) == 2
    missing = tmp_path / "missing.json"
    assert run(["bracket", str(missing)]) == 2
    wrong = tmp_path / "wrong.json"
    wrong.write_text(json.dumps({"crossings": [[0, 1, 2]], "free_loops": 0}))
    assert run(["bracket", str(wrong)]) == 2
    opent = tmp_path / "open.json"
    opent.write_text(json.dumps({"crossings": [], "boundary": [0, 0, 1, 1]}))
    assert run(["bracket", str(opent)]) == 2
    capsys.readouterr()


def test_bracket_rejects_huge_diagrams(tmp_path):
    word = []
    arcs = 0
    # 25-crossing twist closure written as explicit crossing tuples
    crossings = []
    prev_l, prev_r = 0, 1
    for i in range(25):
        nl, nr = 2 + 2 * i, 3 + 2 * i
        crossings.append([prev_l, prev_r, nr, nl])
        prev_l, prev_r = nl, nr
    # close up: join the last pair back to the first
    rename = {2 + 2 * 24: 0, 3 + 2 * 24: 1}
    crossings[-1] = [rename.get(x, x) for x in crossings[-1]]
    path = tmp_path / "big.json"
    path.write_text(json.dumps({"crossings": crossings, "free_loops": 0}))
    assert run(["bracket", str(path)]) == 3


# -- sweep ------------------------------------------------------------------------


def test_sweep_csv_contents(tmp_path, capsys):
    out = tmp_path / "grid.csv"
    assert run(["sweep", "--k", "2,inf", "--phi-steps", "4", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "k,phi,probability"
    assert len(lines) == 9
    assert lines[1] == "2,0,0.25"
    assert lines[5] == "inf,0,0.321428571429"
    for row in lines[1:]:
        k, phi, prob = row.split(",")
        assert 0.0 <= float(prob) <= 1.0


def test_sweep_is_byte_identical(tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    args = ["--k", "-1,2,5,inf", "--phi-steps", "60"]
    assert run(["sweep", *args, "--out", str(a)]) == 0
    assert run(["sweep", *args, "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_sweep_skips_degenerate_level(tmp_path, capsys):
    out = tmp_path / "grid.csv"
    assert run(["sweep", "--k", "1,2", "--phi-steps", "2", "--out", str(out)]) == 0
    err = capsys.readouterr().err
    assert "k=1" in err
    ks = {row.split(",")[0] for row in out.read_text().splitlines()[1:]}
    assert ks == {"2"}


def test_sweep_argument_errors(tmp_path, capsys):
    out = str(tmp_path / "x.csv")
    assert run(["sweep", "--k", "2,zebra", "--phi-steps", "4", "--out", out]) == 2
    assert run(["sweep", "--k", "2", "--phi-steps", "1", "--out", out]) == 2
    assert run(["sweep", "--k", "0", "--phi-steps", "4", "--out", out]) == 2
    capsys.readouterr()


def test_sweep_unwritable_path(capsys):
    rc = run(["sweep", "--k", "2", "--phi-steps", "2", "--out", "/no/such/dir/x.csv"])
    assert rc == 4
    capsys.readouterr()


# -- coeffs -----------------------------------------------------------------------


def test_coeffs_json_layout(capsys):
    assert run(["coeffs", "--alpha", "1", "--beta", "0", "--k", "3", "--format", "json"]) == 0
    table = json.loads(capsys.readouterr().out)
    assert len(table) == 16
    assert list(table)[0] == "a0000"
    assert list(table)[-1] == "a1111"
    assert table["a0000"] == "0.38196601125+0i"
    assert table["a0100"] == "0+0i"  # beta = 0 kills the odd rows


def test_coeffs_csv_layout(capsys):
    assert run(["coeffs", "--alpha", "0", "--beta", "1", "--k", "3", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "index,re,im"
    assert len(lines) == 17
    a0101 = dict(line.split(",", 1) for line in lines[1:])["a0101"]
    d = -2 * math.cos(math.pi / 5)
    a = np.exp(1j * math.pi / 10)
    want = -1 / (a**8 * d**3)
    re, im = (float(x) for x in a0101.split(","))
    assert math.isclose(re, want.real, abs_tol=1e-11)
    assert math.isclose(im, want.imag, abs_tol=1e-11)


def test_coeffs_degenerate_level(capsys):
    assert run(["coeffs", "--alpha", "1", "--beta", "0", "--k", "1"]) == 5
    assert run(["coeffs", "--alpha", "1", "--beta", "0", "--k", "0"]) == 2
    capsys.readouterr()


# -- recover ----------------------------------------------------------------------


def test_recover_at_special_points(capsys):
    assert run(["recover", "--alpha", "0.6", "--beta", "0.8", "--a", "1"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[-1] == "fidelity 1.000000000000"
    assert run(["recover", "--alpha", "1", "--beta", "0", "--a", "i"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "fidelity 1.000000000000"
    assert run(["recover", "--alpha", "0.5", "--beta", "-0.5", "--a", "-i"]) == 0
    capsys.readouterr()


def test_recover_warns_at_generic_points(capsys):
    assert run(["recover", "--alpha", "0.6", "--beta", "0.8", "--a", "0.3"]) == 0
    captured = capsys.readouterr()
    assert "warning" in captured.err
    assert "fidelity" in captured.out


def test_recover_rejects_complex_sources(capsys):
    assert run(["recover", "--alpha", "1+2j", "--beta", "0", "--a", "1"]) == 6
    assert run(["recover", "--alpha", "x", "--beta", "0", "--a", "1"]) == 2
    assert run(["recover", "--alpha", "1", "--beta", "0", "--a", "zebra"]) == 2
    capsys.readouterr()


# -- selftest ---------------------------------------------------------------------


def test_selftest_passes(capsys):
    assert run(["selftest"]) == 0
    out = capsys.readouterr().out
    assert "checks passed" in out
    assert "FAIL" not in out


def test_selftest_mutation_canary(monkeypatch, capsys):
    """Corrupting one R-matrix entry must trip the suite."""
    honest = rep.braid_r_matrix

    def corrupted(p, inverse=False):
        m = honest(p, inverse=inverse)
        m = m.copy()
        m[1, 1] += 0.01
        return m

    monkeypatch.setattr(rep, "braid_r_matrix", corrupted)
    assert run(["selftest"]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["--version"])
    assert exc.value.code == 0
    assert "tqubit" in capsys.readouterr().out
