import csv
import io
import json
import subprocess
import sys

import pytest

from catalan_halves import gallery
from catalan_halves.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_show_catalan_display(capsys):
    code, out, _ = run(capsys, "show", "--g", "1", "--f", "x*c", "--rows", "7", "--format", "csv")
    assert code == 0
    rows = [[int(v) for v in r] for r in csv.reader(io.StringIO(out))]
    golden = gallery.golden_corpus()["catalan_1_xc"]
    assert rows == [[int(v) for v in r[: n + 1]] for n, r in enumerate(golden.rows)]


def test_formats_agree(capsys):
    args = ["show", "--name", "ex3_main", "--rows", "6"]
    _, table, _ = run(capsys, *args)
    _, as_csv, _ = run(capsys, *args, "--format", "csv")
    _, as_json, _ = run(capsys, *args, "--format", "json")
    table_rows = [line.split() for line in table.splitlines()[2:]]
    csv_rows = list(csv.reader(io.StringIO(as_csv)))
    obj = json.loads(as_json)
    assert table_rows == csv_rows == obj["rows"]
    assert obj["g"][:3] == ["1", "1", "-1"] and obj["f"][:2] == ["0", "-1"]


def test_vhalf_detects_form(capsys):
    code, out, _ = run(capsys, "vhalf", "--g", "(1+2*x)/(1+x)", "--f", "-x/(1+x)", "--rows", "6")
    assert code == 0
    assert "closed form: (1, -x*c)" in out


def test_hhalf_gallery_form(capsys):
    code, out, _ = run(capsys, "hhalf", "--name", "sec5_main", "--rows", "6", "--format", "json")
    obj = json.loads(out)
    assert obj["closed form"] == "(c^2, x*c^4)"
    golden = gallery.golden_corpus()["sec5_main_horizontal"].rows
    assert obj["rows"] == [[str(v) for v in r[: n + 1]] for n, r in enumerate(golden[:6])]


def test_vhalf_catalan_matrix(capsys):
    _, out, _ = run(capsys, "vhalf", "--name", "sec5_main", "--rows", "5")
    assert "closed form: catalan_c2_xc2" in out


def test_inverse(capsys):
    code, out, _ = run(capsys, "inverse", "--name", "ex3_inv", "--rows", "8", "--format", "json")
    want = gallery.named("ex3_main").triangle(8).dense()
    assert json.loads(out)["rows"] == [[str(v) for v in r[: n + 1]] for n, r in enumerate(want)]


def test_multiply(capsys):
    code, out, _ = run(capsys, "multiply", "--g1", "1", "--f1", "-x*c",
                       "--g2", "1", "--f2", "-x/(1+x)", "--rows", "5", "--format", "json")
    assert code == 0
    assert json.loads(out)["f"] == ["0", "1", "2", "5", "14"]


def test_hankel(capsys):
    code, out, _ = run(capsys, "hankel", "--seq", "1,1,2,5,14,42,132,429,1430", "--n", "4")
    assert code == 0 and out.strip() == "1, 1, 1, 1, 1"


def test_hankel_negative_terms(capsys):
    code, out, _ = run(capsys, "hankel", "--seq", "-1,2,-3", "--format", "csv")
    assert out.strip() == "-1,-1"


def test_square_options(capsys):
    _, out, _ = run(capsys, "square", "--name", "ex3_main", "--size", "8", "--mod", "2", "--diag")
    assert out.strip() == "1, 2, 2, 4, 2, 4, 4, 8"
    _, out, _ = run(capsys, "square", "--name", "ex3_main", "--size", "4", "--conjugate",
                    "--format", "csv")
    assert out.splitlines() == ["1,0,0,0", "2,1,0,0", "2,2,1,0", "2,2,2,1"]


def test_oeis(capsys):
    code, out, _ = run(capsys, "oeis", "--seq", "1,2,2,4,2,4,4,8")
    assert code == 0 and "A001316" in out


def test_oeis_environment(capsys, tmp_path, monkeypatch):
    p = tmp_path / "s.txt"
    p.write_text("A000042 ,1,2,3,4,5,6,\n")
    monkeypatch.setenv("RIORDAN_OEIS_PATH", str(p))
    _, out, _ = run(capsys, "oeis", "--seq", "1,2,3,4,5", "--format", "json")
    assert json.loads(out) == [{"anumber": "A000042", "shift": 0}]


def test_rational_entries_print_as_fractions(capsys):
    code, out, _ = run(capsys, "show", "--g", "1/(2-x)", "--f", "x", "--rows", "3")
    assert code == 0 and "1/4" in out
    code, _, err = run(capsys, "show", "--g", "1/(2-x)", "--f", "x", "--rows", "3",
                       "--require-integer")
    assert code == 3 and "not an integer" in err


def test_check_report(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out, _ = run(capsys, "check", "--rows", "8", "--r-samples", "0", "--report", str(path))
    assert code == 0 and "all checks passed" in out
    data = json.loads(path.read_text())
    assert all(c["status"] == "pass" for c in data["checks"])


def test_explore(capsys):
    _, out, _ = run(capsys, "explore", "--n", "0")
    assert out.strip() == "1"


@pytest.mark.parametrize("argv, code", [
    (["show", "--g", "1+", "--f", "x"], 2),                   # syntax error
    (["show", "--g", "1-r*x", "--f", "x"], 2),                # r without --r
    (["show", "--name", "nope"], 2),                          # unknown gallery name
    (["show", "--g", "1"], 2),                                # missing --f
    (["frobnicate"], 2),                                      # unknown subcommand
    (["show", "--g", "x", "--f", "x"], 3),                    # g(0) = 0
    (["show", "--g", "1", "--f", "x^2"], 3),                  # f'(0) = 0
    (["hankel", "--seq", "1,2,3", "--n", "3"], 3),            # prefix too short
    (["square", "--g", "1/(2-x)", "--f", "x", "--size", "3", "--mod", "2"], 3),
    (["oeis", "--seq", "0,0,0,0,0"], 3),                      # all-zero query
    (["oeis", "--seq", "1,2,3,4,5", "--catalog", "/no/such/file"], 4),
    (["check", "--rows", "8", "--report", "/no/such/dir/r.txt"], 4),
])
def test_exit_codes(capsys, argv, code):
    got, _, err = run(capsys, *argv)
    assert got == code
    assert err


def test_parameter_accepted(capsys):
    code, out, _ = run(capsys, "show", "--g", "1-r*x", "--f", "x/(1-x)", "--r", "-2",
                       "--rows", "3", "--format", "csv")
    assert code == 0 and out.splitlines()[1] == "2,1"


def test_dash_leading_expression(capsys):
    code, out, _ = run(capsys, "show", "--g", "1", "--f", "-x", "--rows", "3", "--format", "csv")
    assert code == 0 and out.splitlines() == ["1", "0,-1", "0,0,1"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "catalan_halves", "hankel", "--seq", "1,1,2,5,14"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "1, 1, 1"
