import csv
import io
import subprocess
import sys

import pytest

from holeyhex.cli import EXIT_CAP, EXIT_FAIL, EXIT_OK, EXIT_USAGE, run
from holeyhex.lattice import dumps
from holeyhex.regions import hexagon


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_count_hexagon():
    assert call("count", "--region", "hexagon", "--params", "2,2,2") == (EXIT_OK, "20\n")
    assert call("count", "--region", "hexagon", "--params", "2,2,2", "--method", "brute") == (EXIT_OK, "20\n")


def test_count_weighted_g():
    from holeyhex.formulas import g_formula
    code, text = call("count", "--region", "g", "--params", "2,1", "--weighted", "both")
    assert code == EXIT_OK and text.strip() == str(g_formula(2, 1, "both"))


def test_count_from_file(tmp_path):
    f = tmp_path / "h.txt"
    f.write_text(dumps(hexagon(1, 2, 2)))
    assert call("count", "--region", f"file:{f}") == (EXIT_OK, "6\n")


def test_formula_command():
    assert call("formula", "--name", "macmahon", "--params", "1,1,1") == (EXIT_OK, "2\n")
    assert call("formula", "--name", "macdonald", "--params", "3") == (EXIT_OK, "20\n")
    assert call("formula", "--name", "p1", "--params", "1,0,0,0") == (EXIT_OK, "1\n")


def test_cs_count_methods_agree():
    args = ["cs-count", "--region", "H", "--t", "3", "--y", "1", "--a", "0", "--x", "0"]
    values = {call(*args, "--method", m)[1] for m in ("filter", "orbit")}
    code, text = call(*args, "--method", "formula", "--errata")
    assert code == EXIT_OK
    assert values == {text}


def test_cs_count_formula_disagreement_exits_1():
    # the uncorrected power of two is off by 2^a once a > 0
    args = ["cs-count", "--region", "H", "--t", "3", "--y", "1", "--a", "1", "--x", "0", "--method", "formula"]
    assert call(*args)[0] == EXIT_FAIL
    assert call(*args, "--errata")[0] == EXIT_OK


@pytest.mark.parametrize("argv", [
    ["count", "--region", "nope", "--params", "1"],
    ["count", "--region", "hexagon", "--params", "1,2"],
    ["count", "--region", "hexagon", "--params", "a,b,c"],
    ["count", "--region", "hexagon"],
    ["formula", "--name", "zzz", "--params", "1"],
    ["cs-count", "--region", "H", "--t", "5", "--y", "1", "--a", "1", "--x", "1", "--method", "formula"],
    ["cs-count", "--region", "H", "--t", "1", "--y", "1", "--a", "2", "--x", "0"],
    ["sweep", "--theorem", "T42", "--ranges", "q=1:2"],
    ["frobnicate"],
    [],
])
def test_usage_errors(argv):
    assert call(*argv)[0] == EXIT_USAGE


def test_cap_exit():
    argv = ["render", "--region", "hexagon", "--params", "3,3,3", "--out", "/dev/null", "--tiling", "first",
            "--cap", "10"]
    assert call(*argv)[0] == EXIT_CAP


def test_sweep_csv():
    code, text = call("sweep", "--theorem", "T42", "--ranges", "x=0:1", "y=1", "z=1", "a=0,1", "--format", "csv")
    assert code == EXIT_OK
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["check", "x", "y", "z", "a", "formula", "count", "status"]
    assert len(rows) == 9 and all(r[-1] == "pass" for r in rows[1:])
    assert sum(r[0] == "T42:oracle" for r in rows) == 4


def test_sweep_failure_exit():
    code, text = call("sweep", "--theorem", "L41", "--ranges", "n=1", "x=0", "variant=both")
    assert code == EXIT_FAIL and "FAIL" in text


def test_verify_output_is_byte_stable():
    argv = ["verify", "--suite", "theorems", "--theorem", "T42", "--grid", "x=0:1", "y=0:1", "z=1", "a=0",
            "--no-timing"]
    a, b = call(*argv), call(*argv)
    assert a == b and a[0] == EXIT_OK
    assert a[1].splitlines()[-1].startswith("# summary")


def test_verify_kuo_suite():
    code, text = call("verify", "--suite", "kuo", "--samples", "2", "--no-timing")
    assert code == EXIT_OK and "kuo:R-band" in text and "kuo:E-random" in text


def test_no_color(monkeypatch):
    class Tty(io.StringIO):
        def isatty(self):
            return True

    argv = ["verify", "--suite", "recurrences", "--family", "R", "--no-timing"]
    out = Tty()
    run(argv, out)
    assert "\033[" in out.getvalue()
    monkeypatch.setenv("NO_COLOR", "1")
    out = Tty()
    run(argv, out)
    assert "\033[" not in out.getvalue()


def test_render(tmp_path):
    f = tmp_path / "g.svg"
    code, text = call("render", "--region", "g", "--params", "2,1", "--weighted", "both", "--out", str(f),
                      "--tiling", "index", "--index", "1")
    assert code == EXIT_OK and f.read_text().startswith("<svg")


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "holeyhex.cli", "formula", "--name", "macmahon",
                           "--params", "2,2,2"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "20\n"
