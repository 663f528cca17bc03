import csv
import io
import json
import subprocess
import sys

import pytest

from dtcol.cli import main
from dtcol.exactalg import parse


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def rows_of(out):
    return {r["gamma"]: r for r in csv.DictReader(io.StringIO(out))}


def test_dt_examples(capsys):
    _, out, _ = run(capsys, "dt", "--quiver", "K1", "--theta", "1,0", "--bound", "2", "--format", "csv")
    assert out.splitlines()[0] == "gamma,coefficient,omega_bar"
    assert rows_of(out)["1,1"]["omega_bar"] == "1"
    _, out, _ = run(capsys, "dt", "--quiver", "K1", "--theta", "0,1", "--bound", "2", "--format", "csv")
    assert rows_of(out)["1,1"]["omega_bar"] == "0"
    _, out, _ = run(capsys, "dt", "--quiver", "K1", "--theta", "0,1", "--bound", "1", "--format", "csv")
    assert {g: r["omega_bar"] for g, r in rows_of(out).items()} == {"0,1": "1", "1,0": "1"}


def test_rows_sorted_and_deterministic(capsys):
    argv = ("dt", "--quiver", "K2", "--theta", "2,-1", "--rho", "1,3", "--bound", "3", "--format", "csv")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    gammas = [tuple(map(int, g.split(","))) for g in rows_of(first)]
    assert gammas == sorted(gammas)


def test_dt_through_tree_formula(capsys):
    base = ("dt", "--quiver", "K2", "--theta", "1,0", "--bound", "3", "--format", "csv")
    _, direct, _ = run(capsys, *base)
    _, tree, _ = run(capsys, *base, "--t", "1/2")
    assert direct == tree


def test_attractor(capsys):
    _, out, _ = run(capsys, "attractor", "--quiver", "K2", "--bound", "4", "--format", "csv")
    rows = rows_of(out)
    for g, r in rows.items():
        if "0" not in g.split(","):
            assert r["coefficient"] == "0"
    assert parse(rows["1,0"]["coefficient"]) == parse("(-y)/(y^2 - 1)")


def test_wallcross_and_flowtree(capsys):
    _, out, _ = run(capsys, "wallcross", "--quiver", "K1", "--theta", "1,0", "--theta2", "0,1", "--bound", "2",
                    "--format", "csv")
    assert rows_of(out)["1,1"]["omega_bar"] == "0"
    _, out, _ = run(capsys, "flowtree", "--quiver", "K2", "--theta", "1,0", "--gamma", "2,1", "--format", "csv")
    assert rows_of(out)["2,1"]["omega_bar"] == "1"


def test_json_round_trip(capsys):
    _, out, _ = run(capsys, "dt", "--quiver", "K2", "--theta", "1,0", "--bound", "3", "--format", "json")
    for row in json.loads(out):
        for key in ("coefficient", "omega_bar"):
            from dtcol.exactalg import render
            assert render(parse(row[key])) == row[key]


def test_quiver_file(tmp_path, capsys):
    path = tmp_path / "k2.txt"
    path.write_text("vertices 2\narrow 1 2\narrow 1 2\n")
    _, from_file, _ = run(capsys, "attractor", "--quiver", str(path), "--bound", "3")
    _, builtin, _ = run(capsys, "attractor", "--quiver", "K2", "--bound", "3")
    assert from_file == builtin


def test_trees(capsys):
    _, out, _ = run(capsys, "trees", "--count", "4", "--min-children", "2")
    assert out.splitlines()[-1] == "# 11 trees"
    _, out, _ = run(capsys, "trees", "--count", "4", "--format", "json")
    assert json.loads(out)["count"] == 11


@pytest.mark.parametrize("argv", [
    ("dt", "--quiver", "K1", "--theta", "1", "--bound", "2"),
    ("dt", "--quiver", "K1", "--theta", "1,x", "--bound", "2"),
    ("dt", "--quiver", "K1", "--theta", "1,0", "--rho", "1,0", "--bound", "2"),
    ("dt", "--quiver", "/nonexistent", "--theta", "1,0", "--bound", "2"),
    ("flowtree", "--quiver", "K1", "--theta", "1,0", "--gamma", "0,0"),
])
def test_errors(capsys, argv):
    status, out, err = run(capsys, *argv)
    assert status == 2 and not out and err.startswith("dtcol: error:")


def test_selftest_quick_subprocess():
    proc = subprocess.run([sys.executable, "-m", "dtcol", "selftest", "--quick"], capture_output=True, text=True)
    assert proc.returncode == 0, proc.stdout + proc.stderr
    assert proc.stdout.count("PASS") == 12
    assert proc.stdout.strip().endswith("all 12 criteria passed")
