import csv
import io
import json
import subprocess
import sys

import pytest

from simplesc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_info(capsys):
    code, out, _ = run(capsys, "info", "A", "2")
    data = json.loads(out)
    assert code == 0 and data["coxeter_number"] == 3 and data["omega_order"] == 3 and data["dim_g"] == 8
    code, out, _ = run(capsys, "info", "E", "8")
    data = json.loads(out)
    assert data["coxeter_number"] == 30 and data["omega_order"] == 1


def test_info_invalid(capsys):
    code, _, err = run(capsys, "info", "Z", "9")
    assert code == 2 and "unsupported" in err


@pytest.mark.parametrize("argv,rows", [
    (("classify", "A", "1", "3", "1"), 4),
    (("classify", "A", "2", "2", "2", "--format", "json"), 9),
    (("classify", "G", "2", "5", "1"), 4),
])
def test_classify_rows(capsys, argv, rows):
    code, out, _ = run(capsys, *argv)
    data = json.loads(out)
    assert code == 0 and len(data) == rows
    assert set(data[0]) == {"delta_class", "psi", "lambda", "formal_degree_numerator",
                            "formal_degree_denominator"}


def test_classify_formats(capsys):
    _, out, _ = run(capsys, "classify", "A", "1", "3", "1", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 4 and rows[0]["formal_degree_numerator"] == "4"
    _, out, _ = run(capsys, "classify", "A", "1", "3", "1", "--format", "md")
    assert out.count("\n") == 6 and out.startswith("| delta_class")


def test_classify_errors(capsys):
    assert run(capsys, "classify", "A", "1", "4", "1")[0] == 2
    assert run(capsys, "classify", "A", "1", "3", "0")[0] == 2


def test_lparams(capsys):
    _, out, _ = run(capsys, "lparams", "A", "1")
    data = json.loads(out)
    assert (data["alpha"], data["swan"], data["packet_size"]) == (4, 1, 1)
    assert data["q"] == "symbolic" and data["l_function"] == "1"
    assert data["formal_degree"]["str"] == "q + 1" and data["conditional_on"] == ["A1", "A2"]
    _, out, _ = run(capsys, "lparams", "F", "4")
    assert json.loads(out)["alpha"] == 56
    _, out, _ = run(capsys, "lparams", "D", "4")
    assert json.loads(out)["center_order"] == 4


@pytest.mark.parametrize("suite", ["signs", "kostant", "fdc"])
def test_verify_suites(capsys, suite):
    code, out, _ = run(capsys, "verify", suite)
    data = json.loads(out)
    assert code == 0 and data["passed"] and data["checks"]
    assert all(c["statement"] for c in data["checks"])


def test_verify_orbits_qmax(capsys):
    code, out, _ = run(capsys, "verify", "orbits", "--q-max", "5")
    data = json.loads(out)
    assert code == 0 and data["passed"]


def test_verify_budget(capsys):
    code, out, _ = run(capsys, "verify", "orbits", "--budget", "1000")
    data = json.loads(out)
    assert code == 3 and not data["passed"] and data["error"]


def test_seed_sweep_to_file(tmp_path, capsys):
    path = tmp_path / "sweep.json"
    code, out, _ = run(capsys, "verify", "--seed-sweep", "--out", str(path))
    data = json.loads(path.read_text())
    assert code == 0 and out == "" and data["suite"] == "all" and data["passed"]
    assert {c["suite"] for c in data["checks"]} == {"signs", "orbits", "kostant", "fdc"}


def test_deterministic_output():
    cmd = [sys.executable, "-m", "simplesc.cli", "classify", "B", "2", "2", "2", "--format", "csv"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and a


def test_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["verify", "nonsense"])
    assert info.value.code == 2
