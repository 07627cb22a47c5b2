import json
import subprocess
import sys

import pytest

from qeuler.cli import main
from qeuler.qeuler_core import qeuler_number


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table_qnumbers(capsys):
    code, out, _ = run(capsys, "table", "--family", "qnumbers", "--n-max", "2")
    assert code == 0
    data = json.loads(out)
    assert data[0] == {"num": ["1"], "den": ["1"]}
    assert data == [qeuler_number(n).to_json() for n in range(3)]
    assert data[1] == {"num": ["0", "-1"], "den": ["1", "0", "1"]}


def test_table_degenerate_zero(capsys):
    code, out, _ = run(capsys, "table", "--family", "degenerate", "--n-max", "0")
    assert code == 0
    assert json.loads(out) == [{"terms": [{"dl": 0, "dx": 0, "c": {"num": ["1"], "den": ["1"]}}]}]


def test_order_one_is_qpoly(capsys):
    _, a, _ = run(capsys, "table", "--family", "order", "--r", "1", "--n-max", "5")
    _, b, _ = run(capsys, "table", "--family", "qpoly", "--n-max", "5")
    assert a == b


@pytest.mark.parametrize("fmt", ["csv", "latex", "text"])
def test_table_formats(capsys, fmt):
    code, out, _ = run(capsys, "table", "--family", "degenerate", "--n-max", "2", "--output", fmt)
    assert code == 0 and out.strip()


@pytest.mark.parametrize("argv", [
    ["verify", "--identity", "thm6", "--n-max", "10"],
    ["verify", "--identity", "thm2", "--n-max", "12"],
])
def test_verify_exit_zero(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert all(r["pass"] for r in json.loads(out))


def test_verify_literal_thm4(capsys):
    code, out, _ = run(capsys, "verify", "--identity", "thm4", "--literal", "--n-max", "2",
                       "--output", "text")
    assert code == 0
    assert "literal form non-summable at n=0; corrected form verified" in out
    assert "FAIL" not in out


def test_series(capsys):
    code, out, _ = run(capsys, "series", "--n", "3", "--x", "1", "--lambda", "1/2")
    assert code == 0 and json.loads(out)["pass"] is True


def test_padic_examples(capsys):
    code, out, _ = run(capsys, "padic", "--p", "3", "--q0", "4", "--n", "1", "--x", "0",
                       "--N-max", "6")
    assert code == 0
    vals = [r["valuation"] for r in json.loads(out)["rows"]]
    assert vals == sorted(vals)
    code, out, _ = run(capsys, "padic", "--p", "3", "--n", "0", "--N-max", "6")
    data = json.loads(out)
    assert code == 0 and all(r["valuation"] == data["M"] for r in data["rows"])


@pytest.mark.parametrize("check", ["recurrence", "shift"])
def test_padic_checks(capsys, check):
    code, _, _ = run(capsys, "padic", "--n", "2", "--x", "1", "--lambda", "1",
                     "--kind", "degenerate", "--check", check, "--N-max", "4")
    assert code == 0


def test_usage_errors(capsys):
    for argv in (["padic", "--p", "4", "--n", "1"],
                 ["table", "--family", "nope", "--n-max", "1"],
                 ["table", "--family", "qpoly", "--n-max", "-1"],
                 ["padic", "--n", "1", "--q0", "2"]):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == 2
    capsys.readouterr()


def test_budget_exit_one(capsys, monkeypatch):
    monkeypatch.setenv("QEULER_BUDGET", "100")
    code, _, err = run(capsys, "padic", "--n", "1", "--N-max", "6")
    assert code == 1 and "budget" in err.lower()


DETERMINISM = [
    ["table", "--family", "degenerate-order", "--r", "2", "--n-max", "3"],
    ["verify", "--identity", "thm5", "--n-max", "4"],
    ["series", "--n", "2", "--r", "2"],
    ["padic", "--n", "2", "--kind", "degenerate", "--lambda", "1", "--N-max", "4"],
]


@pytest.mark.parametrize("fmt", ["json", "csv", "latex", "text"])
@pytest.mark.parametrize("argv", DETERMINISM, ids=lambda a: a[0])
def test_deterministic_files(tmp_path, argv, fmt):
    paths = [tmp_path / f"{i}.out" for i in range(2)]
    for path in paths:
        main(argv + ["--output", fmt, "--out", str(path)])
    assert paths[0].read_bytes() == paths[1].read_bytes()
    assert paths[0].read_bytes()


def test_module_entry_point():
    cmd = [sys.executable, "-m", "qeuler", "table", "--family", "euler", "--n-max", "4"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b
    assert json.loads(a) == ["1", "-1/2", "0", "1/4", "0"]
