import csv
import io
import json
import os
import subprocess
import sys

import pytest

from harmonia.cli import fmt_float, main, parse_grid, to_json, UsageError


def run_cli(*args, env=None):
    full_env = {**os.environ, **(env or {})}
    return subprocess.run([sys.executable, "-m", "harmonia.cli", *args],
                          capture_output=True, text=True, env=full_env)


def compute(*args):
    buf = io.StringIO()
    code = main(["compute", *args], out=buf)
    return code, json.loads(buf.getvalue()) if code == 0 else None


def test_compute_examples():
    code, obj = compute("--kind", "h", "--k", "2", "--n", "2")
    assert code == 0 and abs(obj["value"] - 1.25) <= 1e-12
    assert obj["schema"] == "harmonia/1" and obj["params"] == {"k": 2, "n": 2}
    assert obj["discrepancy"] <= 1e-12

    code, obj = compute("--kind", "euler-sum", "--k", "0", "--r", "1", "--parity", "odd")
    assert code == 0 and abs(obj["value"] - 2.4041138063191885) <= 1e-8

    code, obj = compute("--kind", "zeta-odd", "--k", "1", "--rep", "tan")
    assert code == 0 and abs(obj["value"] - 1.2020569031595942) <= 1e-9


def test_compute_trig_sums_and_limits():
    code, obj = compute("--kind", "c", "--m", "1", "--k", "2", "--n", "10")
    assert code == 0 and abs(obj["value"] - 1.5497677311665408) <= 1e-12
    code, obj = compute("--kind", "s", "--m", "4", "--k", "1", "--n", "inf")
    assert code == 0 and abs(obj["value"] - 0.7853981633974483) <= 1e-8
    assert obj["oracle"] is None and obj["discrepancy"] is None


def test_usage_errors_exit_2(capsys):
    assert main(["compute", "--kind", "h", "--k", "2"]) == 2
    assert main(["compute", "--kind", "h", "--k", "x", "--n", "2"]) == 2
    assert main(["compute", "--kind", "h", "--k", "-1", "--n", "2"]) == 2
    assert main(["compute", "--kind", "s", "--m", "1", "--k", "1", "--n", "inf"]) == 2
    assert "error" in capsys.readouterr().err
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--kind", "nope"])
    assert exc.value.code == 2


def test_subprocess_exit_codes():
    assert run_cli("compute", "--kind", "h", "--k", "1", "--n", "3").returncode == 0
    assert run_cli("compute", "--kind", "h").returncode == 2
    assert run_cli("bogus").returncode == 2


def test_max_panels_override_exits_1():
    # a single panel per pass cannot reach the default tolerance on an oscillatory integrand
    r = run_cli("compute", "--kind", "h", "--k", "2", "--n", "300",
                env={"HARMONIA_MAX_PANELS": "1"})
    assert r.returncode == 1 and "numerical failure" in r.stderr
    r = run_cli("compute", "--kind", "h", "--k", "2", "--n", "3",
                env={"HARMONIA_MAX_PANELS": "zero"})
    assert r.returncode == 2


def test_verify_exact_suite_passes():
    buf = io.StringIO()
    assert main(["verify", "--suite", "exact"], out=buf) == 0
    lines = buf.getvalue().splitlines()
    assert lines[0].split()[:5] == ["id", "expected", "got", "tol", "pass"]
    assert lines[-1].endswith("0 failed")


def test_verify_json_is_deterministic():
    outs = []
    for _ in range(2):
        buf = io.StringIO()
        assert main(["verify", "--suite", "zeta", "--format", "json"], out=buf) == 0
        outs.append(buf.getvalue())
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["failed"] == 0


def test_corrupted_tolerance_fails_limits():
    buf = io.StringIO()
    assert main(["verify", "--suite", "limits", "--tol-scale", "1e-6"], out=buf) == 1
    assert any(line.endswith("FAIL") for line in buf.getvalue().splitlines())
    assert main(["verify", "--tol-scale", "0"], out=io.StringIO()) == 2


def test_table_csv_row_order():
    buf = io.StringIO()
    assert main(["table", "--kind", "h", "--grid", "n=1..10", "--grid", "k=4,1,3,2"],
                out=buf) == 0
    rows = list(csv.reader(io.StringIO(buf.getvalue())))
    assert rows[0] == ["k", "n", "value", "err_estimate", "oracle", "discrepancy"]
    assert len(rows) == 41
    keys = [(int(r[0]), int(r[1])) for r in rows[1:]]
    assert keys == sorted(keys)
    assert all(float(r[5]) <= 1e-8 for r in rows[1:])


def test_table_to_file_and_unwritable_path(tmp_path):
    target = tmp_path / "t.json"
    args = ["table", "--kind", "zeta-odd", "--grid", "k=1..3", "--grid", "rep=cot,tan",
            "--format", "json", "--out"]
    assert main(args + [str(target)]) == 0
    first = target.read_bytes()
    assert main(args + [str(target)]) == 0
    assert target.read_bytes() == first
    assert len(json.loads(first)["rows"]) == 6
    assert main(args + [str(tmp_path / "missing" / "t.json")]) == 2


def test_grid_parsing():
    assert parse_grid(["k=3,1..2", "m=6.5,2"]) == {"k": [1, 2, 3], "m": [2, 6.5]}
    with pytest.raises(UsageError):
        parse_grid(["k=3..1"])
    with pytest.raises(UsageError):
        parse_grid(["k"])


def test_serialization():
    assert fmt_float(1.25) == "1.2500000000000000e+00"
    assert to_json({"a": [1, 0.5, None, True], "b": float("inf")}) == \
        '{"a": [1, 5.0000000000000000e-01, null, true], "b": "inf"}'
