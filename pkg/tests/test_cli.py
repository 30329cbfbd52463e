import json
import math

import pytest

from quatcalc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_diff_examples(capsys):
    code, out, _ = run(capsys, "diff", "--function", "pow:2", "--point", "[1,1,0,0]", "--delta", "[0,0,1,0]")
    assert code == 0
    data = json.loads(out)
    assert data["value"] == [0.0, 0.0, 2.0, 0.0]
    assert data["parallel"] == [0.0, 0.0, 0.0, 0.0] and data["perp"] == [0.0, 0.0, 1.0, 0.0]
    _, out, _ = run(capsys, "diff", "--function", "exp", "--point", "[0,1.5707963,0,0]", "--delta", "[0,0,1,0]")
    assert abs(json.loads(out)["value"][2] - 2 / math.pi) <= 1e-7
    _, out, _ = run(capsys, "diff", "--function", "pow:2", "--point", "[3,0,0,0]", "--delta", "[0,0,1,0]")
    assert json.loads(out)["value"] == [0.0, 0.0, 6.0, 0.0]
    _, out, _ = run(capsys, "diff", "--function", "pow:2", "--point", "[1,1,0,0]", "--delta", "[0,0,1,0]",
                    "--order", "2")
    assert json.loads(out)["value"] == pytest.approx([-1, 0, 0, 0], abs=1e-12)


@pytest.mark.parametrize("argv", [
    ("diff", "--function", "tan", "--point", "[1,1,0,0]", "--delta", "[0,0,1,0]"),
    ("diff", "--function", "exp", "--point", "[1,1,0]", "--delta", "[0,0,1,0]"),
    ("diff", "--function", "exp", "--point", "nope", "--delta", "[0,0,1,0]"),
    ("diff", "--function", "exp", "--point", "[1,1,0,0]", "--delta", "[0,0,1,0]", "--order", "3"),
    ("diff",),
    ("verify", "--suite", "nosuch"),
    ("integrate", "--power", "2", "--path", "/nonexistent.json"),
])
def test_usage_errors_exit_2(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 2 and out == ""


def test_domain_errors_exit_1(capsys):
    code, out, err = run(capsys, "diff", "--function", "log", "--point", "[-1,0,0,0]", "--delta", "[1,0,0,0]")
    assert code == 1 and out == "" and "DomainError" in err
    code, _, err = run(capsys, "diff", "--function", "exp", "--point", "[2,0,0,0]", "--delta", "[0,1,0,0]",
                       "--order", "2")
    assert code == 1 and "PureRealInput" in err


def write_path(tmp_path, waypoints, n):
    p = tmp_path / "path.json"
    p.write_text(json.dumps({"waypoints": waypoints, "segments_per_leg": n}))
    return str(p)


def test_integrate_examples(capsys, tmp_path):
    path = write_path(tmp_path, [[1, 0, 0, 0], [0, 0, 1, 0]], 10_000)
    code, out, _ = run(capsys, "integrate", "--function", "pow:3", "--mode", "dcal", "--path", path)
    data = json.loads(out)
    assert code == 0 and data["endpoint_difference"] == [-1.0, 0.0, -1.0, 0.0] and data["abs_error"] <= 1e-3
    path = write_path(tmp_path, [[0.3, 1, 0, 0], [1, 2, -1, 0], [0, 0, 0, 4]], 37)
    _, out, _ = run(capsys, "integrate", "--power", "0", "--mode", "symmetric", "--path", path)
    assert json.loads(out)["abs_error"] <= 1e-14
    path = write_path(tmp_path, [[0, 1, 0, 0], [1, 1, 0, 0], [1, 2, 0, 0], [0, 1, 0, 0]], 10_000)
    _, out, _ = run(capsys, "integrate", "--function", "exp", "--path", path)
    data = json.loads(out)
    assert data["endpoint_difference"] == [0.0, 0.0, 0.0, 0.0]
    assert math.hypot(*data["value"]) <= 1e-3


def test_integrate_bad_inputs(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "integrate", "--power", "1", "--path", str(bad))[0] == 2
    bad.write_text(json.dumps({"waypoints": [[1, 0, 0, 0]], "segments_per_leg": 3}))
    assert run(capsys, "integrate", "--power", "1", "--path", str(bad))[0] == 2
    path = write_path(tmp_path, [[1, 0, 0, 0], [0, 1, 0, 0]], 10)
    assert run(capsys, "integrate", "--function", "exp", "--mode", "symmetric", "--path", path)[0] == 2
    path = write_path(tmp_path, [[1, 0, 0, 0], [-1, 0, 0, 0]], 10)
    assert run(capsys, "integrate", "--function", "log", "--path", path)[0] == 1


def test_verify_writes_report(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "verify", "--suite", "fueter", "--seed", "7", "--cases", "10",
                       "--json", str(target))
    assert code == 0
    assert target.read_text() == out
    data = json.loads(out)
    assert data["suite"] == "fueter" and data["summary"]["fail"] == 0
    box = [c for c in data["cases"] if c["name"].startswith("box-exp")]
    assert box and abs(box[0]["measured"]["expected"] + 4 / math.pi) < 1e-15


def test_verify_output_is_deterministic(capsys):
    outs = [run(capsys, "verify", "--suite", "commutator", "--seed", "3", "--cases", "30")[1] for _ in range(2)]
    assert outs[0] == outs[1] and outs[0].count("\n") == 1
