import json
from importlib import resources

import jsonschema
import pytest

from reeslike import cli, presentation

SCHEMA = json.loads(resources.files("reeslike").joinpath("schema/report.schema.json").read_text())


def run_json(capsys, *argv):
    code = cli.main(list(argv) + ["--json"])
    out = capsys.readouterr().out
    report = json.loads(out)
    jsonschema.validate(report, SCHEMA)
    assert report["exit_code"] == code
    return report, code


def test_present(capsys):
    report, code = run_json(capsys, "present", "--ideal", "x1, x2")
    assert code == 0
    assert report["ring"] == "x1:1, x2:1 over QQ"
    assert report["result"]["syz_gens"] == ["-x2*y1 + x1*y2"]


def test_invariants_both_modes(capsys):
    report, code = run_json(capsys, "invariants", "--ideal", "x1^2, x1*x2, x2^2")
    assert code == 0 and report["result"]["agree"]
    assert report["result"]["computed"]["degree"] == 54


def test_jacobian_text_output(capsys):
    code = cli.main(["jacobian", "--ideal", "x1, x2"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.strip().endswith("status: ok (exit 0)")
    assert "y1" in out


def test_plain_jacobian_mode(capsys):
    report, code = run_json(capsys, "jacobian", "--ideal", "x^2 + y^3", "--mode", "ideal")
    assert report["result"]["matrix"] == [["2*x"], ["3*y^2"]]


@pytest.mark.parametrize("argv", [
    ["singloc", "--ideal", "x1*x2"],
    ["standardize", "--ring", "x1:1, x2:2, x3:3", "--ideal", "x1^2 - x2, x1^3 - x3"],
    ["standardize", "--ring", "x:1, y:2", "--ideal", "x^2 - y", "--kind", "step"],
    ["link", "--ideal", "x1, x2"],
    ["canonical", "--ideal", "x1, x2"],
    ["seminormal", "--ideal", "x^2"],
    ["fsplit", "--ideal", "x1*x2", "--field", "FF 3"],
    ["gb", "--ideal", "x + y, x - y", "--order", "lex"],
    ["resolve", "--ideal", "x, y, z"],
    ["examples", "--id", "jacobian-2.3"],
])
def test_commands_succeed_and_validate(capsys, argv):
    report, code = run_json(capsys, *argv)
    assert code == 0, report


def test_seminormal_witness(capsys):
    report, _ = run_json(capsys, "seminormal", "--ideal", "x^2")
    assert report["result"]["probe"]["witness"] == "x*t"
    assert report["result"]["verdict"]["verdict"] == "not seminormal"


def test_rationals_are_strings(capsys):
    report, _ = run_json(capsys, "gb", "--ideal", "2*x + 3*y")
    assert report["result"]["basis"] == ["x + 3/2*y"]
    report, _ = run_json(capsys, "resolve", "--ring", "x:2, y:3", "--ideal", "x^3 - y^2")
    assert report["result"]["normalized_multiplicity"] == "1/1"


@pytest.mark.parametrize("argv,kind", [
    (["present", "--ideal", "x1 + * x2"], "parse-error"),
    (["present", "--ideal", "x1, x1*x2"], "InputError"),
    (["link", "--ideal", "x1*x2"], "HypothesisError"),
    (["fsplit", "--ideal", "x", "--field", "FF 7"], "TooLargeError"),
    (["seminormal", "--ideal", "x", "--sigma", "many"], "InputError"),
    (["examples", "--id", "nope"], "InputError"),
    (["gb", "--ideal", "x", "--order", "sideways"], "InputError"),
    (["present", "--ring", "x:0", "--ideal", "x"], "InputError"),
])
def test_input_errors_exit_1(capsys, argv, kind):
    report, code = run_json(capsys, *argv)
    assert code == 1
    assert report["error"]["kind"] == kind


def test_parse_error_position(capsys):
    report, _ = run_json(capsys, "present", "--ideal", "x1, x2 + * x1")
    assert report["error"]["position"] == 5


def test_invariant_violation_exit_2(capsys, monkeypatch):
    real = presentation.formula_invariants

    def skewed(p, base=None):
        out = dict(real(p, base))
        out["reg"] += 1
        return out

    monkeypatch.setattr(presentation, "formula_invariants", skewed)
    report, code = run_json(capsys, "invariants", "--ideal", "x1, x2")
    assert code == 2
    assert report["error"]["kind"] == "invariant-violation"
    assert report["error"]["report"]["formula"]["reg"] == 5


def test_job_file(tmp_path, capsys):
    job = tmp_path / "job.txt"
    job.write_text("# weighted example\nring: x1:1, x2:2, x3:3\nideal: x1^2 - x2,\n  x1^3 - x3\nkind: prime\n")
    report, code = run_json(capsys, "standardize", "--file", str(job))
    assert code == 0
    assert report["ideal"] == ["x1^2 - x2", "x1^3 - x3"]
    bad = tmp_path / "bad.txt"
    bad.write_text("ideal: x\ncolour: blue\n")
    report, code = run_json(capsys, "present", "--file", str(bad))
    assert code == 1


def test_errors_go_to_stderr(capsys):
    code = cli.main(["present", "--ideal", "x1 +"])
    captured = capsys.readouterr()
    assert code == 1
    assert "error:" in captured.err
    assert "status: FAILED (exit 1)" in captured.out
