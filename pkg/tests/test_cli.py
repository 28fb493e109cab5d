import io
import json
import sys

import pytest

from severi.cli import main


def _run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_a2_json(capsys, tmp_path):
    code, out, err = _run(["analyze", "A2", "--no-cache"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["singularity"]["label"] == "A2"
    assert report["singularity"]["mu"] == 2
    assert all(report["properties"].values())


def test_analyze_text_format(capsys):
    code, out, err = _run(["analyze", "A2", "--no-cache", "--format", "text"], capsys)
    assert code == 0
    assert "A2" in out and not out.lstrip().startswith("{")


def test_analyze_byte_identical_reruns(capsys):
    _, out1, _ = _run(["analyze", "A2", "--no-cache", "--strata", "1",
                       "--betti", "--poisson"], capsys)
    _, out2, _ = _run(["analyze", "A2", "--no-cache", "--strata", "1",
                       "--betti", "--poisson"], capsys)
    assert out1 == out2


def test_cache_round_trip(capsys, tmp_path):
    cache = str(tmp_path / "cache")
    code1, out1, _ = _run(["analyze", "A2", "--cache", cache, "--strata", "1"], capsys)
    code2, out2, _ = _run(["analyze", "A2", "--cache", cache, "--strata", "1"], capsys)
    assert code1 == code2 == 0
    assert out1 == out2
    files = list((tmp_path / "cache").iterdir())
    assert len(files) == 1


def test_custom_equation(capsys):
    code, out, _ = _run(["analyze", "--f", "x^3+y^2", "--weights", "2,3",
                         "--no-cache"], capsys)
    assert code == 0
    report = json.loads(out)
    assert report["singularity"]["mu"] == 2


def test_custom_equation_bad_weights(capsys):
    code, _, err = _run(["analyze", "--f", "x^3+y^2", "--weights", "3,2",
                         "--no-cache"], capsys)
    assert code == 1 and "error" in err


def test_unknown_label_errors(capsys):
    code, _, err = _run(["analyze", "D5", "--no-cache"], capsys)
    assert code == 1 and "error" in err


def test_label_and_custom_conflict(capsys):
    code, _, err = _run(["analyze", "A2", "--f", "x^3+y^2", "--weights", "2,3",
                         "--no-cache"], capsys)
    assert code == 1


def test_budget_exhaustion_exit_code(capsys):
    code, out, _ = _run(["analyze", "A6", "--no-cache", "--strata", "1,2,3",
                         "--betti", "--budget", "0.01"], capsys)
    assert code == 2
    report = json.loads(out)
    assert report["budget_exceeded"]


def test_verify_paper_a2(capsys):
    code, out, _ = _run(["verify-paper", "A2"], capsys)
    assert code == 0
    assert "pass" in out and "fail" not in out
