"""
Command-line surface.
"""

import io
import json

import pytest

from gogmagog import __version__
from gogmagog.bijections.standard import standard_procedure
from gogmagog.cli import main


def lines(capsys) -> list[str]:
    return [line for line in capsys.readouterr().out.splitlines() if line]


def test_count(capsys):
    assert main(["count", "--family", "magog", "--n", "4", "--format", "jsonl"]) == 0
    assert json.loads(lines(capsys)[0]) == {"family": "magog", "shape": "triangle(4)", "count": 42}


def test_count_left_trapezoids(capsys):
    assert main(["count", "--family", "gogam", "--n", "5", "--side", "left", "--k", "1",
                 "--format", "jsonl"]) == 0
    assert json.loads(lines(capsys)[0])["count"] == 42


def test_enumerate(capsys):
    assert main(["enumerate", "--family", "gog", "--n", "2"]) == 0
    assert [json.loads(line)["rows"] for line in lines(capsys)] == [[[1], [1, 2]], [[2], [1, 2]]]


def test_biject_over_a_domain(capsys):
    assert main(["biject", "--map", "left2", "--n", "4"]) == 0
    records = [json.loads(line) for line in lines(capsys)]
    assert records
    assert all(r["input"]["rows"][0] == r["output"]["rows"][0] for r in records)


def test_biject_reads_stdin(capsys, monkeypatch, inversion_example):
    y, _ = standard_procedure(inversion_example)
    monkeypatch.setattr("sys.stdin", io.StringIO(y.to_json() + "\n"))
    assert main(["biject", "--map", "std", "--direction", "inv"]) == 0
    record = json.loads(lines(capsys)[0])
    assert record["output"] == json.loads(inversion_example.to_json())


def test_standard_procedure_reports_admissibility(capsys):
    assert main(["biject", "--map", "std", "--n", "3"]) == 0
    records = [json.loads(line) for line in lines(capsys)]
    assert len(records) == 7
    assert all("admissible" in r for r in records)


def test_standard_procedure_flags_non_gt_images(capsys):
    assert main(["biject", "--map", "std", "--n", "4"]) == 0
    records = [json.loads(line) for line in lines(capsys)]
    assert len(records) == 42
    flagged = [r["input"]["rows"] for r in records if not r["gt"]]
    assert flagged == [[[2], [2, 3], [1, 3, 4], [1, 2, 3, 4]]]


def test_zpoly(capsys):
    assert main(["zpoly", "--n", "3"]) == 0
    assert lines(capsys) == ["x^3 + 2*x^2*y + 2*x*y^2 + y^3 + x*y"]


def test_stats_json(capsys):
    assert main(["stats", "--n", "4", "--statistic", "mu,nu", "--format", "jsonl"]) == 0
    data = json.loads(lines(capsys)[0])
    assert {"key": [3, 2], "count": 6} in data["counts"]


def test_verify_json(capsys):
    assert main(["verify", "--suite", "statistics", "--n-max", "3", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert all(check["status"] != "FAIL" for check in data["checks"])


def test_domain_errors_exit_two(capsys):
    assert main(["verify", "--suite", "equinumeration", "--n-max", "9"]) == 2
    assert "error:" in capsys.readouterr().err
    assert main(["biject", "--map", "std", "--direction", "inv", "--n", "3"]) == 2


def test_version(capsys):
    with pytest.raises(SystemExit):
        main(["--version"])
    assert __version__ in capsys.readouterr().out
