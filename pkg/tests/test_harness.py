"""
Reports, tables, the worker pool and the verification suites at small sizes.
"""

import json

import pytest
import yaml

from gogmagog.core.errors import CapExceededError, RangeError
from gogmagog.core.models import Family, Shape, ShapeKind
from gogmagog.harness.pool import STATISTIC_TASKS, parallel_count, run_partitioned
from gogmagog.harness.report import CheckStatus, Report, markdown_table
from gogmagog.harness.suites import (
    catalan,
    pentagon_equinumeration,
    verify_bijections,
    verify_equinumeration,
    verify_statistics,
)
from gogmagog.harness.tables import JOINT, conjecture3_tables, stats_table


# ==============================================================================
# Reports
# ==============================================================================

def test_report_statuses():
    report = Report(suite="demo")
    report.add("theorem", True)
    report.add("broken", False, "1 vs 2")
    report.add("open", False, conjecture=True)
    report.add("evidence", True, conjecture=True)
    statuses = [c.status for c in report.checks]
    assert statuses == [
        CheckStatus.PASS,
        CheckStatus.FAIL,
        CheckStatus.CONJECTURE_REFUTED,
        CheckStatus.CONJECTURE_CONFIRMED,
    ]
    assert [c.name for c in report.failures] == ["broken"]
    assert not report.ok
    assert report.summary()["CONJECTURE-REFUTED"] == 1
    assert report.checks[2].is_conjecture


def test_conjecture_refutation_is_not_a_failure():
    report = Report(suite="demo")
    report.add("open", False, conjecture=True)
    assert report.ok


def test_erratum_is_not_a_failure():
    report = Report(suite="demo")
    report.add("published claim", False, "3 counterexamples", erratum=True)
    report.add("published claim n=2", True, erratum=True)
    assert [c.status for c in report.checks] == [CheckStatus.ERRATUM, CheckStatus.PASS]
    assert report.ok
    assert report.summary()["ERRATUM"] == 1


def test_report_rendering():
    report = Report(suite="demo")
    report.add("a|b", True, "x|y")
    data = json.loads(report.render("json"))
    assert data == {"suite": "demo", "checks": [{"name": "a|b", "status": "PASS", "details": "x|y"}]}
    assert yaml.safe_load(report.render("yaml")) == data
    markdown = report.render("table")
    assert markdown.startswith("# demo")
    assert "x\\|y" in markdown


def test_markdown_table():
    assert markdown_table(["a", "b"], [[1, 2]]) == "| a | b |\n|---|---|\n| 1 | 2 |\n"


# ==============================================================================
# Tables and pool
# ==============================================================================

def test_joint_table_four():
    table = stats_table(Family.GOG, 4, JOINT)
    assert table.get(3, 2) == 6
    assert table.get(0, 6) == 1
    assert table.get(2, 2) == 0
    assert table.total == 42
    assert "nu \\ mu" in table.to_markdown()


def test_beta_table_three():
    table = stats_table(Family.GOG, 3, "beta")
    assert table.counts == [((1,), 2), ((2,), 3), ((3,), 2)]
    data = json.loads(table.to_json())
    assert data["counts"][1] == {"key": [2], "count": 3}


def test_table_errors():
    with pytest.raises(CapExceededError):
        stats_table(Family.GOG, 7, "mu")
    with pytest.raises(RangeError):
        stats_table(Family.GOG, 3, "delta")


def test_conjecture3_tables():
    tables = conjecture3_tables(3)
    assert len(tables.tables) == 9
    assert set(tables.per_statistic) == {"alpha", "beta", "gamma"}
    for name in ("alpha", "beta", "gamma"):
        assert any(
            f"{name}/magog" in group and f"{name}/gogam" in group for group in tables.coinciding
        ), name
    assert tables.to_dict()["distributions"]["beta/gog"] == {"1": 2, "2": 3, "3": 2}


def test_pool_matches_inline():
    shape = Shape(kind=ShapeKind.LEFT, n=4, k=2)
    inline = run_partitioned(STATISTIC_TASKS["beta"], Family.GOGAM, Shape(n=4), jobs=1)
    pooled = run_partitioned(STATISTIC_TASKS["beta"], Family.GOGAM, Shape(n=4), jobs=2)
    assert inline == pooled
    assert parallel_count(Family.GOG, shape, jobs=2) == parallel_count(Family.GOG, shape, jobs=1)


# ==============================================================================
# Suites
# ==============================================================================

def test_catalan():
    assert [catalan(n) for n in range(1, 7)] == [1, 2, 5, 14, 42, 132]


def test_pentagon_equinumeration_small():
    compared, mismatches = pentagon_equinumeration(3)
    assert compared == 27
    assert mismatches == []


def test_equinumeration_suite():
    report = verify_equinumeration(4)
    assert report.ok, [c.name for c in report.failures]
    names = [c.name for c in report.checks]
    assert "triangles n=4" in names
    assert "left (4,1) catalan" in names
    status = {c.name: c.status for c in report.checks}
    assert status["right (4,3) gog=gogam"] == CheckStatus.PASS
    assert status["left (4,2) gog=gogam"] == CheckStatus.PASS
    assert status["left (4,3) gog=gogam"] == CheckStatus.CONJECTURE_CONFIRMED


def test_bijection_suite(restore_settings):
    restore_settings.involution_samples = 50
    report = verify_bijections(4)
    assert report.ok, [c.name for c in report.failures]


def test_statistics_suite():
    report = verify_statistics(3)
    assert report.ok, [c.name for c in report.failures]


def test_caps():
    with pytest.raises(CapExceededError):
        verify_equinumeration(8)
    with pytest.raises(CapExceededError):
        verify_bijections(9)
    with pytest.raises(CapExceededError):
        verify_statistics(7)


@pytest.mark.slow
def test_bijection_suite_at_scale():
    report = verify_bijections(8)
    assert report.ok, [c.name for c in report.failures]
