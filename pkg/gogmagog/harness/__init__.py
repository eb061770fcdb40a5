"""Harness module - verification suites, statistics tables, worker pool and reports."""

from .report import CheckResult, CheckStatus, Report, markdown_table
from .pool import parallel_count, run_partitioned
from .tables import Conjecture3Tables, StatsTable, conjecture3_tables, stats_table
from .suites import (
    catalan,
    pentagon333_condition_sets,
    pentagon_equinumeration,
    verify_bijections,
    verify_equinumeration,
    verify_statistics,
)

__all__ = [
    "CheckResult",
    "CheckStatus",
    "Report",
    "markdown_table",
    "parallel_count",
    "run_partitioned",
    "Conjecture3Tables",
    "StatsTable",
    "conjecture3_tables",
    "stats_table",
    "catalan",
    "pentagon333_condition_sets",
    "pentagon_equinumeration",
    "verify_bijections",
    "verify_equinumeration",
    "verify_statistics",
]
