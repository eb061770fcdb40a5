"""
Statistics tables: single-statistic distributions, the joint (mu, nu)
table and the nine alpha/beta/gamma distributions across the families.
"""

import json
import logging
from collections import Counter
from typing import Any

from pydantic import BaseModel

from ..core.config import settings
from ..core.errors import CapExceededError, RangeError
from ..core.models import Family, Shape
from .pool import STATISTIC_TASKS, joint_task, run_partitioned
from .report import markdown_table

logger = logging.getLogger(__name__)

JOINT = "mu,nu"


class StatsTable(BaseModel):
    """Exact counts keyed by statistic value, or by (mu, nu) for the joint table."""

    family: Family
    n: int
    statistic: str
    counts: list[tuple[tuple[int, ...], int]]

    def get(self, *key: int) -> int:
        return dict(self.counts).get(tuple(key), 0)

    @property
    def total(self) -> int:
        return sum(c for _, c in self.counts)

    def to_json(self) -> str:
        data = {
            "family": self.family.value,
            "n": self.n,
            "statistic": self.statistic,
            "counts": [{"key": list(key), "count": c} for key, c in self.counts],
        }
        return json.dumps(data, separators=(",", ":"))

    def to_markdown(self) -> str:
        title = f"## {self.family.value} n={self.n} {self.statistic}\n\n"
        if self.statistic != JOINT:
            return title + markdown_table(
                [self.statistic, "count"], [[key[0], c] for key, c in self.counts]
            )
        top = self.n * (self.n - 1) // 2
        header = ["nu \\ mu", *(str(m) for m in range(top + 1))]
        rows = [[v, *(self.get(m, v) for m in range(top + 1))] for v in range(top + 1)]
        return title + markdown_table(header, rows)


def _check_cap(n: int) -> None:
    if n > settings.max_triangle_n:
        raise CapExceededError(f"n={n} exceeds max_triangle_n={settings.max_triangle_n}")


def _sorted_counts(counter: Counter) -> list[tuple[tuple[int, ...], int]]:
    keyed = {(k if isinstance(k, tuple) else (k,)): c for k, c in counter.items()}
    return sorted(keyed.items())


def stats_table(family: Family, n: int, statistic: str, jobs: int | None = None) -> StatsTable:
    """
    Distribution of a statistic over the size-n triangles of a family.

    Args:
        family: Triangle family
        n: Size
        statistic: alpha, beta, gamma, mu, nu, or "mu,nu" for the joint table
        jobs: Worker processes

    Raises:
        CapExceededError: n above max_triangle_n
    """
    _check_cap(n)
    shape = Shape(n=n)
    if statistic == JOINT:
        counter = run_partitioned(joint_task, family, shape, jobs)
    else:
        if statistic not in STATISTIC_TASKS:
            raise RangeError(f"unknown statistic: {statistic}")
        counter = run_partitioned(STATISTIC_TASKS[statistic], family, shape, jobs)
    logger.debug("%s table for %s n=%d has %d cells", statistic, family.value, n, len(counter))
    return StatsTable(family=family, n=n, statistic=statistic, counts=_sorted_counts(counter))


class Conjecture3Tables(BaseModel):
    """The nine family x statistic distributions for one size."""

    n: int
    tables: dict[str, StatsTable]
    coinciding: list[list[str]]
    per_statistic: dict[str, bool]

    @property
    def confirmed(self) -> bool:
        return all(self.per_statistic.values())

    def to_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "distributions": {
                label: {str(key[0]): c for key, c in table.counts}
                for label, table in self.tables.items()
            },
            "coinciding": self.coinciding,
            "per_statistic": self.per_statistic,
        }


def conjecture3_tables(n: int, jobs: int | None = None) -> Conjecture3Tables:
    """
    Tabulate alpha, beta and gamma on Gog, Magog and GOGAm triangles.

    Reports the groups of identical distributions and, for each statistic,
    whether its three distributions agree.
    """
    tables: dict[str, StatsTable] = {}
    for name in ("alpha", "beta", "gamma"):
        for family in Family:
            tables[f"{name}/{family.value}"] = stats_table(family, n, name, jobs)
    groups: dict[tuple, list[str]] = {}
    for label, table in tables.items():
        groups.setdefault(tuple(table.counts), []).append(label)
    coinciding = sorted(labels for labels in groups.values() if len(labels) > 1)
    per_statistic = {
        name: len({tuple(tables[f"{name}/{f.value}"].counts) for f in Family}) == 1
        for name in ("alpha", "beta", "gamma")
    }
    return Conjecture3Tables(n=n, tables=tables, coinciding=coinciding, per_statistic=per_statistic)
