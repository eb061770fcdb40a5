"""
Report models and rendering.
Check results are collected into a Report and rendered as a markdown
table, compact JSON or YAML. Rendering is deterministic: checks keep the
order in which the suite produced them.
"""

import json
from enum import Enum
from typing import Any

import yaml
from pydantic import BaseModel, Field


class CheckStatus(str, Enum):
    """Outcome of one check."""
    PASS = "PASS"
    FAIL = "FAIL"
    CONJECTURE_CONFIRMED = "CONJECTURE-CONFIRMED-AT-SCALE"
    CONJECTURE_REFUTED = "CONJECTURE-REFUTED"
    ERRATUM = "ERRATUM"


class CheckResult(BaseModel):
    """A single named comparison."""

    name: str
    status: CheckStatus
    details: str = ""

    @property
    def is_conjecture(self) -> bool:
        return self.status in (CheckStatus.CONJECTURE_CONFIRMED, CheckStatus.CONJECTURE_REFUTED)


class Report(BaseModel):
    """Every check of one suite run."""

    suite: str
    checks: list[CheckResult] = Field(default_factory=list)

    def add(
        self,
        name: str,
        passed: bool,
        details: str = "",
        conjecture: bool = False,
        erratum: bool = False,
    ) -> CheckResult:
        """
        Record a comparison.

        Conjecture checks never count as failures. Erratum checks cover
        published statements known not to hold: a miss is recorded as
        ERRATUM, not FAIL.
        """
        if erratum and not passed:
            status = CheckStatus.ERRATUM
        elif conjecture:
            status = CheckStatus.CONJECTURE_CONFIRMED if passed else CheckStatus.CONJECTURE_REFUTED
        else:
            status = CheckStatus.PASS if passed else CheckStatus.FAIL
        result = CheckResult(name=name, status=status, details=details)
        self.checks.append(result)
        return result

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == CheckStatus.FAIL]

    @property
    def ok(self) -> bool:
        """True iff no theorem check failed."""
        return not self.failures

    def summary(self) -> dict[str, int]:
        counts = {status.value: 0 for status in CheckStatus}
        for check in self.checks:
            counts[check.status.value] += 1
        return counts

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "checks": [
                {"name": c.name, "status": c.status.value, "details": c.details} for c in self.checks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))

    def to_yaml(self) -> str:
        return yaml.dump(self.to_dict(), default_flow_style=False, sort_keys=False)

    def to_markdown(self) -> str:
        """Summary table followed by one row per check."""
        report = f"# {self.suite}\n\n## Summary\n\n| Status | Checks |\n|--------|--------|\n"
        for status, number in self.summary().items():
            report += f"| {status} | {number} |\n"
        report += "\n## Checks\n\n| Check | Status | Details |\n|-------|--------|---------|\n"
        for check in self.checks:
            details = check.details.replace("|", "\\|")
            report += f"| {check.name} | {check.status.value} | {details} |\n"
        return report

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "yaml":
            return self.to_yaml()
        return self.to_markdown()


def markdown_table(header: list[str], rows: list[list[Any]]) -> str:
    """Plain markdown table."""
    lines = ["| " + " | ".join(header) + " |", "|" + "|".join("---" for _ in header) + "|"]
    for row in rows:
        lines.append("| " + " | ".join(str(v) for v in row) + " |")
    return "\n".join(lines) + "\n"
