import json
from typing import Any, Literal

from pydantic import BaseModel

from ..stats import OracleResult, TestReport

ReportKind = Literal["test", "oracle"]


def report_kind(report: TestReport | OracleResult) -> ReportKind:
    if isinstance(report, TestReport):
        return "test"
    if isinstance(report, OracleResult):
        return "oracle"
    raise ValueError(f"Cannot archive a {type(report).__name__}.")


class ArchivedReport(BaseModel):
    """A stored report row."""

    id: int
    kind: ReportKind
    created_at: str
    data: dict[str, Any]

    @classmethod
    def from_row(cls, row: tuple) -> "ArchivedReport":
        """Build from an (id, kind, created_at, data) row."""
        return cls(
            id=row[0], kind=row[1], created_at=str(row[2]), data=json.loads(row[3])
        )

    def to_report(self) -> TestReport | OracleResult:
        """Validate the stored JSON back into its report model."""
        if self.kind == "test":
            return TestReport.model_validate(self.data)
        return OracleResult.model_validate(self.data)
