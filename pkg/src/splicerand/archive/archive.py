import logging
import re
from typing import Any, Self

from ..stats import OracleResult, TestReport
from .controller import AsyncSQLiteController
from .model import ArchivedReport, ReportKind, report_kind

logger = logging.getLogger(__name__)

_KEY = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class ReportArchive:
    """Append-only store of test and oracle reports.

    Rows hold id, kind, created_at and the report as JSON.
    """

    def __init__(self, controller: AsyncSQLiteController, table_name: str = "reports"):
        if not _KEY.match(table_name):
            raise ValueError(f"Invalid table name: {table_name!r}")
        self.controller = controller
        self.table_name = table_name

    async def initialize(self):
        await self.controller.execute(
            f"""
            CREATE TABLE IF NOT EXISTS {self.table_name} (
                id INTEGER PRIMARY KEY AUTOINCREMENT,
                kind TEXT NOT NULL,
                created_at TIMESTAMP DEFAULT CURRENT_TIMESTAMP,
                data JSON NOT NULL
            )
            """
        )
        await self.controller.execute(
            f"""
            CREATE INDEX IF NOT EXISTS idx_{self.table_name}_test_name
            ON {self.table_name} (json_extract(data, '$.test_name'))
            """
        )
        await self.controller.commit()

    async def save(self, report: TestReport | OracleResult) -> int:
        """Append a report and return its row id."""
        kind = report_kind(report)
        cursor = await self.controller.execute(
            f"INSERT INTO {self.table_name} (kind, data) VALUES (?, json(?))",
            (kind, report.model_dump_json()),
        )
        await self.controller.commit()
        logger.info("archived %s report as id=%d", kind, cursor.lastrowid)
        return cursor.lastrowid

    async def find(self, report_id: int) -> ArchivedReport | None:
        rows = await self.controller.fetchall(
            f"SELECT id, kind, created_at, data FROM {self.table_name} WHERE id = ?",
            (report_id,),
        )
        return ArchivedReport.from_row(rows[0]) if rows else None

    async def search(
        self, kind: ReportKind | None = None, **conditions: Any
    ) -> list[ArchivedReport]:
        """Reports matching a kind and JSON field equalities, oldest first.

        Example:
            await archive.search(kind="test", test_name="ks", verdict="fail")
        """
        clauses = []
        params: list[Any] = []
        if kind is not None:
            clauses.append("kind = ?")
            params.append(kind)
        for key, value in conditions.items():
            if not _KEY.match(key):
                raise ValueError(f"Invalid report field: {key!r}")
            clauses.append(f"json_extract(data, '$.{key}') = ?")
            params.append(value)
        query = f"SELECT id, kind, created_at, data FROM {self.table_name}"
        if clauses:
            query += " WHERE " + " AND ".join(clauses)
        query += " ORDER BY id ASC"
        rows = await self.controller.fetchall(query, params)
        return [ArchivedReport.from_row(row) for row in rows]

    async def history(self, limit: int = 20) -> list[ArchivedReport]:
        """The newest reports first."""
        rows = await self.controller.fetchall(
            f"SELECT id, kind, created_at, data FROM {self.table_name} "
            "ORDER BY id DESC LIMIT ?",
            (limit,),
        )
        return [ArchivedReport.from_row(row) for row in rows]

    async def close(self):
        await self.controller.close()

    @classmethod
    async def create_memory(cls, table_name: str = "reports") -> Self:
        controller = await AsyncSQLiteController.create_memory()
        archive = cls(controller, table_name)
        await archive.initialize()
        return archive

    @classmethod
    async def create_file(cls, filepath: str, table_name: str = "reports") -> Self:
        """Archive in a SQLite file, created on first use."""
        controller = await AsyncSQLiteController.create_file(filepath)
        archive = cls(controller, table_name)
        await archive.initialize()
        return archive
