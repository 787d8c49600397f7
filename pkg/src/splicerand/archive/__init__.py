from .controller import AsyncSQLiteController as AsyncSQLiteController
from .archive import ReportArchive as ReportArchive
from .model import ArchivedReport as ArchivedReport
from .model import report_kind as report_kind
