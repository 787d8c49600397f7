import asyncio
import logging

import aiosqlite

logger = logging.getLogger(__name__)


class AsyncSQLiteController:
    """One aiosqlite connection shared by the tasks of a process.

    Statements are serialised through a lock; at most ``semaphore`` callers
    wait at once.
    """

    def __init__(self, db_path: str, semaphore: int = 100):
        self.db_path: str = db_path
        self._connection: aiosqlite.Connection | None = None
        self._lock = asyncio.Lock()
        self._semaphore = asyncio.Semaphore(semaphore)

    async def connect(self):
        """Open the connection once; later calls are no-ops."""
        async with self._lock:
            if self._connection:
                return
            try:
                self._connection = await aiosqlite.connect(self.db_path)
                await self._connection.execute("PRAGMA journal_mode = WAL;")
                await self._connection.execute("PRAGMA synchronous = NORMAL;")
                await self._connection.execute("PRAGMA busy_timeout = 5000;")
            except aiosqlite.Error as e:
                raise RuntimeError(f"Failed to open report archive {self.db_path}: {e}")
            logger.debug("archive connected: %s", self.db_path)

    async def close(self):
        async with self._lock:
            if self._connection:
                await self._connection.close()
                self._connection = None

    async def execute(self, query: str, params=None) -> aiosqlite.Cursor:
        async with self._semaphore:
            async with self._lock:
                if not self._connection:
                    raise RuntimeError("Archive connection is not established.")
                return await self._connection.execute(query, params or ())

    async def fetchall(self, query: str, params=None) -> list[tuple]:
        cursor = await self.execute(query, params)
        return list(await cursor.fetchall())

    async def commit(self):
        async with self._semaphore:
            async with self._lock:
                if not self._connection:
                    raise RuntimeError("Archive connection is not established.")
                await self._connection.commit()

    @classmethod
    async def create_memory(cls) -> "AsyncSQLiteController":
        """Controller over a private in-memory database."""
        controller = cls(":memory:")
        await controller.connect()
        return controller

    @classmethod
    async def create_file(cls, filepath: str) -> "AsyncSQLiteController":
        controller = cls(filepath)
        await controller.connect()
        return controller
