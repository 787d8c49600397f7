"""Exceptions raised by splicerand.

Bad input is a ``ValueError``, a failure while running is a ``RuntimeError``.
Catching the built-in base is always enough.
"""


class InvalidRangeError(ValueError):
    """A source range is degenerate, off-grid, or too wide for the word size."""


class PreconditionError(ValueError):
    """An argument violates the precondition of a formula (e.g. a rejected x1)."""


class InvalidSeedError(ValueError):
    """A seed or explicit state would put a generator into a forbidden state."""


class InsufficientDataError(ValueError):
    """Too few samples for the asymptotic regime of a test."""


class OracleSizeError(ValueError):
    """The exhaustive oracle refuses to enumerate this many pairs."""


class StreamParseError(ValueError):
    """A sample stream could not be decoded.

    Args:
        message (str): What went wrong.
        offset (int): Byte offset of the first undecodable input.
    """

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte offset {offset})")
        self.offset = offset


class SourceExhaustedError(RuntimeError):
    """A finite source ran out of values."""
