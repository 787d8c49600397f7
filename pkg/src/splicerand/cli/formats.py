"""Sample stream codecs: raw little-endian binary64, decimal text, hex-float text."""

from typing import BinaryIO, Iterator

import numpy as np

from ..errors import StreamParseError

BINARY64 = np.dtype("<f8")


def encode(values: np.ndarray, fmt: str) -> bytes:
    values = np.asarray(values, dtype=np.float64)
    if fmt == "bin":
        return values.astype(BINARY64).tobytes()
    if fmt == "text":
        # 17 significant digits reproduce every binary64 exactly
        lines = [f"{x:.17g}" for x in values.tolist()]
    elif fmt == "hex":
        lines = [float.hex(x) for x in values.tolist()]
    else:
        raise ValueError(f"Unknown stream format: {fmt}")
    return ("\n".join(lines) + "\n").encode("ascii") if lines else b""


def write_stream(values: np.ndarray, fmt: str, fh: BinaryIO):
    fh.write(encode(values, fmt))
    fh.flush()


def _lines(data: bytes) -> Iterator[tuple[int, bytes]]:
    offset = 0
    for line in data.split(b"\n"):
        if line.strip():
            yield offset, line.strip()
        offset += len(line) + 1


def _decode_text(data: bytes, fmt: str) -> tuple[np.ndarray, list[int]]:
    values = []
    offsets = []
    for offset, line in _lines(data):
        try:
            if fmt == "text":
                values.append(float(line))
            else:
                values.append(float.fromhex(line.decode("ascii")))
        except (ValueError, UnicodeDecodeError):
            raise StreamParseError(
                f"Cannot parse {line[:32]!r} as a {fmt} sample", offset
            )
        offsets.append(offset)
    return np.array(values, dtype=np.float64), offsets


def decode(data: bytes, fmt: str) -> np.ndarray:
    """Decode a stream of unit variates.

    Raises:
        StreamParseError: On a truncated record, unparsable text, or a value
            outside [0; 1]; the error carries the byte offset.
    """
    if fmt == "bin":
        usable = len(data) - len(data) % BINARY64.itemsize
        if usable != len(data):
            raise StreamParseError("Truncated binary64 record", usable)
        values = np.frombuffer(data, dtype=BINARY64).astype(np.float64)
        offsets = None
    elif fmt in ("text", "hex"):
        values, offsets = _decode_text(data, fmt)
    else:
        raise ValueError(f"Unknown stream format: {fmt}")
    bad = np.flatnonzero(~np.isfinite(values) | (values < 0.0) | (values > 1.0))
    if len(bad):
        i = int(bad[0])
        offset = i * BINARY64.itemsize if offsets is None else offsets[i]
        raise StreamParseError(f"Sample {values[i]!r} is outside [0; 1]", offset)
    return values


def read_stream(fh: BinaryIO, fmt: str) -> np.ndarray:
    return decode(fh.read(), fmt)
