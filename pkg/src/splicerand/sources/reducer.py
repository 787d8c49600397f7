import logging

import numpy as np

from ..errors import InvalidRangeError, SourceExhaustedError
from .base import UniformSource

logger = logging.getLogger(__name__)

_MIN_CHUNK = 64


class RangeReducer(UniformSource):
    """Exactly uniform integers in [0; t - 1] from a wider source.

    Draws at or above T = floor(m_src / t) * t are discarded, the rest are
    reduced modulo t. Draws are pulled in chunks; leftovers are kept for
    the next call so the output stream does not depend on call sizes.
    """

    def __init__(self, source: UniformSource, modulus: int):
        if modulus > source.modulus:
            raise InvalidRangeError(
                f"Cannot reduce a source of modulus {source.modulus} to {modulus}."
            )
        super().__init__(modulus)
        self.source = source
        self.kind = source.kind
        self.threshold = (source.modulus // modulus) * modulus
        self._pending = np.empty(0, dtype=np.int64)
        logger.debug(
            "reducing %s from %d to %d, threshold %d",
            source.kind,
            source.modulus,
            modulus,
            self.threshold,
        )

    @property
    def acceptance(self) -> float:
        """Fraction of source draws that survive the threshold."""
        return self.threshold / self.source.modulus

    def _absorb(self, count: int):
        raw = self.source.fill(count)
        kept = raw[raw < self.threshold] % self.modulus
        self._pending = np.concatenate((self._pending, kept))

    @property
    def remaining(self) -> int | None:
        left = self.source.remaining
        if left is None:
            return None
        if left:
            self._absorb(left)
        return len(self._pending)

    def fill(self, n: int) -> np.ndarray:
        while len(self._pending) < n:
            missing = n - len(self._pending)
            request = max(int(missing / self.acceptance * 1.05) + 1, _MIN_CHUNK)
            left = self.source.remaining
            if left is not None:
                if left == 0:
                    raise SourceExhaustedError(
                        f"Source exhausted while reducing to modulus {self.modulus}."
                    )
                request = min(request, left)
            self._absorb(request)
        out, self._pending = self._pending[:n], self._pending[n:]
        return out

    def __repr__(self) -> str:
        return f"RangeReducer({self.source!r}, modulus={self.modulus})"


def reduce_to_modulus(source: UniformSource, modulus: int) -> UniformSource:
    """Adapt a source to emit uniform integers in [0; modulus - 1]."""
    if modulus == source.modulus:
        return source
    return RangeReducer(source, modulus)


def reduce_to_width(source: UniformSource, w: int) -> UniformSource:
    """Adapt a source to emit uniform w-bit integers.

    Raises:
        InvalidRangeError: If 2^w exceeds the source modulus.
    """
    if (1 << w) > source.modulus:
        raise InvalidRangeError(
            f"Width {w} exceeds the source width ({source.modulus} values)."
        )
    return RangeReducer(source, 1 << w)
