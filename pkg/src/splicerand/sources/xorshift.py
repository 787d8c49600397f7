import logging
import warnings
from typing import Self

import numpy as np

from ..errors import InvalidSeedError
from .base import UniformSource
from .kernels import MASK32, empty_draws, xorshift32_fill
from .seeding import Seed, seed_expand

logger = logging.getLogger(__name__)

WEAK_SOURCE_WARNING = (
    "xorshift32 is a statistically weak generator; extended outputs inherit its "
    "defects. Use it for benchmarks and negative controls only."
)


def xorshift32_next(state: int) -> int:
    """One 13/17/5 shift-xor step. The returned value is also the new state."""
    x = state & MASK32
    x ^= (x << 13) & MASK32
    x ^= x >> 17
    x ^= (x << 5) & MASK32
    return x


class XorShift32(UniformSource):
    """Marsaglia xorshift32. Never emits 0; the declared modulus is 2^32."""

    kind = "xorshift32"

    def __init__(self, state: int):
        super().__init__(1 << 32)
        if not 0 < state <= MASK32:
            raise InvalidSeedError("xorshift32 state must be a nonzero 32-bit value.")
        self._state = np.array([state], dtype=np.int64)
        warnings.warn(WEAK_SOURCE_WARNING, UserWarning, stacklevel=2)
        logger.warning(WEAK_SOURCE_WARNING)

    @classmethod
    def from_seed(cls, seed: Seed | int = 0) -> Self:
        return cls(seed_expand(seed, cls.kind)[0])

    @property
    def state(self) -> int:
        return int(self._state[0])

    def fill(self, n: int) -> np.ndarray:
        out = empty_draws(n)
        xorshift32_fill(self._state, out)
        return out
