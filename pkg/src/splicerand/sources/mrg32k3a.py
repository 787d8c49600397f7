import logging
from typing import Self, Sequence

import numpy as np

from ..errors import InvalidSeedError
from .base import UniformSource
from .kernels import MRG_M1, MRG_M2, empty_draws, mrg32k3a_fill
from .seeding import Seed, seed_expand

logger = logging.getLogger(__name__)


def mrg32k3a_next(state: np.ndarray) -> int:
    """Advance a six-word int64 state in place and return the output in [0; m1 - 1]."""
    out = empty_draws(1)
    mrg32k3a_fill(state, out)
    return int(out[0])


class Mrg32k3a(UniformSource):
    """Combined multiple recursive generator, two order-3 recurrences.

    Args:
        state (Sequence[int]): Six words, the first three below m1, the last
            three below m2, neither triple all zero.
    """

    kind = "mrg32k3a"

    def __init__(self, state: Sequence[int]):
        super().__init__(MRG_M1)
        words = [int(s) for s in state]
        if len(words) != 6:
            raise InvalidSeedError("MRG32k3a state needs exactly six words.")
        if any(s < 0 for s in words):
            raise InvalidSeedError("MRG32k3a state words must be non-negative.")
        if any(s >= MRG_M1 for s in words[:3]) or any(s >= MRG_M2 for s in words[3:]):
            raise InvalidSeedError("MRG32k3a state words must be below their modulus.")
        if not any(words[:3]) or not any(words[3:]):
            raise InvalidSeedError("MRG32k3a component state must not be all zero.")
        self._state = np.array(words, dtype=np.int64)

    @classmethod
    def from_seed(cls, seed: Seed | int = 0) -> Self:
        state = seed_expand(seed, cls.kind)
        logger.debug("mrg32k3a seeded with %s", seed)
        return cls(state)

    @property
    def state(self) -> tuple[int, ...]:
        return tuple(int(s) for s in self._state)

    def fill(self, n: int) -> np.ndarray:
        out = empty_draws(n)
        mrg32k3a_fill(self._state, out)
        return out
