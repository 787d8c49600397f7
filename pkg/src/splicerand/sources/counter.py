"""Deterministic sources for oracles, worked examples and negative controls."""

from typing import Sequence

import numpy as np

from ..errors import SourceExhaustedError
from .base import UniformSource


def counter_next(state: int, m: int) -> tuple[int, int]:
    """Return (state mod m, state + 1)."""
    if m < 1:
        raise ValueError("Counter modulus must be at least 1.")
    return state % m, state + 1


class CounterSource(UniformSource):
    """Enumerates start, start + 1, ... modulo m, forever."""

    kind = "counter"

    def __init__(self, modulus: int, start: int = 0):
        super().__init__(modulus)
        self.state = start

    def fill(self, n: int) -> np.ndarray:
        out = (self.state + np.arange(n, dtype=np.int64)) % self.modulus
        self.state += n
        return out

    def next(self) -> int:
        value, self.state = counter_next(self.state, self.modulus)
        return value


class ConstantSource(UniformSource):
    """Emits one value forever."""

    kind = "constant"

    def __init__(self, value: int, modulus: int):
        super().__init__(modulus)
        if not 0 <= value < modulus:
            raise ValueError(f"Constant {value} is outside [0; {modulus - 1}].")
        self.value = value

    def fill(self, n: int) -> np.ndarray:
        return np.full(n, self.value, dtype=np.int64)


class SequenceSource(UniformSource):
    """Replays a finite list of integers, then raises SourceExhaustedError."""

    kind = "sequence"

    def __init__(self, values: Sequence[int], modulus: int):
        super().__init__(modulus)
        self._values = np.asarray(values, dtype=np.int64)
        if np.any(self._values < 0) or np.any(self._values >= modulus):
            raise ValueError(f"Sequence values must lie in [0; {modulus - 1}].")
        self._position = 0

    @property
    def remaining(self) -> int:
        return len(self._values) - self._position

    def fill(self, n: int) -> np.ndarray:
        if n > self.remaining:
            raise SourceExhaustedError(
                f"Sequence source exhausted after {len(self._values)} values."
            )
        out = self._values[self._position : self._position + n].copy()
        self._position += n
        return out


class FractionSequence:
    """Replays a finite list of real draws through ``next_fraction``."""

    def __init__(self, values: Sequence[float]):
        self._values = [float(x) for x in values]
        self._position = 0

    @property
    def remaining(self) -> int:
        return len(self._values) - self._position

    def next_fraction(self) -> float:
        if not self.remaining:
            raise SourceExhaustedError(
                f"Fraction source exhausted after {len(self._values)} values."
            )
        value = self._values[self._position]
        self._position += 1
        return value
