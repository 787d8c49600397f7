import math
from abc import ABC, abstractmethod
from typing import Protocol

import numpy as np


class FractionSource(Protocol):
    """Anything that hands out one real draw at a time."""

    def next_fraction(self) -> float: ...


class UniformSource(ABC):
    """Stateful producer of uniform integers in [0; modulus - 1].

    ``fill(n)`` returns exactly the next n values ``next()`` would return, so
    bulk and single draws can be mixed on one stream. An instance is owned
    by one thread at a time.
    """

    kind: str = "uniform"

    def __init__(self, modulus: int):
        if modulus < 1:
            raise ValueError("Modulus must be a positive integer.")
        self.modulus = modulus

    @property
    def bits(self) -> int:
        """Width of the smallest power of two covering the modulus."""
        return (self.modulus - 1).bit_length()

    @property
    def step(self) -> float:
        return math.ldexp(1.0, -self.bits)

    @property
    def remaining(self) -> int | None:
        """Values left in a finite source, None when unbounded."""
        return None

    @abstractmethod
    def fill(self, n: int) -> np.ndarray:
        """Draw the next n values as an int64 array."""

    def next(self) -> int:
        return int(self.fill(1)[0])

    def next_fraction(self) -> float:
        """The next draw as the exact grid fraction i * 2^-bits."""
        return self.next() * self.step

    def __repr__(self) -> str:
        return f"{type(self).__name__}(modulus={self.modulus})"
