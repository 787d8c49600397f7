import math
from fractions import Fraction
from typing import Self

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from . import validators as v


class ResolutionParam(BaseModel):
    """Word size of the base draws and the precisions it implies.

    Args:
        w (int): Bits per base draw, 2 <= w <= 26 so that 2w <= 52.
    """

    model_config = ConfigDict(frozen=True)

    w: int = Field(ge=v.MIN_WORD_SIZE, le=v.MAX_WORD_SIZE)

    @computed_field
    @property
    def k(self) -> float:
        """Grid step, exactly 2^-w."""
        return math.ldexp(1.0, -self.w)

    @computed_field
    @property
    def k_prime(self) -> float:
        """Resulting precision, exactly k^2."""
        return math.ldexp(1.0, -2 * self.w)

    @property
    def k_exact(self) -> Fraction:
        return Fraction(1, 1 << self.w)

    @property
    def grid_size(self) -> int:
        """Number of w-bit values, 2^w."""
        return 1 << self.w

    @classmethod
    def from_bits(cls, w: int) -> Self:
        v.validate_word_size(w)
        return cls(w=w)


class GridRange(BaseModel):
    """A source range [lo; hi] whose support is lo + i*step.

    Value-space grids use step = k, integer grids use step = 1.
    """

    model_config = ConfigDict(frozen=True)

    lo: float
    hi: float
    step: float

    @model_validator(mode="after")
    def _check_grid(self) -> Self:
        v.validate_grid(self.lo, self.hi, self.step)
        return self

    @computed_field
    @property
    def m(self) -> int:
        """Number of grid points."""
        return int((self.hi - self.lo) / self.step) + 1

    def point(self, i: int) -> float:
        return self.lo + i * self.step

    def contains(self, x: float) -> bool:
        if not self.lo <= x <= self.hi:
            return False
        return (x - self.lo) / self.step == int((x - self.lo) / self.step)

    @classmethod
    def unit(cls, p: ResolutionParam) -> Self:
        """The single-generator range [0; 1 - k]."""
        return cls(lo=0.0, hi=1.0 - p.k, step=p.k)

    @classmethod
    def span(cls, m: int, p: ResolutionParam, lo: float = 0.0) -> Self:
        """m grid points of step k starting at lo."""
        v.validate_modulus(m, p.w)
        return cls(lo=lo, hi=lo + (m - 1) * p.k, step=p.k)

    @classmethod
    def integers(cls, m: int) -> Self:
        """The integer grid {0, ..., m - 1}."""
        return cls(lo=0.0, hi=float(m - 1), step=1.0)


class PairInput(BaseModel):
    """One (x1, x2) draw checked against the ranges it came from."""

    model_config = ConfigDict(frozen=True)

    x1: float
    x2: float
    r1: GridRange
    r2: GridRange

    @model_validator(mode="after")
    def _check_membership(self) -> Self:
        if not self.r1.contains(self.x1):
            raise ValueError(f"x1={self.x1} is not a point of its range.")
        if not self.r2.contains(self.x2):
            raise ValueError(f"x2={self.x2} is not a point of its range.")
        return self

    @classmethod
    def from_indices(cls, i1: int, i2: int, r1: GridRange, r2: GridRange) -> Self:
        return cls(x1=r1.point(i1), x2=r2.point(i2), r1=r1, r2=r2)


class ExtendedSample(BaseModel):
    """One composed output.

    Attributes:
        j (int): Lattice index (i1 - 1) * m + i2 of the accepted pair.
        value (float): The extended-precision variate in [0; 1 - k'].
        rejected (int): x1 draws discarded before this pair was accepted.
    """

    model_config = ConfigDict(frozen=True)

    j: int = Field(ge=0)
    value: float = Field(ge=0.0, le=1.0)
    rejected: int = Field(default=0, ge=0)
