import logging
from typing import Self

import numpy as np
from pydantic import BaseModel, ConfigDict

from . import validators as v
from ..errors import InvalidRangeError, SourceExhaustedError
from ..sources import FractionSource, UniformSource, build_source
from ..sources.kernels import empty_draws, scan_pairs
from .formulas import _continuous, compose_index, index_to_unit, open_unit
from .params import ExtendedSample, ResolutionParam

logger = logging.getLogger(__name__)


class PrngdBounds(BaseModel):
    """Constants of the loop-based generator, folded once per range."""

    model_config = ConfigDict(frozen=True)

    k: float
    lo: float
    hi: float
    rmin: float
    rmax: float
    offset: float
    span: float

    @classmethod
    def create(cls, lo: float, hi: float, p: ResolutionParam) -> Self:
        if not hi > lo:
            raise InvalidRangeError(f"Source range needs max > min, got [{lo}; {hi}].")
        width = hi - lo
        return cls(
            k=p.k,
            lo=lo,
            hi=hi,
            rmin=lo + p.k * width,
            rmax=hi - p.k * width,
            offset=lo + p.k * hi,
            span=width - p.k * width,
        )


def prngd_next(
    src: FractionSource,
    lo: float,
    hi: float,
    p: ResolutionParam,
    bounds: PrngdBounds | None = None,
) -> float:
    """Loop-based extended generator over real draws in [lo; hi].

    R1 is redrawn while it lies outside [Rmin; Rmax] (both ends admitted);
    R2 is drawn only after R1 is accepted.

    Args:
        src (FractionSource): Source of real draws.
        lo (float): Smallest value the source can produce.
        hi (float): Largest value the source can produce.
        p (ResolutionParam): Resolution of the source.
        bounds (PrngdBounds | None): Precomputed constants for (lo, hi, p).

    Returns:
        float: Z = (R1 + k R2 - (lo + k hi)) / ((hi - lo)(1 - k)).

    Raises:
        SourceExhaustedError: If a finite source runs dry.
    """
    b = bounds or PrngdBounds.create(lo, hi, p)
    r1 = src.next_fraction()
    while r1 < b.rmin or r1 > b.rmax:
        r1 = src.next_fraction()
    r2 = src.next_fraction()
    return _continuous(r1, r2, b.k, b.offset, b.span)


def next_extended(
    src: UniformSource, p: ResolutionParam, x2_source: UniformSource | None = None
) -> ExtendedSample:
    """Draw one extended sample through the integer path.

    i1 is redrawn while it is 0 or m - 1, then one i2 is drawn (from
    ``x2_source`` when given).
    """
    m = src.modulus
    v.validate_modulus(m, p.w)
    rejected = 0
    i1 = src.next()
    while i1 == 0 or i1 == m - 1:
        rejected += 1
        i1 = src.next()
    i2 = (x2_source or src).next()
    j = compose_index(i1, i2, m)
    return ExtendedSample(j=j, value=index_to_unit(j, m, p), rejected=rejected)


class ExtendedGenerator:
    """Stream of extended-precision samples from one or two base sources.

    Bulk calls return exactly what repeated ``next_extended`` would: draws
    pulled ahead of need are carried to the next call. One owner at a time.

    Args:
        source (UniformSource): Produces i1 (and i2 unless ``x2_source``).
        p (ResolutionParam): Word size; the source modulus m must satisfy
            4 <= m <= 2^w.
        x2_source (UniformSource | None): Separate producer of i2 with the
            same modulus.
    """

    def __init__(
        self,
        source: UniformSource,
        p: ResolutionParam,
        x2_source: UniformSource | None = None,
    ):
        v.validate_modulus(source.modulus, p.w)
        if x2_source is not None and x2_source.modulus != source.modulus:
            raise InvalidRangeError(
                f"x2 source modulus {x2_source.modulus} differs from {source.modulus}."
            )
        self.source = source
        self.x2_source = x2_source
        self.p = p
        self.m = source.modulus
        self.accepted = 0
        self.rejected = 0
        self._carry = empty_draws(0)

    @classmethod
    def create(
        cls, kind: str = "mrg32k3a", seed: int = 0, w: int = 26, m: int | None = None
    ) -> Self:
        """Seeded generator over a base source reduced to modulus m (default 2^w)."""
        source = build_source(kind, seed=seed, w=w, m=m)
        return cls(source, ResolutionParam.from_bits(w))

    @property
    def rejection_fraction(self) -> float:
        """Rejected x1 draws over all consumed x1 draws so far."""
        total = self.accepted + self.rejected
        return self.rejected / total if total else 0.0

    def _draw(self, source: UniformSource, request: int) -> np.ndarray:
        left = source.remaining
        if left is not None:
            if left == 0:
                raise SourceExhaustedError(
                    "Source exhausted before the pair completed."
                )
            request = min(request, left)
        return source.fill(request)

    def _request(self, need: int) -> int:
        per_sample = self.m / (self.m - 2) + (1 if self.x2_source is None else 0)
        return int(need * per_sample * 1.05) + 2

    def _scan_single(self, out: np.ndarray) -> int:
        n = len(out)
        done = 0
        rejected_total = 0
        while True:
            produced, consumed, rejected = scan_pairs(
                self._carry, self.m, n - done, out, done
            )
            self._carry = self._carry[consumed:]
            done += produced
            rejected_total += rejected
            if done == n:
                return rejected_total
            more = self._draw(self.source, self._request(n - done))
            self._carry = np.concatenate((self._carry, more))

    def _scan_split(self, out: np.ndarray) -> int:
        n = len(out)
        done = 0
        rejected_total = 0
        while True:
            raw = self._carry
            positions = np.flatnonzero((raw >= 1) & (raw <= self.m - 2))[: n - done]
            if len(positions):
                count = len(positions)
                i1 = raw[positions]
                i2 = self.x2_source.fill(count)
                out[done : done + count] = (i1 - 1) * self.m + i2
                consumed = int(positions[-1]) + 1
                self._carry = raw[consumed:]
                done += count
                rejected_total += consumed - count
            if done == n:
                return rejected_total
            more = self._draw(self.source, self._request(n - done))
            self._carry = np.concatenate((self._carry, more))

    def indices(self, n: int) -> np.ndarray:
        """Lattice indices of the next n samples.

        The acceptance counters only move when all n samples are produced.
        """
        out = empty_draws(n)
        if n == 0:
            return out
        if self.x2_source is None:
            rejected = self._scan_single(out)
        else:
            rejected = self._scan_split(out)
        self.accepted += n
        self.rejected += rejected
        return out

    def values(self, n: int, open_interval: bool = False) -> np.ndarray:
        """The next n variates in [0; 1 - k'], or in [k'; 1] when ``open_interval``."""
        values = index_to_unit(self.indices(n), self.m, self.p)
        return open_unit(values, self.p) if open_interval else values

    def next(self) -> ExtendedSample:
        before = self.rejected
        j = int(self.indices(1)[0])
        return ExtendedSample(
            j=j, value=index_to_unit(j, self.m, self.p), rejected=self.rejected - before
        )
