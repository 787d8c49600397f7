import logging
import time

from pydantic import BaseModel, computed_field

from ..combiner import ExtendedGenerator
from ..sources import SourceKind, build_source

logger = logging.getLogger(__name__)

WARMUP = 10_000


class BenchResult(BaseModel):
    """Throughput of a base source and of the composition built on it."""

    source: str
    n: int
    raw_per_second: float
    extended_per_second: float

    @computed_field
    @property
    def ratio(self) -> float:
        """Raw draws per second over extended samples per second."""
        return self.raw_per_second / self.extended_per_second

    def lines(self) -> list[str]:
        return [
            f"raw source={self.source} n={self.n} samples_per_s={self.raw_per_second:.4g}",
            f"extended source={self.source} n={self.n} samples_per_s={self.extended_per_second:.4g}",
            f"ratio={self.ratio:.4g}",
        ]


def _rate(n: int, elapsed: float) -> float:
    return n / max(elapsed, 1e-9)


def run_benchmark(
    kind: str, seed: int = 0, w: int = 26, m: int | None = None, n: int = 1_000_000
) -> BenchResult:
    """Time n raw draws and n extended samples after a warm-up pass.

    Numbers are wall-clock and informational only.
    """
    source = build_source(kind, seed=seed, w=w, m=m)
    generator = ExtendedGenerator.create(kind, seed=seed, w=w, m=m)
    source.fill(WARMUP)
    generator.values(WARMUP)

    start = time.perf_counter()
    source.fill(n)
    raw = _rate(n, time.perf_counter() - start)

    start = time.perf_counter()
    generator.values(n)
    extended = _rate(n, time.perf_counter() - start)

    result = BenchResult(
        source=SourceKind(kind).value,
        n=n,
        raw_per_second=raw,
        extended_per_second=extended,
    )
    logger.info("bench %s: raw %.4g/s, extended %.4g/s", kind, raw, extended)
    return result
