import logging
from enum import Enum

from .base import UniformSource
from .counter import CounterSource
from .mrg32k3a import Mrg32k3a
from .reducer import reduce_to_modulus
from .seeding import Seed, seed_expand
from .xorshift import XorShift32

logger = logging.getLogger(__name__)


class SourceKind(str, Enum):
    MRG32K3A = "mrg32k3a"
    XORSHIFT32 = "xorshift32"
    COUNTER = "counter"


def build_source(
    kind: SourceKind | str, seed: int = 0, w: int = 26, m: int | None = None
) -> UniformSource:
    """Build a seeded source emitting uniform integers in [0; m - 1].

    Args:
        kind (SourceKind | str): Base generator.
        seed (int): 64-bit seed; (seed, kind) fixes the stream.
        w (int): Word size; m defaults to 2^w.
        m (int | None): Output modulus.

    Returns:
        UniformSource: The base generator, reduced to modulus m.
    """
    kind = SourceKind(kind)
    modulus = m if m is not None else 1 << w
    seed = Seed(value=seed).value
    if kind is SourceKind.COUNTER:
        start = seed_expand(seed, kind.value)[0]
        source: UniformSource = CounterSource(modulus, start=start)
    elif kind is SourceKind.XORSHIFT32:
        source = reduce_to_modulus(XorShift32.from_seed(seed), modulus)
    else:
        source = reduce_to_modulus(Mrg32k3a.from_seed(seed), modulus)
    logger.info("built %s source, seed=%d, modulus=%d", kind.value, seed, modulus)
    return source
