from pydantic import BaseModel, ConfigDict, Field

from .kernels import MASK32, MRG_M1, MRG_M2

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15


class Seed(BaseModel):
    """A 64-bit unsigned seed. Every value is allowed."""

    model_config = ConfigDict(frozen=True)

    value: int = Field(default=0, ge=0, le=MASK64)


def splitmix64(state: int) -> tuple[int, int]:
    """One splitmix64 step.

    Returns:
        tuple[int, int]: The advanced state and the mixed 64-bit output.
    """
    state = (state + GOLDEN_GAMMA) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return state, z ^ (z >> 31)


def _words(state: int, count: int, modulus: int) -> tuple[int, list[int]]:
    # redraw the whole component until it is not all zero
    while True:
        words = []
        for _ in range(count):
            state, out = splitmix64(state)
            words.append((out >> 32) % modulus)
        if any(words):
            return state, words


def seed_expand(seed: Seed | int, kind: str) -> list[int]:
    """Expand a 64-bit seed into the full state vector of a generator.

    Args:
        seed (Seed | int): The seed.
        kind (str): "mrg32k3a", "xorshift32" or "counter".

    Returns:
        list[int]: Six words for MRG32k3a (neither component all zero), one
            nonzero word for xorshift32, the seed itself for the counter.
    """
    value = seed.value if isinstance(seed, Seed) else Seed(value=seed).value
    if kind == "mrg32k3a":
        state, first = _words(value, 3, MRG_M1)
        _, second = _words(state, 3, MRG_M2)
        return first + second
    if kind == "xorshift32":
        state = value
        while True:
            state, out = splitmix64(state)
            if out & MASK32:
                return [out & MASK32]
    if kind == "counter":
        return [value]
    raise ValueError(f"Unknown source kind: {kind}")


def derive_seed(seed: int, stream: int) -> int:
    """Seed of an independent stream, e.g. one shard of a parallel run."""
    _, out = splitmix64((seed ^ (stream * GOLDEN_GAMMA)) & MASK64)
    return out
