from ..combiner import ExtendedGenerator, ResolutionParam
from ..sources import UniformSource


def rejection_rate(
    src: UniformSource, n: int, x2_source: UniformSource | None = None
) -> float:
    """Fraction of x1 draws rejected while composing n outputs.

    Args:
        src (UniformSource): Integer source of x1 (and x2 unless given).
        n (int): Number of composed outputs, at least 1.
        x2_source (UniformSource | None): Separate producer of x2.

    Returns:
        float: Rejected x1 draws divided by all x1 draws consumed.
    """
    if n < 1:
        raise ValueError("Need at least one composed output.")
    w = max(2, (src.modulus - 1).bit_length())
    generator = ExtendedGenerator(
        src, ResolutionParam.from_bits(w), x2_source=x2_source
    )
    generator.indices(n)
    return generator.rejection_fraction
