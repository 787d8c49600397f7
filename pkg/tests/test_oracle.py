import pytest
from src import OracleResult, ResolutionParam, exhaustive_oracle
from src.splicerand.errors import InvalidRangeError, OracleSizeError
from .data import Data


@pytest.mark.parametrize("m,w,distinct,lo,hi", Data.oracle_cases)
def test_exhaustive_oracle_examples(m, w, distinct, lo, hi):
    result = exhaustive_oracle(m, ResolutionParam.from_bits(w))
    assert result.distinct_count == distinct == (m - 2) * m
    assert result.max_multiplicity == 1
    assert result.min_value == lo
    assert result.max_value == hi
    assert result.uniform


def test_exhaustive_oracle_summary_line():
    result = exhaustive_oracle(8, ResolutionParam.from_bits(3))
    assert result.summary() == Data.oracle_line


@pytest.mark.parametrize("m", range(4, 65))
def test_exhaustive_oracle_uniform_for_small_ranges(m):
    """Every compatible word size maps m x m pairs uniformly onto [0; 1 - k']."""
    for w in range(max(2, (m - 1).bit_length()), 27):
        p = ResolutionParam.from_bits(w)
        result = exhaustive_oracle(m, p)
        assert result.uniform, f"m={m} w={w}: {result.summary()}"
        assert result.min_value == 0.0
        assert result.max_value == 1 - p.k_prime


def test_exhaustive_oracle_guards():
    with pytest.raises(InvalidRangeError):
        exhaustive_oracle(3, ResolutionParam.from_bits(3))
    with pytest.raises(InvalidRangeError):
        exhaustive_oracle(9, ResolutionParam.from_bits(3))
    with pytest.raises(OracleSizeError, match="m <= 4096"):
        exhaustive_oracle(4097, ResolutionParam.from_bits(13))


def test_oracle_result_uniform_flag():
    collided = OracleResult(
        m=8, w=3, distinct_count=47, min_value=0.0, max_value=0.9, max_multiplicity=2
    )
    assert not collided.uniform
    assert collided.summary().endswith("uniform=false")
    assert collided.model_dump()["uniform"] is False
