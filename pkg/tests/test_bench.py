import pytest
from src import ExtendedGenerator
from src.splicerand.cli import BenchResult, run_benchmark
from src.splicerand.sources import build_source


def test_run_benchmark_shape():
    result = run_benchmark("counter", w=8, n=5000)
    assert result.source == "counter"
    assert result.n == 5000
    assert result.raw_per_second > 0
    assert result.extended_per_second > 0
    assert result.ratio > 0
    assert len(result.lines()) == 3


def test_bench_result_ratio():
    result = BenchResult(
        source="mrg32k3a", n=10, raw_per_second=300.0, extended_per_second=100.0
    )
    assert result.ratio == 3.0
    assert result.lines()[-1] == "ratio=3"


@pytest.mark.benchmark
def test_raw_mrg32k3a_benchmark(benchmark):
    source = build_source("mrg32k3a", seed=1, w=26)
    benchmark(source.fill, 100_000)


@pytest.mark.benchmark
def test_extended_mrg32k3a_benchmark(benchmark):
    generator = ExtendedGenerator.create("mrg32k3a", seed=1, w=26)
    benchmark(generator.values, 100_000)
