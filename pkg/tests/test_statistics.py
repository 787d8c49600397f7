"""Large-sample runs of the test battery on the MRG32k3a-composed stream."""

import numpy as np
import pytest
from src import ExtendedGenerator, ResolutionParam
from src.splicerand.sources import ConstantSource, build_source
from src.splicerand.stats import (
    chi_square_uniformity,
    ks_uniformity,
    low_bits_uniformity,
)

SEED = 20261019


@pytest.fixture(scope="module")
def generator() -> ExtendedGenerator:
    return ExtendedGenerator.create("mrg32k3a", seed=SEED, w=26)


@pytest.mark.slow
def test_chi_square_ten_million(generator):
    report = chi_square_uniformity(generator.values(10_000_000), bins=1024)
    assert report.passed, report


@pytest.mark.slow
def test_ks_one_million(generator):
    report = ks_uniformity(generator.values(1_000_000))
    assert report.passed, report


@pytest.mark.slow
def test_low_bits_one_million(generator):
    report = low_bits_uniformity(generator.indices(1_000_000), generator.p, bins=256)
    assert report.passed, report


@pytest.mark.slow
def test_raw_mrg_draws_pass_chi_square():
    raw = build_source("mrg32k3a", seed=SEED, w=26).fill(1_000_000)
    report = chi_square_uniformity(raw / float(1 << 26), bins=1024)
    assert report.passed, report


@pytest.mark.slow
def test_constant_x2_negative_control():
    p = ResolutionParam.from_bits(26)
    degenerate = ExtendedGenerator(
        build_source("mrg32k3a", seed=SEED, w=26),
        p,
        x2_source=ConstantSource(0, p.grid_size),
    )
    report = low_bits_uniformity(degenerate.indices(1_000_000), p, bins=256)
    assert report.p_value < 1e-6


@pytest.mark.slow
def test_open_interval_one_million():
    p = ResolutionParam.from_bits(26)
    values = ExtendedGenerator.create("mrg32k3a", seed=SEED).values(
        1_000_000, open_interval=True
    )
    assert values.min() >= p.k_prime
    assert not np.any(values == 0.0)
    assert values.max() <= 1.0


def test_determinism_binary_output():
    a = ExtendedGenerator.create("mrg32k3a", seed=SEED).values(100_000)
    b = ExtendedGenerator.create("mrg32k3a", seed=SEED).values(100_000)
    assert a.tobytes() == b.tobytes()
