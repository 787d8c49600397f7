import numpy as np
import pytest
from src import ExtendedGenerator, ResolutionParam, TestReport
from src.splicerand.errors import InsufficientDataError
from src.splicerand.sources import ConstantSource, SequenceSource, build_source
from src.splicerand.stats import (
    chi_square_counts,
    chi_square_pvalue,
    chi_square_uniformity,
    kolmogorov_pvalue,
    ks_statistic,
    ks_uniformity,
    low_bits_uniformity,
)

# ------------------------
# p-values against published tables
# ------------------------


def test_chi_square_pvalue_table_point():
    assert chi_square_pvalue(3.841, 1) == pytest.approx(0.05, abs=1e-3)
    assert chi_square_pvalue(0.0, 10) == 1.0


def test_kolmogorov_pvalue_table_point():
    assert kolmogorov_pvalue(1.36) == pytest.approx(0.049, abs=2e-3)


# ------------------------
# reports
# ------------------------


def test_report_verdict_band():
    inside = TestReport(test_name="chi2", statistic=1.0, p_value=0.5, n=10)
    assert inside.verdict == "pass" and inside.passed
    edge = TestReport(test_name="chi2", statistic=1.0, p_value=0.001, n=10)
    assert edge.passed
    low = TestReport(test_name="chi2", statistic=1.0, p_value=1e-7, n=10)
    assert low.verdict == "fail"
    narrow = TestReport(
        test_name="ks", statistic=1.0, p_value=0.5, n=10, p_band=(0.6, 0.9)
    )
    assert not narrow.passed


def test_report_rejects_bad_values():
    with pytest.raises(ValueError):
        TestReport(test_name="chi2", statistic=1.0, p_value=1.5, n=10)
    with pytest.raises(ValueError, match="p-value band"):
        TestReport(
            test_name="chi2", statistic=1.0, p_value=0.5, n=10, p_band=(0.9, 0.1)
        )


# ------------------------
# chi-square
# ------------------------


def test_chi_square_counts_uniform():
    report = chi_square_counts([5, 5, 5, 5])
    assert report.statistic == 0.0
    assert report.p_value == pytest.approx(1.0)
    assert report.n == 20


def test_chi_square_counts_split():
    report = chi_square_counts([10, 0])
    assert report.statistic == 10.0
    assert report.p_value == pytest.approx(0.001565, abs=5e-5)


def test_chi_square_uniformity_exact_lattice():
    """Each lattice value once, bins dividing the lattice: statistic exactly 0."""
    samples = (np.arange(4096) + 0.5) / 4096
    report = chi_square_uniformity(samples, bins=64)
    assert report.statistic == 0.0
    assert report.test_name == "chi2"


def test_chi_square_uniformity_top_value_in_last_bin():
    samples = np.concatenate([(np.arange(39) + 0.5) / 40, [1.0]])
    report = chi_square_uniformity(samples, bins=4)
    assert report.statistic == 0.0


def test_chi_square_uniformity_insufficient_data():
    with pytest.raises(InsufficientDataError, match="too few"):
        chi_square_uniformity(np.full(100, 0.5), bins=1024)
    with pytest.raises(InsufficientDataError):
        chi_square_uniformity([], bins=2)


def test_chi_square_uniformity_rejects_out_of_range():
    with pytest.raises(ValueError, match="lie in"):
        chi_square_uniformity(np.full(100, 1.5), bins=2)


@pytest.mark.parametrize("bad", [np.nan, np.inf, -np.inf])
def test_uniformity_tests_reject_non_finite(bad):
    samples = np.linspace(0.0, 1.0, 200)
    samples[17] = bad
    with pytest.raises(ValueError, match="finite"):
        chi_square_uniformity(samples, bins=2)
    with pytest.raises(ValueError, match="finite"):
        ks_uniformity(samples)


# ------------------------
# Kolmogorov-Smirnov
# ------------------------


def test_ks_statistic_lattice_midpoints():
    n = 1000
    samples = np.arange(n) / n + 1 / (2 * n)
    assert ks_statistic(samples) == pytest.approx(1 / (2 * n))
    report = ks_uniformity(samples)
    assert report.p_value == pytest.approx(1.0)
    # a fit this perfect is itself suspicious
    assert report.verdict == "fail"


def test_ks_point_mass_fails():
    report = ks_uniformity(np.full(10_000, 0.5))
    assert report.statistic == pytest.approx(0.5)
    assert report.verdict == "fail"


def test_ks_insufficient_data():
    with pytest.raises(InsufficientDataError, match="at least 100"):
        ks_uniformity(np.linspace(0, 1, 99))


# ------------------------
# low bits of the lattice index
# ------------------------


def test_low_bits_exhaustive_lattice():
    p = ResolutionParam.from_bits(3)
    report = low_bits_uniformity(np.arange(48), p, bins=8, min_expected=5)
    assert report.statistic == 0.0
    assert report.test_name == "lowbits"


def test_low_bits_accepts_samples():
    p = ResolutionParam.from_bits(3)
    every_pair = [i for i1 in range(1, 7) for i2 in range(8) for i in (i1, i2)]
    gen = ExtendedGenerator(SequenceSource(every_pair, 8), p)
    samples = [gen.next() for _ in range(48)]
    report = low_bits_uniformity(samples, p, bins=8, min_expected=5)
    assert report.statistic == 0.0


def test_low_bits_constant_x2_fails():
    p = ResolutionParam.from_bits(26)
    gen = ExtendedGenerator(
        build_source("mrg32k3a", seed=3, w=26),
        p,
        x2_source=ConstantSource(12345, p.grid_size),
    )
    report = low_bits_uniformity(gen.indices(10_000), p, bins=256)
    assert report.p_value < 1e-6
    assert not report.passed


def test_low_bits_bins_must_be_power_of_two():
    p = ResolutionParam.from_bits(3)
    with pytest.raises(ValueError, match="power of two"):
        low_bits_uniformity(np.arange(48), p, bins=6)
    with pytest.raises(ValueError, match="power of two"):
        low_bits_uniformity(np.arange(48), p, bins=16)


def test_low_bits_insufficient_data():
    p = ResolutionParam.from_bits(3)
    with pytest.raises(InsufficientDataError):
        low_bits_uniformity(np.arange(48), p, bins=8)
