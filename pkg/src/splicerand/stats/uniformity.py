import logging
from typing import Iterable

import numpy as np
from scipy.special import gammaincc, kolmogorov

from ..combiner import ExtendedSample, ResolutionParam
from ..errors import InsufficientDataError
from .report import DEFAULT_P_BAND, TestReport

logger = logging.getLogger(__name__)

MIN_EXPECTED_PER_BIN = 10.0
MIN_KS_SAMPLES = 100


def _as_array(samples: Iterable[float] | np.ndarray) -> np.ndarray:
    if isinstance(samples, np.ndarray):
        return samples.astype(np.float64, copy=False)
    return np.fromiter(samples, dtype=np.float64)


def _check_unit(x: np.ndarray):
    if not np.all(np.isfinite(x) & (x >= 0.0) & (x <= 1.0)):
        raise ValueError("Samples must be finite and lie in [0; 1].")


def _lattice_indices(
    samples: Iterable[ExtendedSample | int] | np.ndarray,
) -> np.ndarray:
    if isinstance(samples, np.ndarray):
        return samples.astype(np.int64, copy=False)
    return np.fromiter(
        (s.j if isinstance(s, ExtendedSample) else int(s) for s in samples),
        dtype=np.int64,
    )


def chi_square_pvalue(statistic: float, dof: int) -> float:
    """Upper tail of the chi-square distribution, Q(dof/2, statistic/2)."""
    return float(np.clip(gammaincc(dof / 2.0, statistic / 2.0), 0.0, 1.0))


def kolmogorov_pvalue(t: float) -> float:
    """Asymptotic P(sqrt(n) D > t) from the Kolmogorov distribution."""
    return float(np.clip(kolmogorov(t), 0.0, 1.0))


def chi_square_counts(
    counts: Iterable[int] | np.ndarray,
    p_band: tuple[float, float] = DEFAULT_P_BAND,
    test_name: str = "chi2",
) -> TestReport:
    """Pearson statistic of binned counts against equal expectation.

    Raises:
        InsufficientDataError: If there are no counts.
    """
    counts = np.asarray(counts, dtype=np.float64)
    if counts.ndim != 1 or len(counts) < 2:
        raise ValueError("Need at least two bins.")
    n = counts.sum()
    if n <= 0:
        raise InsufficientDataError("No samples to test.")
    expected = n / len(counts)
    statistic = float(np.sum((counts - expected) ** 2) / expected)
    report = TestReport(
        test_name=test_name,
        statistic=statistic,
        p_value=chi_square_pvalue(statistic, len(counts) - 1),
        n=int(n),
        p_band=p_band,
    )
    logger.info(
        "%s: statistic=%.6g p=%.6g %s",
        test_name,
        statistic,
        report.p_value,
        report.verdict,
    )
    return report


def chi_square_uniformity(
    samples: Iterable[float] | np.ndarray,
    bins: int = 1024,
    p_band: tuple[float, float] = DEFAULT_P_BAND,
    min_expected: float = MIN_EXPECTED_PER_BIN,
) -> TestReport:
    """Chi-square test of reals in [0; 1] against the uniform distribution.

    A value of exactly 1 (open-interval output) falls in the top bin.

    Raises:
        InsufficientDataError: If n < min_expected * bins.
        ValueError: If a sample is NaN, infinite or outside [0; 1].
    """
    x = _as_array(samples)
    if bins < 2:
        raise ValueError("Need at least two bins.")
    if len(x) < min_expected * bins:
        raise InsufficientDataError(
            f"{len(x)} samples is too few for {bins} bins (need {min_expected * bins:g})."
        )
    _check_unit(x)
    codes = np.minimum((x * bins).astype(np.int64), bins - 1)
    return chi_square_counts(np.bincount(codes, minlength=bins), p_band, "chi2")


def ks_statistic(samples: Iterable[float] | np.ndarray) -> float:
    """Largest gap D between the empirical CDF and the uniform CDF."""
    x = np.sort(_as_array(samples))
    n = len(x)
    upper = np.arange(1, n + 1) / n - x
    lower = x - np.arange(0, n) / n
    return float(max(upper.max(), lower.max()))


def ks_uniformity(
    samples: Iterable[float] | np.ndarray,
    p_band: tuple[float, float] = DEFAULT_P_BAND,
) -> TestReport:
    """One-sample Kolmogorov-Smirnov test against U(0, 1).

    Raises:
        InsufficientDataError: If fewer than 100 samples are given.
        ValueError: If a sample is NaN, infinite or outside [0; 1].
    """
    x = _as_array(samples)
    n = len(x)
    if n < MIN_KS_SAMPLES:
        raise InsufficientDataError(
            f"Kolmogorov-Smirnov needs at least {MIN_KS_SAMPLES} samples, got {n}."
        )
    _check_unit(x)
    d = ks_statistic(x)
    report = TestReport(
        test_name="ks",
        statistic=d,
        p_value=kolmogorov_pvalue(np.sqrt(n) * d),
        n=n,
        p_band=p_band,
    )
    logger.info("ks: D=%.6g p=%.6g %s", d, report.p_value, report.verdict)
    return report


def low_bits_uniformity(
    samples: Iterable[ExtendedSample | int] | np.ndarray,
    p: ResolutionParam,
    bins: int = 256,
    p_band: tuple[float, float] = DEFAULT_P_BAND,
    min_expected: float = MIN_EXPECTED_PER_BIN,
) -> TestReport:
    """Chi-square test of the low w bits of the lattice index.

    Those bits carry x2, the half of the fraction below the first draw's
    precision. The top log2(bins) of them are binned.

    Args:
        samples: ExtendedSample objects or lattice indices j.
        p (ResolutionParam): Word size the samples were built with.
        bins (int): Power of two, at most 2^w.
    """
    if bins < 2 or bins & (bins - 1) or bins > p.grid_size:
        raise ValueError(f"bins must be a power of two in [2; 2^{p.w}], got {bins}.")
    j = _lattice_indices(samples)
    if len(j) < min_expected * bins:
        raise InsufficientDataError(
            f"{len(j)} samples is too few for {bins} bins (need {min_expected * bins:g})."
        )
    shift = p.w - (bins.bit_length() - 1)
    codes = (j & (p.grid_size - 1)) >> shift
    return chi_square_counts(np.bincount(codes, minlength=bins), p_band, "lowbits")
