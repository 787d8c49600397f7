"""Composition of two w-bit draws into one 2w-bit uniform variate.

Every function accepts python floats or numpy arrays. Pass ``exact=True``
with scalar inputs to evaluate in rationals instead of binary64.
"""

import math
from fractions import Fraction
from typing import Any

import numpy as np

from . import validators as v
from ..errors import InvalidRangeError
from .params import GridRange, ResolutionParam

Bounds = GridRange | tuple[float, float]


def _bounds(r: Bounds, exact: bool = False) -> tuple[Any, Any]:
    lo, hi = (r.lo, r.hi) if isinstance(r, GridRange) else r
    if exact:
        return Fraction(lo), Fraction(hi)
    return lo, hi


def _step(p: ResolutionParam, exact: bool) -> Any:
    return p.k_exact if exact else p.k


def _trunc(x: Any) -> Any:
    # round toward zero; arguments are non-negative on every accepted path
    if isinstance(x, Fraction):
        return Fraction(math.trunc(x))
    return np.trunc(x)


def _plain(x: Any) -> Any:
    if isinstance(x, np.ndarray) and x.ndim > 0:
        return x
    if isinstance(x, Fraction):
        return x
    return float(x)


def _as_exact(*xs: Any) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in xs)


def combine(x1: Any, x2: Any, p: ResolutionParam, exact: bool = False) -> Any:
    """z = x1 + k*x2, exact for w-bit grid inputs."""
    if exact:
        x1, x2 = _as_exact(x1, x2)
    return _plain(x1 + _step(p, exact) * x2)


def uniform_interval(
    r1: Bounds, r2: Bounds, p: ResolutionParam, exact: bool = False
) -> tuple[Any, Any]:
    """Interval [a0 + k*b; a + k*b0] on which the density of z is constant."""
    a0, a = _bounds(r1, exact)
    b0, b = _bounds(r2, exact)
    k = _step(p, exact)
    return a0 + k * b, a + k * b0


def is_accepted(x1: Any, r1: Bounds) -> Any:
    """False exactly when x1 sits on either endpoint of its range."""
    lo, hi = _bounds(r1)
    accepted = np.logical_and(np.not_equal(x1, lo), np.not_equal(x1, hi))
    return accepted if np.ndim(accepted) else bool(accepted)


def rejection_bounds(r1: Bounds, r2: Bounds, p: ResolutionParam) -> tuple[float, float]:
    """Continuous rejection limits: x1 outside them is dropped."""
    a0, a = _bounds(r1)
    b0, b = _bounds(r2)
    return a0 + p.k * (b - b0), a - p.k * (b - b0)


def _continuous(x1: Any, x2: Any, k: Any, offset: Any, span: Any) -> Any:
    return (x1 + k * x2 - offset) / span


def normalize_continuous(
    x1: Any,
    x2: Any,
    r1: Bounds,
    r2: Bounds,
    p: ResolutionParam,
    exact: bool = False,
) -> Any:
    """Map z from its uniform interval onto [0; 1].

    Raises:
        InvalidRangeError: If a - a0 - k(b - b0) is not positive.
    """
    a0, a = _bounds(r1, exact)
    b0, b = _bounds(r2, exact)
    k = _step(p, exact)
    if exact:
        x1, x2 = _as_exact(x1, x2)
    span = a - a0 - k * (b - b0)
    if span <= 0:
        raise InvalidRangeError(
            "Degenerate range: a - a0 - k(b - b0) must be positive."
        )
    return _plain(_continuous(x1, x2, k, a0 + k * b, span))


def normalize_discrete(
    x1: Any,
    x2: Any,
    r1: Bounds,
    r2: Bounds,
    p: ResolutionParam,
    exact: bool = False,
) -> Any:
    """Map an accepted grid pair onto [0; 1 - k'].

    (a0 + k, b0) lands on exactly 0 and (a - k, b) on exactly 1 - k'.

    Raises:
        PreconditionError: If x1 is a rejected endpoint or outside its range.
    """
    a0, a = _bounds(r1, exact)
    b0, b = _bounds(r2, exact)
    k = _step(p, exact)
    if exact:
        x1, x2 = _as_exact(x1, x2)
    v.validate_accepted(x1, a0, a)
    numerator = _trunc((x1 - a0 - k) / k) + x2 - b0
    denominator = _trunc((a - a0 - 2 * k) / k) + b - b0
    return _plain(numerator / denominator * (1 - k * k))


def normalize_unit(x1: Any, x2: Any, p: ResolutionParam, exact: bool = False) -> Any:
    """Single-generator case, both draws on {0, k, ..., 1 - k}.

    Same value as ``normalize_discrete`` with a0 = b0 = 0 and a = b = 1 - k.
    """
    k = _step(p, exact)
    if exact:
        x1, x2 = _as_exact(x1, x2)
    v.validate_accepted(x1, 0, 1 - k)
    return _plain((1 - k * k) * (_trunc(x1 / k) + x2 - 1) / (_trunc(1 / k) - 2 - k))


def lattice_size(m: int) -> int:
    """Number of accepted pairs, (m - 2) * m."""
    return (m - 2) * m


def compose_index(i1: int, i2: int, m: int) -> int:
    """Encode an accepted integer pair as j = (i1 - 1) * m + i2."""
    v.validate_pair_index(i1, i2, m)
    return (i1 - 1) * m + i2


def decode_index(j: Any, m: int) -> tuple[Any, Any]:
    return j // m + 1, j % m


def index_to_unit(j: Any, m: int, p: ResolutionParam, exact: bool = False) -> Any:
    """Value of the accepted pair encoded by j, strictly increasing in j.

    Numerator and denominator of the discrete map are formed as integers,
    so binary64 evaluation costs one division and one scaling.
    """
    v.validate_modulus(m, p.w)
    v.validate_lattice_index(j, m)
    i1, i2 = decode_index(j, m)
    numerator = (i1 - 1) * p.grid_size + i2
    denominator = (m - 3) * p.grid_size + (m - 1)
    if exact:
        return Fraction(int(numerator), denominator) * (1 - p.k_exact**2)
    return _plain(numerator / denominator * (1.0 - p.k_prime))


def open_unit(z: Any, p: ResolutionParam) -> Any:
    """1 - z, moving the support to [k'; 1] so zero is never produced."""
    return _plain(1 - z)
