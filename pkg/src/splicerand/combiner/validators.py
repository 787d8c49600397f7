from typing import Any

import numpy as np

from ..errors import InvalidRangeError, PreconditionError

MIN_WORD_SIZE = 2
MAX_WORD_SIZE = 26
MIN_GRID_POINTS = 4


def validate_word_size(w: int):
    """Validate that the word size keeps the composed fraction inside 52 bits."""
    if not isinstance(w, int) or not MIN_WORD_SIZE <= w <= MAX_WORD_SIZE:
        raise InvalidRangeError(
            f"Word size must be an integer in [{MIN_WORD_SIZE}; {MAX_WORD_SIZE}], got {w}."
        )


def validate_grid(lo: float, hi: float, step: float) -> int:
    """Validate a grid and return its number of points.

    Args:
        lo (float): Lower bound, on the grid.
        hi (float): Upper bound, on the grid.
        step (float): Grid spacing.

    Returns:
        int: The point count m = (hi - lo) / step + 1.

    Raises:
        InvalidRangeError: If the span is negative, off-grid, or has fewer than
            four points.
    """
    if not step > 0:
        raise InvalidRangeError("Grid step must be positive.")
    intervals = (hi - lo) / step
    if intervals < 0 or intervals != int(intervals):
        raise InvalidRangeError(
            f"Range [{lo}; {hi}] is not a whole number of steps of {step}."
        )
    m = int(intervals) + 1
    if m < MIN_GRID_POINTS:
        raise InvalidRangeError(
            f"Range must hold at least {MIN_GRID_POINTS} grid points, got m={m}."
        )
    return m


def validate_modulus(m: int, w: int):
    """Validate that m grid points of step 2^-w fit in the unit interval."""
    if m < MIN_GRID_POINTS:
        raise InvalidRangeError(
            f"Range must hold at least {MIN_GRID_POINTS} grid points, got m={m}."
        )
    if m > 1 << w:
        raise InvalidRangeError(
            f"m={m} points of step 2^-{w} exceed the unit interval."
        )


def validate_accepted(x1: Any, lo: Any, hi: Any):
    """Validate that no x1 sits on a range endpoint (the rejected values)."""
    rejected = np.logical_or(np.equal(x1, lo), np.equal(x1, hi))
    if np.any(rejected):
        raise PreconditionError(
            "x1 on a range endpoint is rejected and cannot be mapped."
        )
    outside = np.logical_or(np.less(x1, lo), np.greater(x1, hi))
    if np.any(outside):
        raise PreconditionError(f"x1 lies outside [{lo}; {hi}].")


def validate_pair_index(i1: int, i2: int, m: int):
    """Validate an integer pair against the accepted band."""
    if not 1 <= i1 <= m - 2:
        raise PreconditionError(f"i1={i1} is outside the accepted band [1; {m - 2}].")
    if not 0 <= i2 <= m - 1:
        raise PreconditionError(f"i2={i2} is outside [0; {m - 1}].")


def validate_lattice_index(j: Any, m: int):
    """Validate lattice indices against {0, ..., (m-2)m - 1}."""
    if np.any(np.less(j, 0)) or np.any(np.greater(j, (m - 2) * m - 1)):
        raise PreconditionError(f"Lattice index out of range [0; {(m - 2) * m - 1}].")
