import numpy as np
import pytest
from src import validators
from src.splicerand.errors import InvalidRangeError, PreconditionError


def test_validate_word_size_bounds():
    """Word sizes 2..26 keep the composed fraction within 52 bits."""
    validators.validate_word_size(2)
    validators.validate_word_size(26)
    for w in (1, 27, 0, -3):
        with pytest.raises(InvalidRangeError, match="Word size"):
            validators.validate_word_size(w)


def test_validate_word_size_rejects_non_integer():
    with pytest.raises(InvalidRangeError):
        validators.validate_word_size(3.0)


def test_validate_grid_counts_points():
    assert validators.validate_grid(0.0, 7 / 8, 1 / 8) == 8
    assert validators.validate_grid(0.0, 5.0, 1.0) == 6


def test_validate_grid_rejects_fewer_than_four_points():
    """Three points leave a single accepted x1; the construction needs m >= 4."""
    with pytest.raises(InvalidRangeError, match="at least 4 grid points, got m=3"):
        validators.validate_grid(0.0, 2.0, 1.0)


def test_validate_grid_rejects_off_grid_and_reversed():
    with pytest.raises(InvalidRangeError, match="whole number of steps"):
        validators.validate_grid(0.0, 0.3, 1 / 8)
    with pytest.raises(InvalidRangeError, match="whole number of steps"):
        validators.validate_grid(1.0, 0.0, 1 / 8)
    with pytest.raises(InvalidRangeError, match="step must be positive"):
        validators.validate_grid(0.0, 1.0, 0.0)


def test_validate_modulus():
    validators.validate_modulus(4, 2)
    validators.validate_modulus(1 << 26, 26)
    with pytest.raises(InvalidRangeError, match="m=3"):
        validators.validate_modulus(3, 3)
    with pytest.raises(InvalidRangeError, match="exceed the unit interval"):
        validators.validate_modulus(9, 3)


def test_validate_accepted_rejects_endpoints():
    """x1 on either endpoint is the rejected case."""
    validators.validate_accepted(1 / 8, 0.0, 7 / 8)
    with pytest.raises(PreconditionError, match="endpoint"):
        validators.validate_accepted(0.0, 0.0, 7 / 8)
    with pytest.raises(PreconditionError, match="endpoint"):
        validators.validate_accepted(7 / 8, 0.0, 7 / 8)
    with pytest.raises(PreconditionError, match="outside"):
        validators.validate_accepted(1.5, 0.0, 7 / 8)


def test_validate_accepted_arrays():
    validators.validate_accepted(np.array([0.125, 0.5, 0.75]), 0.0, 0.875)
    with pytest.raises(PreconditionError):
        validators.validate_accepted(np.array([0.125, 0.875]), 0.0, 0.875)


def test_validate_pair_and_lattice_index():
    validators.validate_pair_index(1, 0, 8)
    validators.validate_pair_index(6, 7, 8)
    with pytest.raises(PreconditionError, match="accepted band"):
        validators.validate_pair_index(7, 0, 8)
    with pytest.raises(PreconditionError, match="accepted band"):
        validators.validate_pair_index(0, 0, 8)
    with pytest.raises(PreconditionError, match="outside"):
        validators.validate_pair_index(1, 8, 8)

    validators.validate_lattice_index(47, 8)
    validators.validate_lattice_index(np.arange(48), 8)
    with pytest.raises(PreconditionError):
        validators.validate_lattice_index(48, 8)
    with pytest.raises(PreconditionError):
        validators.validate_lattice_index(-1, 8)


def test_errors_are_value_errors():
    """Callers can catch bad input with plain ValueError."""
    with pytest.raises(ValueError):
        validators.validate_modulus(2, 3)
