import numpy as np
import pytest

from noneq_spectra.core.system import LevelSystem
from noneq_spectra.errors.base import ArgumentError, ConfigurationError
from noneq_spectra.utils.grid import default_grid, optical_transitions


def test_optical_transitions_sanity(lambda_levels):
    # Act & Assert
    assert optical_transitions(lambda_levels) == pytest.approx([0.7, 0.8])


def test_default_grid_covers_transitions_sanity(lambda_levels):
    # Act
    grid = default_grid(lambda_levels, 0.004, points=101, padding=10.0)

    # Assert
    assert grid.size == 101
    assert grid[0] == pytest.approx(0.66)
    assert grid[-1] == pytest.approx(0.84)
    assert np.all(np.diff(grid) > 0)


@pytest.mark.parametrize(["width", "points"], [[0.0, 10], [-1.0, 10], [0.01, 0]])
def test_default_grid_rejects_bad_arguments_edge_case(lambda_levels, width, points):
    # Act & Assert
    with pytest.raises(ArgumentError):
        default_grid(lambda_levels, width, points)


def test_default_grid_without_transitions_edge_case():
    # Arrange
    dark = LevelSystem.from_transitions(("a", "b"), (0.0, 1.0))

    # Act & Assert
    with pytest.raises(ConfigurationError):
        default_grid(dark, 0.01)
