import math

import numpy as np
import pytest

from noneq_spectra.core.density import (
    DensityMatrix,
    check_state_labels,
    density_matrix,
    maximally_coherent_state,
    population_state,
    thermal_state,
)
from noneq_spectra.errors.base import (
    ArgumentError,
    ConfigurationError,
    InvalidDensityMatrix,
    LabelError,
)
from tests.models.systems import ROOM_TEMPERATURE, lambda_system
from tests.unit.assertions import assert_valid_density_matrix


def test_thermal_state_boltzmann_ratios_sanity(thermal_levels):
    # Act
    rho = thermal_state(thermal_levels)

    # Assert
    assert_valid_density_matrix(rho)
    assert rho[("b", "b")].real / rho[("a", "a")].real == pytest.approx(
        math.exp(-0.01 / ROOM_TEMPERATURE), rel=1e-12
    )
    assert rho[("b", "b")].real / rho[("a", "a")].real == pytest.approx(0.6797, abs=1e-4)
    assert rho[("c", "c")].real < 1e-15
    assert rho.purity() < 1.0


def test_thermal_state_without_temperature_edge_case(lambda_levels):
    # Act & Assert
    with pytest.raises(ConfigurationError):
        thermal_state(lambda_levels)


@pytest.mark.parametrize(
    "builder",
    [
        lambda system: population_state(system, "b"),
        lambda system: maximally_coherent_state(system, "a", "b"),
        lambda system: maximally_coherent_state(system, "b", "c"),
    ],
)
def test_pure_states_sanity(lambda_levels, builder):
    # Act
    rho = builder(lambda_levels)

    # Assert
    assert_valid_density_matrix(rho)
    assert rho.purity() == pytest.approx(1.0)


def test_maximally_coherent_state_elements_sanity(lambda_levels):
    # Act
    rho = maximally_coherent_state(lambda_levels, "a", "b")

    # Assert
    for pair in [("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")]:
        assert rho[pair] == 0.5
    assert rho[("c", "c")] == 0.0
    assert len(rho.nonzero_elements()) == 4


def test_maximally_coherent_state_same_level_edge_case(lambda_levels):
    # Act & Assert
    with pytest.raises(ArgumentError):
        maximally_coherent_state(lambda_levels, "a", "a")


def test_population_and_coherence_parts_sum_sanity(lambda_levels):
    # Arrange
    rho = maximally_coherent_state(lambda_levels, "a", "b")

    # Act
    populations = rho.population_part()
    coherences = rho.coherence_part()

    # Assert
    assert_valid_density_matrix(populations)
    assert coherences.normalization == 0.0
    assert np.array_equal(populations.matrix + coherences.matrix, rho.matrix)
    assert not np.any(np.diag(coherences.matrix))


@pytest.mark.parametrize(
    "matrix",
    [
        [[0.5, 0.3], [0.1, 0.5]],
        [[0.7, 0.0], [0.0, 0.7]],
        [[1.2, 0.0], [0.0, -0.2]],
        [[0.5, 0.0], [0.0, np.nan]],
        [[1.0, 0.0, 0.0], [0.0, 0.0, 0.0], [0.0, 0.0, 0.0]],
    ],
)
def test_density_matrix_invariants_edge_case(matrix):
    # Act & Assert
    with pytest.raises(InvalidDensityMatrix):
        DensityMatrix(labels=("a", "b"), matrix=matrix)


def test_density_matrix_is_read_only_sanity(lambda_levels):
    # Arrange
    rho = population_state(lambda_levels, "a")

    # Act & Assert
    with pytest.raises(ValueError):
        rho.matrix[0, 0] = 0.0


def test_density_matrix_explicit_normalization_sanity(lambda_levels):
    # Arrange
    matrix = np.diag([0.2, 0.2, 0.0])

    # Act
    rho = density_matrix(lambda_levels, matrix, normalization=0.4)

    # Assert
    assert_valid_density_matrix(rho, normalization=0.4)


def test_density_matrix_labels_edge_case(lambda_levels):
    # Arrange
    other = DensityMatrix(labels=("x", "y", "z"), matrix=np.diag([1.0, 0.0, 0.0]))

    # Act & Assert
    with pytest.raises(ArgumentError):
        check_state_labels(lambda_levels, other)
    with pytest.raises(LabelError):
        other[("a", "a")]
