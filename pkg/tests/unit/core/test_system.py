import math

import numpy as np
import pytest

from noneq_spectra.core.system import LevelSystem, bohr_frequency
from noneq_spectra.errors.base import ConfigurationError, LabelError
from tests.models.systems import ROOM_TEMPERATURE, lambda_system


def test_level_system_from_transitions_sanity():
    # Arrange & Act
    system = lambda_system()

    # Assert
    assert system.labels == ("a", "b", "c")
    assert system.size == 3
    assert system.dipole("a", "c") == 1.0
    assert system.dipole("c", "a") == 1.0
    assert system.dipole("a", "b") == 0.0
    assert bohr_frequency(system, "c", "b") == pytest.approx(0.7)


def test_level_system_total_dipole_is_hermitian_sanity():
    # Arrange
    system = LevelSystem.from_transitions(
        ("g", "e"), (0.0, 1.0), dipoles={("g", "e"): 0.3 + 0.4j}
    )

    # Act
    mu = system.total_dipole()

    # Assert
    assert np.allclose(mu, mu.conj().T)
    assert mu[0, 1] == 0.3 + 0.4j
    assert mu[1, 0] == 0.3 - 0.4j


def test_level_system_arrays_are_read_only_sanity():
    # Arrange
    system = lambda_system()

    # Act & Assert
    with pytest.raises(ValueError):
        system.dipole_lowering[0, 2] = 5.0


@pytest.mark.parametrize(
    "kwargs",
    [
        {"labels": ("a",), "energies": (0.0,)},
        {"labels": ("a", "a"), "energies": (0.0, 1.0)},
        {"labels": ("a", "b"), "energies": (0.0,)},
        {"labels": ("a", "b"), "energies": (0.0, math.inf)},
        {"labels": ("a", "b"), "energies": (0.0, 1.0), "dipoles": {("b", "a"): 1.0}},
        {"labels": ("a", "b"), "energies": (0.0, 1.0), "decay_rates": {("b", "a"): -1.0}},
        {"labels": ("a", "b"), "energies": (0.0, 1.0), "decay_rates": {("a", "a"): 1.0}},
        {"labels": ("a", "b"), "energies": (0.0, 1.0), "temperature": 0.0},
    ],
)
def test_level_system_rejects_invalid_structure_edge_case(kwargs):
    # Act & Assert
    with pytest.raises(ConfigurationError):
        LevelSystem.from_transitions(**kwargs)


def test_level_system_unknown_label_edge_case():
    # Arrange
    system = lambda_system()

    # Act & Assert
    with pytest.raises(LabelError):
        system.index("z")
    with pytest.raises(LabelError):
        LevelSystem.from_transitions(("a", "b"), (0.0, 1.0), dipoles={("a", "x"): 1.0})


@pytest.mark.parametrize("channel", [("x", "a"), ("b", "x")])
def test_decay_rate_unknown_endpoint_edge_case(channel):
    # Act & Assert
    with pytest.raises(LabelError):
        LevelSystem.from_transitions(("a", "b"), (0.0, 1.0), decay_rates={channel: 0.004})


def test_decay_rates_are_read_only_sanity():
    # Arrange
    rates = {("b", "a"): 0.004}
    system = LevelSystem.from_transitions(("a", "b"), (0.0, 0.01), decay_rates=rates)

    # Act
    rates[("b", "a")] = 1.0

    # Assert
    assert system.decay_rates[("b", "a")] == 0.004
    with pytest.raises(TypeError):
        system.decay_rates[("b", "a")] = 1.0
    with pytest.raises(TypeError):
        lambda_system().decay_rates[("c", "a")] = 1.0


def test_upward_rate_detailed_balance_sanity():
    # Arrange
    system = LevelSystem.from_transitions(
        ("a", "b"),
        (0.0, 0.01),
        decay_rates={("b", "a"): 0.004},
        temperature=ROOM_TEMPERATURE,
    )

    # Act
    upward = system.transition_rate("a", "b")

    # Assert
    assert upward == pytest.approx(0.004 * math.exp(-0.01 / ROOM_TEMPERATURE))
    assert system.transition_rate("b", "a") == 0.004
    assert system.upward_rate("a", "b") == upward


def test_upward_rate_without_temperature_edge_case():
    # Arrange
    system = LevelSystem.from_transitions(
        ("a", "b"), (0.0, 0.01), decay_rates={("b", "a"): 0.004}
    )

    # Act & Assert
    with pytest.raises(ConfigurationError):
        system.transition_rate("a", "b")
    with pytest.raises(ConfigurationError):
        system.upward_rate("b", "a")


def test_upward_rate_without_reverse_channel_is_zero_edge_case():
    # Arrange
    system = lambda_system()

    # Act & Assert
    assert system.upward_rate("a", "c") == 0.0


def test_with_zero_dipoles_sanity():
    # Act
    system = lambda_system().with_zero_dipoles()

    # Assert
    assert not np.any(system.dipole_lowering)
    assert system.energies == lambda_system().energies
