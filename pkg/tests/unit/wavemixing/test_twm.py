import numpy as np
import pytest

from noneq_spectra.core.density import maximally_coherent_state, population_state
from noneq_spectra.errors.base import ConfigurationError
from noneq_spectra.fields.cw import CWField, GaussianProbe
from noneq_spectra.wavemixing.twm import twm_signal
from tests.models.systems import LAMBDA_ETA, triangle_system
from tests.unit.assertions import assert_exact_partition

GRID = np.linspace(0.6, 1.0, 201)
PROBE = GaussianProbe(width=10.0, carrier=0.5)
MODES = (CWField(frequency=0.7), CWField(frequency=0.1))


def test_lambda_system_twm_vanishes_sanity(lambda_levels):
    # Arrange
    rho = maximally_coherent_state(lambda_levels, "a", "b")

    # Act
    signals = twm_signal(lambda_levels, rho, MODES, PROBE, GRID, LAMBDA_ETA)

    # Assert
    assert not np.any(signals.total.values)


@pytest.mark.parametrize("state", ["population", "coherent"])
def test_triangle_system_twm_sanity(state):
    # Arrange
    system = triangle_system()
    if state == "population":
        rho = population_state(system, "a")
    else:
        rho = maximally_coherent_state(system, "a", "b")

    # Act
    signals = twm_signal(system, rho, MODES, PROBE, GRID, LAMBDA_ETA)

    # Assert
    assert_exact_partition(signals)
    assert np.any(signals.total.values != 0)
    if state == "population":
        assert not np.any(signals.coh.values)


def test_twm_needs_two_modes_edge_case(lambda_levels):
    # Arrange
    rho = population_state(lambda_levels, "a")

    # Act & Assert
    with pytest.raises(ConfigurationError):
        twm_signal(lambda_levels, rho, MODES[:1], PROBE, GRID, LAMBDA_ETA)
