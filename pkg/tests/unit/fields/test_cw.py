import math

import numpy as np
import pytest

from noneq_spectra.fields.cw import (
    CWField,
    GaussianProbe,
    cw_one_sided,
    cw_spectrum,
    probe_spectrum,
)


@pytest.mark.parametrize(
    ["sign", "expected_weight", "expected_frequency"],
    [
        [1, 2 * math.pi * (0.5 + 0.25j), 0.8],
        [-1, 2 * math.pi * (0.5 - 0.25j), -0.8],
    ],
)
def test_cw_spectrum_delta_component_sanity(sign, expected_weight, expected_frequency):
    # Arrange
    field = CWField(amplitude=0.5 + 0.25j, frequency=0.8, sign=sign)

    # Act
    component = cw_spectrum(field)

    # Assert
    assert component.weight == pytest.approx(expected_weight)
    assert component.frequency == expected_frequency


def test_cw_one_sided_sanity():
    # Arrange
    field = CWField(amplitude=2.0, frequency=1.1, sign=-1)
    omega = np.array([-1.1, 0.0, 1.1])
    eta = 0.01

    # Act
    values = cw_one_sided(field, omega, eta)

    # Assert
    assert values[0] == pytest.approx(1j * 2.0 / (1j * eta))
    assert np.allclose(values, 1j * 2.0 / (omega + 1.1 + 1j * eta))


@pytest.mark.parametrize("kwargs", [{"frequency": 0.0}, {"frequency": 1.0, "sign": 0}])
def test_cw_field_rejects_invalid_values_edge_case(kwargs):
    # Act & Assert
    with pytest.raises(ValueError):
        CWField(**kwargs)


def test_probe_spectrum_sanity():
    # Arrange
    probe = GaussianProbe(width=10.0, carrier=0.5)

    # Act
    at_carrier = probe_spectrum(probe, 0.5)
    detuned = probe_spectrum(probe, 10.5)

    # Assert
    assert at_carrier == pytest.approx(math.sqrt(2 * math.pi / 10.0))
    assert detuned == pytest.approx(at_carrier * math.exp(-0.5))
