import numpy as np
import pytest

from noneq_spectra.driven.dressed import dressed_frequencies, resolvent_poles
from noneq_spectra.driven.liouvillian import build_liouvillian
from tests.models.systems import driven_system


def test_resonant_dressed_resonances_sanity():
    # Arrange
    driven = driven_system(rabi=0.005, drive_frequency=0.01)

    # Act
    spectrum = dressed_frequencies(driven)

    # Assert
    assert spectrum.delta_ab == pytest.approx(0.0)
    assert spectrum.generalized_rabi == pytest.approx(0.01)
    assert spectrum.resonances == pytest.approx((0.985, 0.995, 0.995, 1.005))


def test_resolvent_poles_match_dressed_resonances_sanity():
    # Arrange
    driven = driven_system(rabi=0.005, drive_frequency=0.01)

    # Act
    poles = resolvent_poles(build_liouvillian(driven))
    spectrum = dressed_frequencies(driven)

    # Assert
    assert np.allclose(poles["a"], spectrum.a_type, atol=2e-5)
    assert np.allclose(poles["b"], spectrum.b_type, atol=2e-5)


def test_static_coupling_energies_sanity():
    # Arrange
    driven = driven_system(rabi=0.05)

    # Act
    spectrum = dressed_frequencies(driven)

    # Assert
    gap = np.sqrt(4 * 0.05**2 + 0.01**2)
    assert spectrum.static_energies == pytest.approx((0.005 - gap / 2, 0.005 + gap / 2))
    assert spectrum.a_type == pytest.approx((0.94475, 1.04525), abs=1e-6)


def test_undriven_resonances_are_bare_transitions_edge_case(undriven):
    # Act
    spectrum = dressed_frequencies(undriven)

    # Assert
    assert spectrum.generalized_rabi == pytest.approx(0.01)
    assert spectrum.a_type[1] == pytest.approx(1.0)
    assert spectrum.b_type[0] == pytest.approx(0.99)
