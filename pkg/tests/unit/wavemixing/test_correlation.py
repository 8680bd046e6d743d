import numpy as np
import pytest

from noneq_spectra.core.density import density_matrix, population_state
from noneq_spectra.errors.base import ArgumentError
from noneq_spectra.wavemixing.correlation import (
    chi3_generalized,
    chi3_support,
    cubic_terms,
    matter_correlation_quadratic,
    pole_inventory_cubic,
    pole_inventory_quadratic,
    quadratic_terms,
)
from tests.models.systems import LAMBDA_ETA, triangle_system


def test_lambda_system_has_no_quadratic_response_sanity(lambda_levels):
    # Arrange
    rho = population_state(lambda_levels, "a")

    # Act & Assert
    assert quadratic_terms(lambda_levels, rho) == []
    assert matter_correlation_quadratic(lambda_levels, rho, 0.8, 0.1, LAMBDA_ETA) == 0


def test_triangle_system_quadratic_poles_sanity():
    # Arrange
    system = triangle_system()
    rho = population_state(system, "a")

    # Act
    inventory = pole_inventory_quadratic(system, rho)

    # Assert
    assert ("omega-omega1", 0.1) in inventory
    assert ("omega", 0.8) in inventory
    assert matter_correlation_quadratic(system, rho, 0.8, 0.7, LAMBDA_ETA) != 0


def test_lambda_cubic_poles_sanity(lambda_levels):
    # Arrange
    rho = population_state(lambda_levels, "a")

    # Act
    inventory = pole_inventory_cubic(lambda_levels, rho)

    # Assert
    expected = {
        ("omega", 0.8),
        ("omega-omega1", 0.0),
        ("omega-omega1", 0.1),
        ("omega-omega1-omega2", 0.8),
    }
    assert expected <= inventory


def test_cubic_terms_follow_state_sanity(lambda_levels):
    # Arrange
    rho = population_state(lambda_levels, "b")

    # Act
    terms = cubic_terms(lambda_levels, rho)

    # Assert
    assert terms
    assert {(term.a, term.b) for term in terms} == {(1, 1)}


def test_chi3_generalized_broadcasts_sanity(lambda_levels):
    # Arrange
    rho = population_state(lambda_levels, "a")
    omega = np.linspace(0.7, 0.9, 5)

    # Act
    values = chi3_generalized(lambda_levels, rho, omega, 0.8, -0.8, LAMBDA_ETA)
    single = chi3_generalized(lambda_levels, rho, 0.75, 0.8, -0.8, LAMBDA_ETA)

    # Assert
    assert values.shape == (5,)
    assert values[1] == pytest.approx(single)


def test_chi3_support_sanity(lambda_levels):
    # Act & Assert
    assert chi3_support(lambda_levels, "a", "b", 0.9, 0.8, -0.7) == pytest.approx(0.9)
    assert chi3_support(lambda_levels, "a", "a", 0.9, 0.8, -0.7) == pytest.approx(0.8)


def test_chi3_generalized_needs_positive_eta_edge_case(lambda_levels):
    # Arrange
    rho = population_state(lambda_levels, "a")

    # Act & Assert
    with pytest.raises(ArgumentError):
        chi3_generalized(lambda_levels, rho, 0.8, 0.8, -0.8, 0.0)


def _nested_commutators(system, rho, arguments, eta):
    mu = system.total_dipole()
    bohr = system.bohr_matrix()
    state = rho.matrix
    for argument in arguments:
        state = (mu @ state - state @ mu) / (argument - bohr + 1j * eta)
    return np.trace(mu @ state)


@pytest.mark.parametrize("state", ["a", "mixed"])
@pytest.mark.parametrize(["omega", "omega1", "omega2"], [(0.83, 0.71, 0.12), (0.9, -0.6, 1.3)])
def test_chi3_generalized_matches_nested_commutators_sanity(state, omega, omega1, omega2):
    # Arrange
    system = triangle_system()
    if state == "a":
        rho = population_state(system, "a")
    else:
        rho = density_matrix(
            system,
            [[0.5, 0.2 - 0.1j, 0.05], [0.2 + 0.1j, 0.3, 0.1j], [0.05, -0.1j, 0.2]],
        )
    arguments = (omega - omega1 - omega2, omega - omega1, omega)

    # Act
    value = chi3_generalized(system, rho, omega, omega1, omega2, LAMBDA_ETA)

    # Assert
    assert value == pytest.approx(_nested_commutators(system, rho, arguments, LAMBDA_ETA))


def test_quadratic_correlation_matches_nested_commutators_sanity():
    # Arrange
    system = triangle_system()
    rho = population_state(system, "b")

    # Act
    value = matter_correlation_quadratic(system, rho, 0.8, 0.7, LAMBDA_ETA)

    # Assert
    expected = _nested_commutators(system, rho, (0.8 - 0.7, 0.8), LAMBDA_ETA)
    assert value == pytest.approx(expected)
