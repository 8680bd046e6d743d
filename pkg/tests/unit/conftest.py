import pytest

pytest.register_assert_rewrite("tests.unit.assertions")

from tests.models.systems import (  # noqa: E402
    driven_system,
    fwm_scenario,
    lambda_pulse,
    lambda_system,
    thermal_two_lower_system,
)


@pytest.fixture
def lambda_levels():
    return lambda_system()


@pytest.fixture
def thermal_levels():
    return thermal_two_lower_system()


@pytest.fixture
def probe_pulse():
    return lambda_pulse()


@pytest.fixture
def population_fwm():
    return fwm_scenario("population")


@pytest.fixture
def undriven():
    return driven_system()
