import numpy as np

from noneq_spectra.core.density import (
    DensityMatrix,
    maximally_coherent_state,
    population_state,
)
from noneq_spectra.core.system import LevelSystem
from noneq_spectra.driven.system import DrivenSystem
from noneq_spectra.fields.cw import CWField, GaussianProbe
from noneq_spectra.fields.pulse import ChirpedGaussianPulse
from noneq_spectra.wavemixing.scenario import FWMScenario

ROOM_TEMPERATURE = 0.0259

# Lambda system with a 0.1 eV lower splitting, probed by a 6.6 fs pulse
LAMBDA_ENERGIES = (0.0, 0.1, 0.8)
LAMBDA_ETA = 0.004

# four-wave-mixing Lambda system
FWM_ENERGIES = (0.0, 0.4, 1.2)
FWM_FREQUENCIES = (1.1, 0.75, 1.0)
FWM_ETA = 0.002

# driven system relaxation
GAMMA_BA = 0.004
GAMMA_CA = 0.0001
GAMMA_CB = 0.0002


def lambda_system(temperature: float | None = None) -> LevelSystem:
    return LevelSystem.from_transitions(
        ("a", "b", "c"),
        LAMBDA_ENERGIES,
        dipoles={("a", "c"): 1.0, ("b", "c"): 1.0},
        temperature=temperature,
    )


def triangle_system() -> LevelSystem:
    """Lambda energies with an extra a-b dipole closing the loop."""
    return LevelSystem.from_transitions(
        ("a", "b", "c"),
        LAMBDA_ENERGIES,
        dipoles={("a", "b"): 0.5, ("a", "c"): 1.0, ("b", "c"): 1.0},
    )


def thermal_two_lower_system() -> LevelSystem:
    return LevelSystem.from_transitions(
        ("a", "b", "c"),
        (0.0, 0.01, 1.0),
        dipoles={("a", "c"): 1.0, ("b", "c"): 1.0},
        temperature=ROOM_TEMPERATURE,
    )


def lambda_pulse(chirp: float = 0.0) -> ChirpedGaussianPulse:
    return ChirpedGaussianPulse.from_fs(6.6, 0.5, chirp=chirp)


def driven_pulse(carrier: float = 0.5, chirp: float = 0.0) -> ChirpedGaussianPulse:
    return ChirpedGaussianPulse.from_fs(0.14, carrier, chirp=chirp)


def coherence_only_state(system: LevelSystem) -> DensityMatrix:
    return maximally_coherent_state(system, "a", "b").coherence_part()


def fwm_system() -> LevelSystem:
    return LevelSystem.from_transitions(
        ("a", "b", "c"),
        FWM_ENERGIES,
        dipoles={("a", "c"): 1.0, ("b", "c"): 1.0},
    )


def fwm_scenario(
    state: str = "population", frequencies: tuple[float, float, float] = FWM_FREQUENCIES
) -> FWMScenario:
    system = fwm_system()
    if state == "population":
        rho = population_state(system, "b")
    elif state == "coherence":
        rho = coherence_only_state(system)
    else:
        rho = maximally_coherent_state(system, "a", "b")
    first, second, third = frequencies
    return FWMScenario(
        system=system,
        rho=rho,
        modes=(
            CWField(amplitude=1 + 0j, frequency=first, sign=1),
            CWField(amplitude=1 + 0j, frequency=second, sign=-1),
            CWField(amplitude=1 + 0j, frequency=third, sign=1),
        ),
        probe=GaussianProbe(width=10.0, carrier=0.5),
        eta=FWM_ETA,
        name=f"fwm-{state}",
    )


def fwm_grid() -> np.ndarray:
    # 0.002 eV step
    return np.linspace(0.75, 1.95, 601)


def driven_system(
    rabi: float = 0.0,
    drive_frequency: float = 0.0,
    omega_b: float = 0.01,
    dipole_a: float = 1.0,
    dipole_b: float = 1.0,
) -> DrivenSystem:
    return DrivenSystem.from_parameters(
        omega_b=omega_b,
        omega_c=1.0,
        temperature=ROOM_TEMPERATURE,
        gamma_ba=GAMMA_BA,
        gamma_ca=GAMMA_CA,
        gamma_cb=GAMMA_CB,
        rabi=rabi,
        drive_frequency=drive_frequency,
        dipoles={"a": dipole_a, "b": dipole_b},
    )
