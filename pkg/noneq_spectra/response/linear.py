import logging
import math
from typing import Literal, NamedTuple

import numpy as np
from numpy.typing import ArrayLike

from noneq_spectra.core.density import DensityMatrix, check_state_labels
from noneq_spectra.core.system import LevelSystem
from noneq_spectra.errors.base import ArgumentError, ConfigurationError
from noneq_spectra.fields.cw import CWField
from noneq_spectra.fields.pulse import (
    ChirpedGaussianPulse,
    one_sided_spectrum,
    spectral_envelope,
)
from noneq_spectra.response.trace import (
    COH,
    EQ,
    POP,
    TOTAL,
    SignalSet,
    SignalTrace,
    frequency_grid,
)

logger = logging.getLogger(__name__)

Preparation = Literal["nonequilibrium", "equilibrium"]


class GeneralizedTerm(NamedTuple):
    """Coefficient of δ(ω1' - support) contributed by the initial pair (a, b)."""

    pair: tuple[str, str]
    weight: complex
    support: float


def require_positive_eta(eta: float):
    if not eta > 0:
        raise ArgumentError(f"Line broadening eta must be positive, got {eta}")


def propagator(omega, bohr: float, eta: float):
    return 1.0 / (omega - bohr + 1j * eta)


def pair_correlation(
    system: LevelSystem, a: int, b: int, omega: ArrayLike, eta: float
):
    """⟨V_L G(ω) V_-⟩ for the unit Liouville vector |ab⟩⟩ (ρ_ab weight excluded)."""
    mu = system.total_dipole()
    bohr = system.bohr_matrix()
    omega = np.asarray(omega, dtype=float)
    total = np.zeros(omega.shape, dtype=complex)
    for c in range(system.size):
        if mu[c, a] == 0:
            continue
        total += mu[c, a] * (
            mu[b, c] * propagator(omega, bohr[c, b], eta)
            - mu[c, b] * propagator(omega, bohr[a, c], eta)
        )
    return total


def matter_correlation_linear(
    system: LevelSystem, rho: DensityMatrix, omega: ArrayLike, eta: float
):
    require_positive_eta(eta)
    check_state_labels(system, rho)
    omega = np.asarray(omega, dtype=float)
    total = np.zeros(omega.shape, dtype=complex)
    for a, b, weight in rho.nonzero_elements():
        total += weight * pair_correlation(system, a, b, omega, eta)
    return complex(total) if total.ndim == 0 else total


def chi1_generalized(
    system: LevelSystem, rho: DensityMatrix, omega: float, eta: float
) -> list[GeneralizedTerm]:
    """
    Generalized linear susceptibility at detection frequency ω as a sum of deltas in ω1'.

    Each initial pair (a, b) contributes ρ_ab⟨V_L G(ω) V_-⟩_ab δ(ω - ω1' - ω_ab);
    callers collapse the ω1' integral at ``support`` = ω - ω_ab.
    """
    require_positive_eta(eta)
    check_state_labels(system, rho)
    bohr = system.bohr_matrix()
    return [
        GeneralizedTerm(
            pair=(system.labels[a], system.labels[b]),
            weight=complex(weight * pair_correlation(system, a, b, omega, eta)),
            support=float(omega - bohr[a, b]),
        )
        for a, b, weight in rho.nonzero_elements()
    ]


def chi1_nascent(
    system: LevelSystem,
    rho: DensityMatrix,
    omega: float,
    omega1: ArrayLike,
    eta: float,
    delta_eta: float | None = None,
):
    # (i/2π)[G - G†] acting on |ab⟩⟩ is a unit-area Lorentzian in ω - ω1' - ω_ab
    require_positive_eta(eta)
    width = eta if delta_eta is None else delta_eta
    omega1 = np.asarray(omega1, dtype=float)
    total = np.zeros(omega1.shape, dtype=complex)
    for term in chi1_generalized(system, rho, omega, eta):
        offset = omega1 - term.support
        total += term.weight * (width / math.pi) / (offset**2 + width**2)
    return complex(total) if total.ndim == 0 else total


def _trace(omega, values, component: str, eta: float, scenario: str) -> SignalTrace:
    return SignalTrace(
        omega=omega, values=values, component=component, eta=eta, scenario=scenario
    )


def linear_signal(
    system: LevelSystem,
    rho: DensityMatrix,
    pulse: ChirpedGaussianPulse,
    omega: ArrayLike,
    eta: float,
    preparation: Preparation = "nonequilibrium",
    scenario: str = "",
) -> SignalSet:
    """
    Heterodyne linear signal 2 Im Σ_ab ℰ*(ω) Ē(ω - ω_ab) ⟨V_L G(ω) V_-⟩_ρab.

    The population trace holds the a = b terms and the coherence trace the
    a ≠ b terms; total is their sum. With ``preparation="equilibrium"`` the
    state is taken as prepared in the remote past: Ē is replaced by ℰ and
    coherence terms average out.
    """
    require_positive_eta(eta)
    check_state_labels(system, rho)
    grid = frequency_grid(omega)
    bohr = system.bohr_matrix()
    detected = np.conj(spectral_envelope(pulse, grid))

    pop = np.zeros(grid.shape)
    coh = np.zeros(grid.shape)
    for a, b, weight in rho.nonzero_elements():
        if preparation == "equilibrium":
            if a != b:
                continue
            driving = spectral_envelope(pulse, grid)
        else:
            driving = one_sided_spectrum(pulse, grid - bohr[a, b])
        term = 2.0 * np.imag(
            detected * driving * weight * pair_correlation(system, a, b, grid, eta)
        )
        if a == b:
            pop += term
        else:
            coh += term

    total_tag = EQ if preparation == "equilibrium" else TOTAL
    logger.debug(
        "Linear signal on %d points (%s preparation, eta=%g)",
        grid.size,
        preparation,
        eta,
    )
    return SignalSet(
        total=_trace(grid, pop + coh, total_tag, eta, scenario),
        pop=_trace(grid, pop, POP, eta, scenario),
        coh=_trace(grid, coh, COH, eta, scenario),
    )


def equilibrium_signal(
    system: LevelSystem,
    rho: DensityMatrix,
    pulse: ChirpedGaussianPulse,
    omega: ArrayLike,
    eta: float,
    scenario: str = "",
) -> SignalTrace:
    grid = frequency_grid(omega)
    power = np.abs(spectral_envelope(pulse, grid)) ** 2
    chi = matter_correlation_linear(system, rho.population_part(), grid, eta)
    return _trace(grid, 2.0 * np.imag(power * chi), EQ, eta, scenario)


def three_level_topology(system: LevelSystem) -> tuple[tuple[str, str], str]:
    """Return ((lower, lower), upper) for a Λ system with a-c and b-c dipoles only."""
    if system.size != 3:
        raise ConfigurationError("The RWA three-level signal needs exactly 3 levels")
    mu = system.total_dipole()
    connected = np.abs(mu) > 0
    for c in range(3):
        lower = [i for i in range(3) if i != c]
        if (
            all(connected[c, i] for i in lower)
            and not connected[lower[0], lower[1]]
            and all(system.energies[c] > system.energies[i] for i in lower)
        ):
            return (system.labels[lower[0]], system.labels[lower[1]]), system.labels[c]
    raise ConfigurationError(
        "Expected two lower states each dipole-coupled to one upper state only"
    )


def linear_signal_threelevel_rwa(
    system: LevelSystem,
    rho: DensityMatrix,
    pulse: ChirpedGaussianPulse,
    omega: ArrayLike,
    eta: float,
    scenario: str = "",
) -> dict[tuple[str, str], SignalTrace]:
    require_positive_eta(eta)
    check_state_labels(system, rho)
    (first, second), upper = three_level_topology(system)
    grid = frequency_grid(omega)
    mu = system.total_dipole()
    bohr = system.bohr_matrix()
    c = system.index(upper)
    detected = np.conj(spectral_envelope(pulse, grid))

    traces = {}
    for i_label in (first, second):
        for j_label in (first, second):
            i, j = system.index(i_label), system.index(j_label)
            numerator = mu[c, i] * np.conj(mu[c, j]) * rho.matrix[i, j]
            values = 2.0 * np.imag(
                detected
                * one_sided_spectrum(pulse, grid - bohr[i, j])
                * numerator
                * propagator(grid, bohr[c, j], eta)
            )
            traces[(i_label, j_label)] = _trace(
                grid, values, f"{i_label}{j_label}", eta, scenario
            )
    return traces


def cw_integrated_signal(
    system: LevelSystem, rho: DensityMatrix, cw: CWField, eta: float
) -> float:
    """
    Frequency-integrated linear signal for a CW field.

    The one-sided transform of the mode contributes i G_ab(0) = i/(-ω_ab + iη),
    so a diagonal state reduces to η⁻¹ times the absorption at ω1.
    """
    require_positive_eta(eta)
    check_state_labels(system, rho)
    bohr = system.bohr_matrix()
    intensity = abs(cw.amplitude) ** 2
    total = 0.0
    for a, b, weight in rho.nonzero_elements():
        correlation = pair_correlation(system, a, b, cw.frequency, eta)
        one_sided = 1j * propagator(0.0, bohr[a, b], eta)
        total += 2.0 * float(np.imag(intensity * weight * correlation * one_sided))
    return total
