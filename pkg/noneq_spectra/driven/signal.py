import logging

import numpy as np
from numpy.typing import ArrayLike

from noneq_spectra.config import DEFAULT_CONFIG, NumericsConfig
from noneq_spectra.core.density import DensityMatrix
from noneq_spectra.driven.liouvillian import build_liouvillian, steady_state
from noneq_spectra.driven.propagator import Resolvent
from noneq_spectra.driven.system import DrivenSystem
from noneq_spectra.errors.base import ContractError
from noneq_spectra.fields.pulse import ChirpedGaussianPulse, spectral_envelope
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

CA = ("c", "a")
CB = ("c", "b")


def _trace(grid, values, component: str, eta: float, scenario: str) -> SignalTrace:
    return SignalTrace(
        omega=grid, values=values, component=component, eta=eta, scenario=scenario
    )


def driven_signal(
    driven: DrivenSystem,
    pulse: ChirpedGaussianPulse,
    omega: ArrayLike,
    eta: float = 0.0,
    state: DensityMatrix | None = None,
    config: NumericsConfig = DEFAULT_CONFIG,
    scenario: str = "",
) -> SignalSet:
    """
    Probe absorption of the driven steady state, split into population and coherence parts.

    Args:
        state: rotating-frame initial state; defaults to the steady state of
            the driven Liouvillian
        eta: extra broadening added to the resolvent argument on top of the
            γ damping already inside L̃
    """
    grid = frequency_grid(omega)
    liouvillian = build_liouvillian(driven)
    rho = steady_state(liouvillian, config) if state is None else state
    resolvent = Resolvent(liouvillian, eta, config)
    omega0 = driven.drive_frequency

    mu = driven.system.total_dipole()
    mu_ac, mu_ca = mu[0, 2], mu[2, 0]
    mu_bc, mu_cb = mu[1, 2], mu[2, 1]

    field = spectral_envelope(pulse, grid)
    field_up = spectral_envelope(pulse, grid + omega0)
    field_down = spectral_envelope(pulse, grid - omega0)
    detected = np.conj(field)

    g_caca = resolvent.element(CA, CA, grid - omega0)
    g_cbca = resolvent.element(CB, CA, grid)
    g_cbcb = resolvent.element(CB, CB, grid)
    g_cacb = resolvent.element(CA, CB, grid - omega0)

    matrix = rho.matrix
    weight_a = (matrix[0, 0] - matrix[2, 2]).real
    weight_b = (matrix[1, 1] - matrix[2, 2]).real

    pop = 2.0 * weight_a * np.imag(
        detected * (field * mu_ac * mu_ca * g_caca + field_up * mu_bc * mu_ca * g_cbca)
    ) + 2.0 * weight_b * np.imag(
        detected * (field * mu_bc * mu_cb * g_cbcb + field_down * mu_ac * mu_cb * g_cacb)
    )
    coh = 2.0 * np.imag(
        detected
        * (
            (field_up * mu_bc * mu_ca * g_cbcb + field * mu_ac * mu_ca * g_cacb)
            * matrix[0, 1]
            + (field_down * mu_ac * mu_cb * g_caca + field * mu_bc * mu_cb * g_cbca)
            * matrix[1, 0]
        )
    )
    logger.debug(
        "Driven signal: Omega=%g omega0=%g rho_aa=%.6f rho_bb=%.6f |rho_ab|=%.3e",
        driven.rabi,
        omega0,
        matrix[0, 0].real,
        matrix[1, 1].real,
        abs(matrix[0, 1]),
    )
    return SignalSet(
        total=_trace(grid, pop + coh, TOTAL, eta, scenario),
        pop=_trace(grid, pop, POP, eta, scenario),
        coh=_trace(grid, coh, COH, eta, scenario),
    )


def driven_equilibrium_signal(
    driven: DrivenSystem,
    pulse: ChirpedGaussianPulse,
    omega: ArrayLike,
    eta: float = 0.0,
    config: NumericsConfig = DEFAULT_CONFIG,
    scenario: str = "",
) -> SignalTrace:
    if driven.is_driven:
        raise ContractError(
            f"Equilibrium signal requires Ω = ω₀ = 0, got Ω={driven.rabi}, ω₀={driven.drive_frequency}"
        )
    grid = frequency_grid(omega)
    liouvillian = build_liouvillian(driven)
    rho = steady_state(liouvillian, config).matrix
    resolvent = Resolvent(liouvillian, eta, config)
    mu = driven.system.total_dipole()
    power = np.abs(spectral_envelope(pulse, grid)) ** 2

    response = np.zeros(grid.shape, dtype=complex)
    for i, pair in ((0, CA), (1, CB)):
        weight = (rho[i, i] - rho[2, 2]).real
        response += weight * mu[i, 2] * mu[2, i] * resolvent.element(pair, pair, grid)
    return _trace(grid, 2.0 * np.imag(power * response), EQ, eta, scenario)
