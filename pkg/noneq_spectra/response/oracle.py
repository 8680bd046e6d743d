"""Brute-force time-domain evaluation of the linear signal, used to cross-check the closed forms."""

import dataclasses
import logging
import math
import warnings

import numpy as np
from numpy.typing import ArrayLike
from scipy import integrate

from noneq_spectra.config import DEFAULT_CONFIG, NumericsConfig
from noneq_spectra.core.density import DensityMatrix, check_state_labels
from noneq_spectra.core.liouville import LiouvilleIndex
from noneq_spectra.core.system import LevelSystem
from noneq_spectra.errors.base import QuadratureError
from noneq_spectra.fields.pulse import (
    ChirpedGaussianPulse,
    pulse_duration,
    spectral_envelope,
    temporal_envelope,
)
from noneq_spectra.response.linear import Preparation, require_positive_eta
from noneq_spectra.response.trace import EQ, TOTAL, SignalTrace, frequency_grid

logger = logging.getLogger(__name__)

# |E(t)| < 1e-28 relative beyond this many temporal widths
ENVELOPE_CUTOFF = 8.0
# quad reports success well below this multiple of the requested tolerance
ERROR_SLACK = 1e3


class _Quadrature:
    def __init__(self, config: NumericsConfig):
        self.config = config

    def _check(self, value: float, error: float, caught: list, what: str) -> float:
        tolerance = ERROR_SLACK * max(
            self.config.quadrature_abs_tolerance,
            self.config.quadrature_rel_tolerance * abs(value),
        )
        if error > tolerance:
            details = "; ".join(str(w.message) for w in caught) or "no warning"
            raise QuadratureError(
                f"Quadrature of {what} did not converge ({details})",
                error_estimate=error,
                tolerance=tolerance,
            )
        return value

    def real(self, func, lower: float, upper: float, what: str, **kwargs) -> float:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", integrate.IntegrationWarning)
            value, error = integrate.quad(
                func,
                lower,
                upper,
                epsabs=self.config.quadrature_abs_tolerance,
                epsrel=self.config.quadrature_rel_tolerance,
                limit=self.config.quadrature_limit,
                **kwargs,
            )
        logger.debug("quad %s: value=%.6g error=%.2g", what, value, error)
        return self._check(value, error, caught, what)

    def complex(self, func, lower: float, upper: float, what: str) -> complex:
        real = self.real(lambda t: func(t).real, lower, upper, f"Re {what}")
        imag = self.real(lambda t: func(t).imag, lower, upper, f"Im {what}")
        return complex(real, imag)


def matter_propagator_integral(
    offset: float, eta: float, config: NumericsConfig = DEFAULT_CONFIG
) -> complex:
    """-i ∫₀^∞ e^{i offset τ - ητ} dτ, the damped time-domain propagator at one frequency offset."""
    quadrature = _Quadrature(config)
    decay = lambda tau: math.exp(-eta * tau)  # noqa: E731
    if abs(offset) < eta:
        # QAWF cycles span π/|offset| and break down as the offset vanishes
        cosine = quadrature.real(
            lambda tau: decay(tau) * math.cos(offset * tau), 0.0, np.inf, "matter cos"
        )
        sine = quadrature.real(
            lambda tau: decay(tau) * math.sin(offset * tau), 0.0, np.inf, "matter sin"
        )
        return -1j * complex(cosine, sine)
    cosine = quadrature.real(decay, 0.0, np.inf, "matter cos", weight="cos", wvar=offset)
    sine = quadrature.real(decay, 0.0, np.inf, "matter sin", weight="sin", wvar=offset)
    return -1j * complex(cosine, sine)


def pulse_integral(
    pulse: ChirpedGaussianPulse,
    frequency: float,
    lower: float,
    config: NumericsConfig = DEFAULT_CONFIG,
) -> complex:
    """∫_lower^∞ ℰ(t) e^{i frequency t} dt over the support of the envelope."""
    horizon = ENVELOPE_CUTOFF * pulse_duration(pulse)
    start = max(lower, -horizon)
    if start >= horizon:
        return 0j
    integrand = lambda t: temporal_envelope(pulse, t) * np.exp(1j * frequency * t)  # noqa: E731
    return _Quadrature(config).complex(integrand, start, horizon, "pulse")


def commutator_superoperator(index: LiouvilleIndex, operator: np.ndarray) -> np.ndarray:
    """Matrix of X ↦ [operator, X] acting on vectorized density matrices."""
    columns = []
    for k, l in index.pairs:
        unit = np.zeros(index.size, dtype=complex)
        unit[index.flat(k, l)] = 1.0
        basis = index.matrix(unit)
        columns.append(index.vectorize(operator @ basis - basis @ operator))
    return np.stack(columns, axis=1)


def trace_functional(index: LiouvilleIndex, operator: np.ndarray) -> np.ndarray:
    """Row vector with ⟨⟨operator|X⟩⟩ = Tr[operator X]."""
    positions = {label: idx for idx, label in enumerate(index.labels)}
    return np.array(
        [operator[positions[l], positions[k]] for k, l in index.pairs], dtype=complex
    )


@dataclasses.dataclass(frozen=True)
class FreeEvolution:
    """Eigenmodes of the bare Liouvillian with the dipole commutator and trace projected onto them."""

    frequencies: np.ndarray
    coupling: np.ndarray
    detection: np.ndarray
    to_modes: np.ndarray

    @classmethod
    def of(cls, system: LevelSystem) -> "FreeEvolution":
        index = LiouvilleIndex(system.labels)
        mu = system.total_dipole()
        hamiltonian = np.diag(np.asarray(system.energies, dtype=float))
        generator = commutator_superoperator(index, hamiltonian)
        frequencies, vectors = np.linalg.eig(generator)
        inverse = np.linalg.inv(vectors)
        coupling = inverse @ commutator_superoperator(index, mu) @ vectors
        detection = trace_functional(index, mu) @ vectors
        return cls(frequencies.real, coupling, detection, inverse)

    def modes(self, rho: DensityMatrix) -> np.ndarray:
        return self.to_modes @ LiouvilleIndex(rho.labels).vectorize(rho.matrix)


def time_domain_oracle(
    system: LevelSystem,
    rho: DensityMatrix,
    pulse: ChirpedGaussianPulse,
    omega: ArrayLike,
    eta: float,
    preparation: Preparation = "nonequilibrium",
    delay: float = 0.0,
    config: NumericsConfig = DEFAULT_CONFIG,
    scenario: str = "",
) -> SignalTrace:
    """
    Evaluate the linear signal by propagating the density matrix in time.

    The initial state evolves freely under ℒX = [H, X] from the preparation
    time, is kicked once by V₋X = [μ, X] at t′ inside the pulse, and then
    evolves again with damping η until it is read out as Tr[μρ⁽¹⁾(t)]. Both
    time integrals are done by quadrature per Liouvillian eigenmode and grid
    point before overlapping with ℰ*(ω).

    Args:
        delay: t₀ - τ₀, the offset between the pulse center and the state
            preparation time; nonzero values add the phase e^{-iλ delay} to
            every mode of the initial state.
        preparation: ``"equilibrium"`` integrates the pulse over the whole real
            line and keeps only populations.
    """
    require_positive_eta(eta)
    check_state_labels(system, rho)
    grid = frequency_grid(omega)
    if preparation == "equilibrium":
        rho = rho.population_part()
        lower = -np.inf
    else:
        lower = -delay

    evolution = FreeEvolution.of(system)
    initial = evolution.modes(rho) * np.exp(-1j * evolution.frequencies * delay)
    # weight[k, m]: mode m of the state reaching detectable mode k through one dipole kick
    weights = evolution.detection[:, None] * evolution.coupling * initial[None, :]
    weights[np.abs(weights) < 1e-14] = 0.0
    detected_modes = np.flatnonzero(np.any(weights != 0, axis=1))
    source_modes = np.flatnonzero(np.any(weights != 0, axis=0))

    values = np.zeros(grid.shape)
    propagators: dict[float, complex] = {}

    def propagator(offset: float) -> complex:
        key = float(offset)
        if key not in propagators:
            propagators[key] = matter_propagator_integral(key, eta, config)
        return propagators[key]

    for index, frequency in enumerate(grid):
        detected = np.conj(spectral_envelope(pulse, frequency))
        driving = {
            m: pulse_integral(pulse, frequency - evolution.frequencies[m], lower, config)
            for m in source_modes
        }
        polarization = 0j
        for k in detected_modes:
            kicked = sum(weights[k, m] * driving[m] for m in source_modes)
            if kicked != 0:
                polarization += propagator(frequency - evolution.frequencies[k]) * kicked
        values[index] = 2.0 * float(np.imag(detected * polarization))
    logger.debug(
        "Time-domain oracle used %d matter integrals over %d source modes",
        len(propagators),
        len(source_modes),
    )

    return SignalTrace(
        omega=grid,
        values=values,
        component=EQ if preparation == "equilibrium" else TOTAL,
        eta=eta,
        scenario=scenario,
    )
