import math

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field

from noneq_spectra.core.units import fs_to_inverse_ev
from noneq_spectra.specfun import faddeeva

_SQRT_PI = math.sqrt(math.pi)


class ChirpedGaussianPulse(BaseModel):
    """
    Linearly chirped Gaussian pulse with spectral phase phi0 + phi2 (w - wc)^2 / 2.

    All quantities are internal units: ``duration`` T0 in eV⁻¹, ``carrier`` in
    eV, ``chirp`` phi2 in eV⁻². ``phase`` phi0 is accepted for completeness but
    cancels in every heterodyne signal and is not applied.
    """

    model_config = ConfigDict(frozen=True)

    amplitude: float = 1.0
    duration: float = Field(gt=0)
    carrier: float
    chirp: float = 0.0
    phase: float = 0.0

    @classmethod
    def from_fs(
        cls,
        duration_fs: float,
        carrier: float,
        chirp: float = 0.0,
        amplitude: float = 1.0,
        phase: float = 0.0,
    ) -> "ChirpedGaussianPulse":
        return cls(
            amplitude=amplitude,
            duration=fs_to_inverse_ev(duration_fs),
            carrier=carrier,
            chirp=chirp,
            phase=phase,
        )

    @property
    def gamma(self) -> complex:
        # 1/Gamma = T0^2 - 2i phi2; Re(Gamma) > 0 for any finite chirp
        return 1.0 / complex(self.duration**2, -2.0 * self.chirp)

    @property
    def gamma0(self) -> float:
        return 1.0 / self.duration**2

    def scaled(self, factor: float) -> "ChirpedGaussianPulse":
        return self.model_copy(update={"amplitude": self.amplitude * factor})

    def with_chirp(self, chirp: float) -> "ChirpedGaussianPulse":
        return self.model_copy(update={"chirp": chirp})


def spectral_envelope(pulse: ChirpedGaussianPulse, omega: ArrayLike):
    # Prefactor sqrt(pi) E0 T0 / 2 is the exact Fourier transform of temporal_envelope.
    detuning = np.asarray(omega, dtype=float) - pulse.carrier
    prefactor = _SQRT_PI * pulse.amplitude * pulse.duration / 2.0
    value = prefactor * np.exp(
        -(detuning**2) * pulse.duration**2 / 4.0 + 0.5j * pulse.chirp * detuning**2
    )
    return complex(value) if np.ndim(value) == 0 else value


def temporal_envelope(pulse: ChirpedGaussianPulse, t: ArrayLike):
    times = np.asarray(t, dtype=float)
    gamma = pulse.gamma
    prefactor = 0.5 * pulse.amplitude * np.sqrt(gamma / pulse.gamma0)
    value = prefactor * np.exp(-gamma * times**2 - 1j * pulse.carrier * times)
    return complex(value) if np.ndim(value) == 0 else value


def one_sided_spectrum(pulse: ChirpedGaussianPulse, omega: ArrayLike):
    """
    One-sided transform of the positive-frequency field, integral over t >= 0 of E(t) e^{iwt}.

    The closed form exp(-u^2)(1 + i Erfi(u)) with u = (w - wc) / (2 sqrt(Gamma)) is
    evaluated as the Faddeeva function w(u), which stays finite where the
    Gaussian and Erfi factors separately over- or underflow.
    """
    detuning = np.asarray(omega, dtype=float) - pulse.carrier
    argument = detuning / (2.0 * np.sqrt(pulse.gamma))
    prefactor = _SQRT_PI * pulse.amplitude * pulse.duration / 4.0
    value = prefactor * faddeeva(argument)
    return complex(value) if np.ndim(value) == 0 else value


def pulse_duration(pulse: ChirpedGaussianPulse) -> float:
    stretch = 2.0 * pulse.chirp / pulse.duration**2
    return pulse.duration * math.sqrt(1.0 + stretch**2)


def chirp_rate(pulse: ChirpedGaussianPulse) -> float:
    return 2.0 * pulse.chirp / (pulse.duration**4 + (2.0 * pulse.chirp) ** 2)


def instantaneous_frequency(pulse: ChirpedGaussianPulse, t: ArrayLike):
    value = pulse.carrier + 2.0 * chirp_rate(pulse) * np.asarray(t, dtype=float)
    return float(value) if np.ndim(value) == 0 else value
