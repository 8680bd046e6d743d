import math
from typing import Literal, NamedTuple

import numpy as np
from numpy.typing import ArrayLike
from pydantic import BaseModel, ConfigDict, Field


class CWField(BaseModel):
    """Monochromatic mode; ``sign`` -1 means the mode enters as its conjugate."""

    model_config = ConfigDict(frozen=True)

    amplitude: complex = 1.0
    frequency: float = Field(gt=0)
    sign: Literal[1, -1] = 1

    @property
    def signed_frequency(self) -> float:
        return self.sign * self.frequency

    @property
    def signed_amplitude(self) -> complex:
        return self.amplitude if self.sign > 0 else self.amplitude.conjugate()


class DeltaComponent(NamedTuple):
    """Spectral weight of 2π ℰ δ(ω - frequency)."""

    weight: complex
    frequency: float


class GaussianProbe(BaseModel):
    model_config = ConfigDict(frozen=True)

    width: float = Field(gt=0)
    carrier: float


def cw_spectrum(field: CWField) -> DeltaComponent:
    return DeltaComponent(
        weight=2.0 * math.pi * field.signed_amplitude,
        frequency=field.signed_frequency,
    )


def cw_one_sided(field: CWField, omega: ArrayLike, eta: float):
    """One-sided transform of a CW mode, i ℰ / (ω - s ω_j + iη)."""
    value = (
        1j
        * field.signed_amplitude
        / (np.asarray(omega, dtype=float) - field.signed_frequency + 1j * eta)
    )
    return complex(value) if np.ndim(value) == 0 else value


def probe_spectrum(probe: GaussianProbe, omega: ArrayLike):
    # Decaying Gaussian; sigma is large enough that the probe is flat over typical windows.
    detuning = np.asarray(omega, dtype=float) - probe.carrier
    value = math.sqrt(2.0 * math.pi / probe.width) * np.exp(
        -(detuning**2) / (2.0 * probe.width**2)
    )
    return float(value) if np.ndim(value) == 0 else value
