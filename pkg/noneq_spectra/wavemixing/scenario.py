import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from noneq_spectra.core.density import DensityMatrix, check_state_labels
from noneq_spectra.core.system import LevelSystem
from noneq_spectra.errors.base import ConfigurationError
from noneq_spectra.fields.cw import CWField, GaussianProbe
from noneq_spectra.typing_support import Self

# k = k1 - k2 + k3
PHASE_MATCHING = (1, -1, 1)


def detuning(omega, omega1: float, omega2: float, omega3: float):
    """Offset of the detected frequency from the ω1 - ω2 + ω3 combination."""
    value = np.asarray(omega, dtype=float) - omega1 + omega2 - omega3
    return float(value) if np.ndim(value) == 0 else value


class FWMScenario(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    system: LevelSystem
    rho: DensityMatrix
    modes: tuple[CWField, CWField, CWField]
    probe: GaussianProbe
    eta: float = Field(gt=0)
    name: str = ""

    @model_validator(mode="after")
    def _check_pattern(self) -> Self:
        check_state_labels(self.system, self.rho)
        signs = tuple(mode.sign for mode in self.modes)
        if signs != PHASE_MATCHING:
            raise ConfigurationError(
                f"Modes must follow the (+, -, +) phase matching pattern, got {signs}"
            )
        return self

    @property
    def frequencies(self) -> tuple[float, float, float]:
        first, second, third = self.modes
        return first.frequency, second.frequency, third.frequency

    @property
    def field_product(self) -> complex:
        """ℰ1 ℰ2* ℰ3 for the phase-matched pattern."""
        product = 1.0 + 0j
        for mode in self.modes:
            product *= mode.signed_amplitude
        return product

    def detuning(self, omega):
        return detuning(omega, *self.frequencies)

    def with_state(self, rho: DensityMatrix) -> "FWMScenario":
        return type(self)(**{**dict(self), "rho": rho})
