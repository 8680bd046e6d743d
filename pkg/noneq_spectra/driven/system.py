from typing import Mapping

from pydantic import BaseModel, ConfigDict, Field, model_validator

from noneq_spectra.core.system import LevelSystem
from noneq_spectra.errors.base import ConfigurationError
from noneq_spectra.typing_support import Self

DRIVEN_LABELS = ("a", "b", "c")


class DrivenSystem(BaseModel):
    """
    Three-level system whose lower pair a↔b is driven by ℰ₀cos(ω₀t).

    ``rabi`` is Ω = μℰ₀/2 and ``drive_frequency`` is ω₀, both in eV. The probe
    couples a→c and b→c through ``system.dipole_lowering``.
    """

    model_config = ConfigDict(frozen=True)

    system: LevelSystem
    rabi: float = Field(default=0.0, ge=0)
    drive_frequency: float = Field(default=0.0, ge=0)

    @model_validator(mode="after")
    def _check_levels(self) -> Self:
        if self.system.labels != DRIVEN_LABELS:
            raise ConfigurationError(
                f"Driven system levels must be labelled {DRIVEN_LABELS}, got {self.system.labels}"
            )
        omega_a, omega_b, omega_c = self.system.energies
        if not omega_a <= omega_b < omega_c:
            raise ConfigurationError("Driven system needs ω_a ≤ ω_b < ω_c")
        if self.system.dipole_lowering[0, 1] != 0:
            raise ConfigurationError("The probe must not couple a and b directly")
        return self

    @classmethod
    def from_parameters(
        cls,
        omega_b: float,
        omega_c: float,
        temperature: float,
        gamma_ba: float,
        gamma_ca: float,
        gamma_cb: float,
        rabi: float = 0.0,
        drive_frequency: float = 0.0,
        dipoles: Mapping[str, complex] | None = None,
        omega_a: float = 0.0,
    ) -> "DrivenSystem":
        dipoles = {"a": 1.0, "b": 1.0, **(dipoles or {})}
        system = LevelSystem.from_transitions(
            DRIVEN_LABELS,
            (omega_a, omega_b, omega_c),
            dipoles={("a", "c"): dipoles["a"], ("b", "c"): dipoles["b"]},
            decay_rates={("b", "a"): gamma_ba, ("c", "a"): gamma_ca, ("c", "b"): gamma_cb},
            temperature=temperature,
        )
        return cls(system=system, rabi=rabi, drive_frequency=drive_frequency)

    @property
    def omega_ba(self) -> float:
        return self.system.energies[1] - self.system.energies[0]

    @property
    def omega_ca(self) -> float:
        return self.system.energies[2] - self.system.energies[0]

    @property
    def omega_cb(self) -> float:
        return self.system.energies[2] - self.system.energies[1]

    @property
    def delta_ab(self) -> float:
        return self.drive_frequency - self.omega_ba

    @property
    def delta_ac(self) -> float:
        return self.drive_frequency - self.omega_ca

    @property
    def is_driven(self) -> bool:
        return self.rabi != 0 or self.drive_frequency != 0

    def rates(self) -> dict[tuple[str, str], float]:
        """All six γ_ij, upward ones from detailed balance."""
        return {
            (source, target): self.system.transition_rate(source, target)
            for source in DRIVEN_LABELS
            for target in DRIVEN_LABELS
            if source != target
        }

    def with_drive(
        self, rabi: float | None = None, drive_frequency: float | None = None
    ) -> "DrivenSystem":
        return DrivenSystem(
            system=self.system,
            rabi=self.rabi if rabi is None else rabi,
            drive_frequency=self.drive_frequency if drive_frequency is None else drive_frequency,
        )
