import math
from types import MappingProxyType
from typing import Any, Mapping

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from noneq_spectra.errors.base import ConfigurationError, LabelError
from noneq_spectra.typing_support import Self


def _frozen_array(value: Any, dtype) -> np.ndarray:
    array = np.array(value, dtype=dtype)
    array.flags.writeable = False
    return array


class LevelSystem(BaseModel):
    """
    N-level system in its eigenbasis (eV, ħ = 1).

    ``dipole_lowering[i, c]`` is the lowering element μ_ic of |i⟩⟨c| and may be
    nonzero only when ω_c > ω_i. ``decay_rates`` lists downward channels keyed
    by ``(from_label, to_label)``; upward rates follow from detailed balance.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    labels: tuple[str, ...]
    energies: tuple[float, ...]
    dipole_lowering: np.ndarray
    decay_rates: Mapping[tuple[str, str], float] = Field(
        default_factory=dict, validate_default=True
    )
    temperature: float | None = None

    @field_validator("dipole_lowering", mode="before")
    @classmethod
    def _as_complex_matrix(cls, value):
        return _frozen_array(value, complex)

    @field_validator("decay_rates", mode="after")
    @classmethod
    def _freeze_rates(cls, value):
        return MappingProxyType(dict(value))

    @model_validator(mode="after")
    def _check_structure(self) -> Self:
        n = len(self.labels)
        if n < 2:
            raise ConfigurationError("A level system needs at least 2 levels")
        if len(set(self.labels)) != n:
            raise ConfigurationError(f"Duplicate state labels in {self.labels}")
        if len(self.energies) != n:
            raise ConfigurationError(
                f"Got {len(self.energies)} energies for {n} labels"
            )
        if not all(math.isfinite(energy) for energy in self.energies):
            raise ConfigurationError("Level energies must be finite")
        if self.dipole_lowering.shape != (n, n):
            raise ConfigurationError(
                f"Dipole matrix must be {n}x{n}, got {self.dipole_lowering.shape}"
            )
        energies = np.asarray(self.energies)
        allowed = energies[None, :] > energies[:, None]
        if np.any(self.dipole_lowering[~allowed] != 0):
            raise ConfigurationError(
                "Lowering dipole entries must connect a higher state to a lower one"
            )
        for (source, target), rate in self.decay_rates.items():
            self.index(source)
            self.index(target)
            if source == target:
                raise ConfigurationError(f"Decay channel {source}->{target} is a loop")
            if not rate >= 0:
                raise ConfigurationError(
                    f"Decay rate {source}->{target} must be nonnegative, got {rate}"
                )
        if self.temperature is not None and not self.temperature > 0:
            raise ConfigurationError(
                f"Temperature must be positive, got {self.temperature}"
            )
        return self

    @classmethod
    def from_transitions(
        cls,
        labels: tuple[str, ...] | list[str],
        energies: tuple[float, ...] | list[float],
        dipoles: Mapping[tuple[str, str], complex] | None = None,
        decay_rates: Mapping[tuple[str, str], float] | None = None,
        temperature: float | None = None,
    ) -> "LevelSystem":
        """
        Build a system from dipole entries keyed by (lower, upper) label pairs.

        Args:
            labels: state names in any order
            energies: ω_i in eV, aligned with labels
            dipoles: μ_ic for each allowed (lower i, upper c) transition
            decay_rates: downward γ keyed by (from, to)
            temperature: k_BT in eV
        """
        labels = tuple(labels)
        positions = {label: idx for idx, label in enumerate(labels)}
        matrix = np.zeros((len(labels), len(labels)), dtype=complex)
        for (lower, upper), value in (dipoles or {}).items():
            if lower not in positions or upper not in positions:
                raise LabelError(f"Unknown transition {lower}-{upper}")
            matrix[positions[lower], positions[upper]] = value
        return cls(
            labels=labels,
            energies=tuple(float(e) for e in energies),
            dipole_lowering=matrix,
            decay_rates=dict(decay_rates or {}),
            temperature=temperature,
        )

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise LabelError(
                f"Unknown state {label!r}, expected one of {self.labels}"
            ) from None

    def energy(self, label: str) -> float:
        return self.energies[self.index(label)]

    @property
    def energy_array(self) -> np.ndarray:
        return np.asarray(self.energies, dtype=float)

    def bohr_matrix(self) -> np.ndarray:
        energies = self.energy_array
        return energies[:, None] - energies[None, :]

    def total_dipole(self) -> np.ndarray:
        return self.dipole_lowering + self.dipole_lowering.conj().T

    def dipole(self, i: str, j: str) -> complex:
        return complex(self.total_dipole()[self.index(i), self.index(j)])

    def listed_rate(self, source: str, target: str) -> float:
        self.index(source)
        self.index(target)
        return float(self.decay_rates.get((source, target), 0.0))

    def upward_rate(self, source: str, target: str) -> float:
        """Detailed-balance rate γ_ij = γ_ji·e^{-ω_ji/k_BT} for ω_j > ω_i."""
        if self.energy(target) <= self.energy(source):
            raise ConfigurationError(f"{source}->{target} is not an upward channel")
        reverse = self.listed_rate(target, source)
        if not reverse:
            return 0.0
        if self.temperature is None:
            raise ConfigurationError(
                f"Upward rate {source}->{target} needs a temperature for detailed balance"
            )
        gap = self.energy(target) - self.energy(source)
        return reverse * math.exp(-gap / self.temperature)

    def transition_rate(self, source: str, target: str) -> float:
        """Rate γ_{source→target}; unlisted upward channels come from detailed balance."""
        listed = self.listed_rate(source, target)
        if listed or self.energy(target) <= self.energy(source):
            return listed
        return self.upward_rate(source, target)

    def with_zero_dipoles(self) -> "LevelSystem":
        return self.model_copy(
            update={"dipole_lowering": _frozen_array(np.zeros_like(self.dipole_lowering), complex)}
        )


def bohr_frequency(system: LevelSystem, i: str, j: str) -> float:
    return system.energy(i) - system.energy(j)
