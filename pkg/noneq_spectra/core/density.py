import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from noneq_spectra.config import HERMITIAN_TOLERANCE
from noneq_spectra.core.system import LevelSystem
from noneq_spectra.errors.base import (
    ArgumentError,
    ConfigurationError,
    InvalidDensityMatrix,
    LabelError,
)
from noneq_spectra.typing_support import Self


class DensityMatrix(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    labels: tuple[str, ...]
    matrix: np.ndarray
    normalization: float = 1.0

    @field_validator("matrix", mode="before")
    @classmethod
    def _as_complex_matrix(cls, value):
        array = np.array(value, dtype=complex)
        array.flags.writeable = False
        return array

    @model_validator(mode="after")
    def _check_invariants(self) -> Self:
        n = len(self.labels)
        if self.matrix.shape != (n, n):
            raise InvalidDensityMatrix(
                f"Density matrix must be {n}x{n}, got {self.matrix.shape}"
            )
        if not np.all(np.isfinite(self.matrix)):
            raise InvalidDensityMatrix("Density matrix entries must be finite")
        deviation = np.max(np.abs(self.matrix - self.matrix.conj().T))
        if deviation > HERMITIAN_TOLERANCE:
            raise InvalidDensityMatrix(
                f"Density matrix is not Hermitian (max deviation {deviation:.3e})"
            )
        trace = np.trace(self.matrix).real
        if abs(trace - self.normalization) > HERMITIAN_TOLERANCE:
            raise InvalidDensityMatrix(
                f"Trace {trace!r} differs from declared normalization {self.normalization!r}"
            )
        diagonal = np.diag(self.matrix)
        if np.any(np.abs(diagonal.imag) > HERMITIAN_TOLERANCE) or np.any(
            diagonal.real < -HERMITIAN_TOLERANCE
        ):
            raise InvalidDensityMatrix("Populations must be real and nonnegative")
        return self

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise LabelError(f"Unknown state {label!r}") from None

    def __getitem__(self, pair: tuple[str, str]) -> complex:
        i, j = pair
        return complex(self.matrix[self.index(i), self.index(j)])

    def population_part(self) -> "DensityMatrix":
        diagonal = np.diag(np.diag(self.matrix).real)
        return DensityMatrix(
            labels=self.labels,
            matrix=diagonal,
            normalization=float(np.trace(diagonal).real),
        )

    def coherence_part(self) -> "DensityMatrix":
        off_diagonal = self.matrix - np.diag(np.diag(self.matrix))
        return DensityMatrix(labels=self.labels, matrix=off_diagonal, normalization=0.0)

    def purity(self) -> float:
        return float(np.trace(self.matrix @ self.matrix).real)

    def nonzero_elements(self) -> list[tuple[int, int, complex]]:
        rows, cols = np.nonzero(self.matrix)
        return [(int(a), int(b), complex(self.matrix[a, b])) for a, b in zip(rows, cols)]


def check_state_labels(system: LevelSystem, state: DensityMatrix):
    if state.labels != system.labels:
        raise ArgumentError(
            f"State labels {state.labels} do not match system labels {system.labels}"
        )


def density_matrix(
    system: LevelSystem, matrix, normalization: float = 1.0
) -> DensityMatrix:
    return DensityMatrix(
        labels=system.labels, matrix=matrix, normalization=normalization
    )


def thermal_state(system: LevelSystem) -> DensityMatrix:
    if system.temperature is None:
        raise ConfigurationError("Thermal state requires a temperature")
    energies = system.energy_array
    # shift by the ground energy; Z cancels the offset
    weights = np.exp(-(energies - energies.min()) / system.temperature)
    return density_matrix(system, np.diag(weights / weights.sum()))


def population_state(system: LevelSystem, i: str) -> DensityMatrix:
    matrix = np.zeros((system.size, system.size), dtype=complex)
    matrix[system.index(i), system.index(i)] = 1.0
    return density_matrix(system, matrix)


def maximally_coherent_state(system: LevelSystem, i: str, j: str) -> DensityMatrix:
    if i == j:
        raise ArgumentError("A maximally coherent state needs two distinct levels")
    first, second = system.index(i), system.index(j)
    matrix = np.zeros((system.size, system.size), dtype=complex)
    for row in (first, second):
        for col in (first, second):
            matrix[row, col] = 0.5
    return density_matrix(system, matrix)
