import logging

import numpy as np
from numpy.typing import ArrayLike
from scipy import linalg

from noneq_spectra.config import DEFAULT_CONFIG, NumericsConfig
from noneq_spectra.core.density import DensityMatrix
from noneq_spectra.driven.liouvillian import DRIVEN_INDEX, Liouvillian
from noneq_spectra.errors.base import ArgumentError, SingularityError

logger = logging.getLogger(__name__)

# |(ω + iη) - iλ| at or below this (relative to max(1, |ω|)) counts as hitting a pole
POLE_TOLERANCE = 1e-14


class Resolvent:
    """
    G̃(ω) = ((ω + iη)I - iL̃)⁻¹ evaluated over frequency grids.

    Uses the eigendecomposition of L̃ when its eigenvectors are well
    conditioned and a direct solve per frequency otherwise.
    """

    def __init__(
        self,
        liouvillian: Liouvillian,
        eta: float = 0.0,
        config: NumericsConfig = DEFAULT_CONFIG,
        method: str | None = None,
    ):
        if eta < 0:
            raise ArgumentError(f"Resolvent broadening must be nonnegative, got {eta}")
        self.liouvillian = liouvillian
        self.eta = eta
        values, vectors, inverse, condition = liouvillian.eigensystem
        if method is None:
            method = "eigen" if condition <= config.eigen_condition_limit else "direct"
        if method not in ("eigen", "direct"):
            raise ArgumentError(f"Unknown resolvent method {method!r}")
        self.method = method
        logger.debug("Resolvent route %s (eigenvector condition %.3e)", method, condition)

    def _check_poles(self, omega: np.ndarray):
        values = self.liouvillian.eigensystem[0]
        distance = np.abs(
            (omega[..., None] + 1j * self.eta) - 1j * values[None, :]
        ).min(axis=-1)
        scale = np.maximum(1.0, np.abs(omega))
        if np.any(distance <= POLE_TOLERANCE * scale):
            hit = float(omega.ravel()[np.argmin((distance / scale).ravel())])
            raise SingularityError(f"Resolvent is singular at ω = {hit!r}")

    def _direct(self, frequency: float) -> np.ndarray:
        size = self.liouvillian.size
        shifted = (frequency + 1j * self.eta) * np.eye(size) - 1j * self.liouvillian.matrix
        try:
            return np.linalg.solve(shifted, np.eye(size))
        except np.linalg.LinAlgError:
            raise SingularityError(f"Resolvent is singular at ω = {frequency!r}") from None

    def matrix(self, omega: float) -> np.ndarray:
        grid = np.asarray(omega, dtype=float)
        self._check_poles(grid.reshape(1))
        if self.method == "direct":
            return self._direct(float(grid))
        values, vectors, inverse, _ = self.liouvillian.eigensystem
        weights = 1.0 / ((float(grid) + 1j * self.eta) - 1j * values)
        return (vectors * weights) @ inverse

    def element(
        self, row: tuple[str, str], col: tuple[str, str], omega: ArrayLike
    ) -> np.ndarray:
        """G̃_{row;col} over a grid of frequencies."""
        index = self.liouvillian.index
        k, m = index.flat(*row), index.flat(*col)
        grid = np.atleast_1d(np.asarray(omega, dtype=float))
        self._check_poles(grid)
        if self.method == "direct":
            return np.array([self._direct(frequency)[k, m] for frequency in grid])
        values, vectors, inverse, _ = self.liouvillian.eigensystem
        weights = 1.0 / ((grid[:, None] + 1j * self.eta) - 1j * values[None, :])
        return weights @ (vectors[k, :] * inverse[:, m])


def rotating_propagator(
    liouvillian: Liouvillian,
    omega: float,
    eta: float = 0.0,
    config: NumericsConfig = DEFAULT_CONFIG,
    method: str | None = None,
) -> np.ndarray:
    return Resolvent(liouvillian, eta, config, method).matrix(omega)


def frame_phases(t: float, omega0: float) -> np.ndarray:
    phase = np.exp(1j * omega0 * t)
    return np.array(
        [1.0, 1.0, 1.0, phase, phase.conjugate(), phase, phase.conjugate(), 1.0, 1.0]
    )


def frame_transform(t: float, omega0: float) -> np.ndarray:
    """U(t) with ρ(t) = U(t)ρ̃(t); the ab and ac coherences rotate at ω₀."""
    return np.diag(frame_phases(t, omega0))


def lab_liouvillian(liouvillian: Liouvillian, t: float) -> np.ndarray:
    """L(t) = U(t)L̃U⁻¹(t) + U̇(t)U⁻¹(t)."""
    phases = frame_phases(t, liouvillian.drive_frequency)
    rotated = phases[:, None] * liouvillian.matrix / phases[None, :]
    generator = np.diag(
        1j * liouvillian.drive_frequency * np.array([0, 0, 0, 1, -1, 1, -1, 0, 0])
    )
    return rotated + generator


def rotating_time_propagator(liouvillian: Liouvillian, t: float) -> np.ndarray:
    """exp(L̃t), the rotating-frame evolution over an interval t."""
    return linalg.expm(liouvillian.matrix * t)


def lab_time_propagator(liouvillian: Liouvillian, t: float, t_start: float) -> np.ndarray:
    omega0 = liouvillian.drive_frequency
    return (
        frame_transform(t, omega0)
        @ rotating_time_propagator(liouvillian, t - t_start)
        @ frame_transform(-t_start, omega0)
    )


def lab_frame_state(state: DensityMatrix, tau0: float, omega0: float) -> DensityMatrix:
    """ρ_nss(τ₀) = U(τ₀)ρ̃_ss; populations stay put while the driven coherences rotate."""
    vector = DRIVEN_INDEX.vectorize(state.matrix)
    rotated = frame_phases(tau0, omega0) * vector
    return DensityMatrix(
        labels=state.labels,
        matrix=DRIVEN_INDEX.matrix(rotated),
        normalization=state.normalization,
    )
