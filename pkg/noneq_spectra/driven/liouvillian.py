import dataclasses
import logging
from functools import cached_property

import numpy as np

from noneq_spectra.config import DEFAULT_CONFIG, NumericsConfig
from noneq_spectra.core.density import DensityMatrix
from noneq_spectra.core.liouville import LiouvilleIndex
from noneq_spectra.driven.system import DRIVEN_LABELS, DrivenSystem
from noneq_spectra.errors.base import DegeneracyError, NumericalError

logger = logging.getLogger(__name__)

DRIVEN_INDEX = LiouvilleIndex(DRIVEN_LABELS)


@dataclasses.dataclass(frozen=True)
class Liouvillian:
    """Rotating-frame generator L̃ with ρ̃̇ = L̃ρ̃ in the (aa, bb, cc, ab, ba, ac, ca, bc, cb) basis."""

    matrix: np.ndarray
    drive_frequency: float = 0.0
    delta_ab: float = 0.0
    delta_ac: float = 0.0
    index: LiouvilleIndex = DRIVEN_INDEX

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=complex)
        matrix.flags.writeable = False
        object.__setattr__(self, "matrix", matrix)

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    def element(self, row: tuple[str, str], col: tuple[str, str]) -> complex:
        return complex(self.matrix[self.index.flat(*row), self.index.flat(*col)])

    @cached_property
    def norm(self) -> float:
        return float(np.linalg.norm(self.matrix, 2))

    @cached_property
    def eigensystem(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, float]:
        """Eigenvalues, right eigenvectors, their inverse and the eigenvector condition number."""
        values, vectors = np.linalg.eig(self.matrix)
        condition = float(np.linalg.cond(vectors))
        if np.isfinite(condition):
            inverse = np.linalg.inv(vectors)
        else:
            inverse = np.full_like(vectors, np.nan)
        return values, vectors, inverse, condition

    def trace_functional(self) -> np.ndarray:
        """1†L̃: zero for a trace-preserving generator."""
        identity = np.zeros(self.size)
        identity[self.index.population_indices()] = 1.0
        return identity @ self.matrix


def build_liouvillian(driven: DrivenSystem) -> Liouvillian:
    rates = driven.rates()
    rabi = driven.rabi
    omega_bc = driven.system.energies[1] - driven.system.energies[2]
    delta_ab, delta_ac = driven.delta_ab, driven.delta_ac

    def g(source: str, target: str) -> float:
        return rates[(source, target)]

    flat = DRIVEN_INDEX.flat
    aa, bb, cc = flat("a", "a"), flat("b", "b"), flat("c", "c")
    ab, ba, ac, ca, bc, cb = (
        flat("a", "b"),
        flat("b", "a"),
        flat("a", "c"),
        flat("c", "a"),
        flat("b", "c"),
        flat("c", "b"),
    )
    matrix = np.zeros((9, 9), dtype=complex)

    matrix[aa, ba] = 1j * rabi
    matrix[aa, ab] = -1j * rabi
    matrix[aa, aa] = -(g("a", "b") + g("a", "c"))
    matrix[aa, bb] = g("b", "a")
    matrix[aa, cc] = g("c", "a")

    matrix[bb, ba] = -1j * rabi
    matrix[bb, ab] = 1j * rabi
    matrix[bb, bb] = -(g("b", "a") + g("b", "c"))
    matrix[bb, aa] = g("a", "b")
    matrix[bb, cc] = g("c", "b")

    # not among the driven Bloch equations; fixed by trace conservation
    matrix[cc, aa] = g("a", "c")
    matrix[cc, bb] = g("b", "c")
    matrix[cc, cc] = -(g("c", "a") + g("c", "b"))

    dephasing_ab = 0.5 * (g("a", "b") + g("b", "a") + g("a", "c") + g("b", "c"))
    matrix[ab, ab] = -1j * delta_ab - dephasing_ab
    matrix[ab, bb] = 1j * rabi
    matrix[ab, aa] = -1j * rabi
    matrix[ba, ba] = 1j * delta_ab - dephasing_ab
    matrix[ba, bb] = -1j * rabi
    matrix[ba, aa] = 1j * rabi

    dephasing_ac = 0.5 * (g("a", "c") + g("c", "a") + g("a", "b") + g("c", "b"))
    matrix[ac, ac] = -1j * delta_ac - dephasing_ac
    matrix[ac, bc] = 1j * rabi
    matrix[ca, ca] = 1j * delta_ac - dephasing_ac
    matrix[ca, cb] = -1j * rabi

    dephasing_bc = 0.5 * (g("b", "c") + g("c", "b") + g("b", "a") + g("c", "a"))
    matrix[bc, bc] = -1j * omega_bc - dephasing_bc
    matrix[bc, ac] = 1j * rabi
    matrix[cb, cb] = 1j * omega_bc - dephasing_bc
    matrix[cb, ca] = -1j * rabi

    logger.debug(
        "Assembled Liouvillian: Omega=%g omega0=%g delta_ab=%g delta_ac=%g",
        rabi,
        driven.drive_frequency,
        delta_ab,
        delta_ac,
    )
    return Liouvillian(
        matrix=matrix,
        drive_frequency=driven.drive_frequency,
        delta_ab=delta_ab,
        delta_ac=delta_ac,
    )


def kernel_dimension(liouvillian: Liouvillian, tolerance: float) -> int:
    singular = np.linalg.svd(liouvillian.matrix, compute_uv=False)
    scale = max(float(singular[0]), 1.0) if singular.size else 1.0
    return int(np.count_nonzero(singular <= tolerance * scale))


def steady_state(
    liouvillian: Liouvillian, config: NumericsConfig = DEFAULT_CONFIG
) -> DensityMatrix:
    """
    Solve L̃ρ̃ = 0 with the first population row replaced by Σρ_ii = 1.

    Raises:
        DegeneracyError: the kernel of L̃ is not one-dimensional
        NumericalError: the solution leaves a residual above tolerance
    """
    dimension = kernel_dimension(liouvillian, config.kernel_tolerance)
    if dimension != 1:
        raise DegeneracyError(
            "Steady state is not unique" if dimension > 1 else "Liouvillian has no kernel",
            kernel_dimension=dimension,
        )
    index = liouvillian.index
    populations = index.population_indices()
    system_matrix = np.array(liouvillian.matrix)
    system_matrix[populations[0], :] = 0.0
    system_matrix[populations[0], populations] = 1.0
    rhs = np.zeros(liouvillian.size, dtype=complex)
    rhs[populations[0]] = 1.0
    vector = np.linalg.solve(system_matrix, rhs)

    residual = float(np.linalg.norm(liouvillian.matrix @ vector))
    logger.debug("Steady-state residual %.3e", residual)
    if residual > config.steady_state_residual:
        raise NumericalError(
            f"Steady-state residual {residual:.3e} exceeds {config.steady_state_residual:.1e}"
        )
    matrix = index.matrix(vector)
    matrix = 0.5 * (matrix + matrix.conj().T)
    return DensityMatrix(labels=index.labels, matrix=matrix)
