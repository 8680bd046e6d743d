import dataclasses
import os

THREADS_ENV_VAR = "NONEQ_SPECTRA_THREADS"

DEFAULT_GRID_POINTS = 2001
DEFAULT_GRID_PADDING = 20.0
EIGEN_CONDITION_LIMIT = 1e8
STEADY_STATE_RESIDUAL = 1e-10
KERNEL_TOLERANCE = 1e-12
HERMITIAN_TOLERANCE = 1e-12
RWA_WINDOW = 1.0


def threads_from_env() -> int:
    value = os.environ.get(THREADS_ENV_VAR)
    if not value:
        return 1
    try:
        return max(1, int(value))
    except ValueError:
        return 1


@dataclasses.dataclass(frozen=True)
class NumericsConfig:
    grid_points: int = DEFAULT_GRID_POINTS
    grid_padding: float = DEFAULT_GRID_PADDING
    eigen_condition_limit: float = EIGEN_CONDITION_LIMIT
    steady_state_residual: float = STEADY_STATE_RESIDUAL
    kernel_tolerance: float = KERNEL_TOLERANCE
    hermitian_tolerance: float = HERMITIAN_TOLERANCE
    rwa_window: float = RWA_WINDOW
    quadrature_abs_tolerance: float = 1e-10
    quadrature_rel_tolerance: float = 1e-8
    quadrature_limit: int = 400
    threads: int = dataclasses.field(default_factory=threads_from_env)


DEFAULT_CONFIG = NumericsConfig()
