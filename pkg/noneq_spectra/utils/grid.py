import numpy as np

from noneq_spectra.config import DEFAULT_GRID_PADDING, DEFAULT_GRID_POINTS
from noneq_spectra.core.system import LevelSystem
from noneq_spectra.errors.base import ArgumentError, ConfigurationError


def optical_transitions(system: LevelSystem) -> list[float]:
    """Positive Bohr frequencies ω_ci of dipole-allowed transitions."""
    bohr = system.bohr_matrix()
    lower, upper = np.nonzero(system.dipole_lowering)
    return sorted(float(bohr[c, i]) for i, c in zip(lower, upper))


def default_grid(
    system: LevelSystem,
    width: float,
    points: int = DEFAULT_GRID_POINTS,
    padding: float = DEFAULT_GRID_PADDING,
) -> np.ndarray:
    """Uniform grid covering every optical transition with ``padding`` widths to spare."""
    if not width > 0:
        raise ArgumentError(f"Grid padding width must be positive, got {width}")
    if points < 1:
        raise ArgumentError("A frequency grid needs at least one point")
    transitions = optical_transitions(system)
    if not transitions:
        raise ConfigurationError("System has no dipole-allowed transitions")
    return np.linspace(
        transitions[0] - padding * width, transitions[-1] + padding * width, points
    )
