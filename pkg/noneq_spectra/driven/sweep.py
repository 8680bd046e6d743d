import dataclasses
import logging
from typing import Literal

import numpy as np

from noneq_spectra.config import DEFAULT_CONFIG, NumericsConfig
from noneq_spectra.core.density import DensityMatrix
from noneq_spectra.driven.liouvillian import build_liouvillian, steady_state
from noneq_spectra.driven.system import DrivenSystem
from noneq_spectra.errors.base import ArgumentError
from noneq_spectra.utils.parallel import ordered_map

logger = logging.getLogger(__name__)

DriveAxis = Literal["omega0", "Omega"]
DRIVE_AXES = ("omega0", "Omega")


def with_axis_value(driven: DrivenSystem, axis: str, value: float) -> DrivenSystem:
    if axis == "omega0":
        return driven.with_drive(drive_frequency=value)
    if axis == "Omega":
        return driven.with_drive(rabi=value)
    raise ArgumentError(f"Unknown drive axis {axis!r}, expected one of {DRIVE_AXES}")


@dataclasses.dataclass(frozen=True)
class SteadyStateTable:
    axis: str
    axis_values: np.ndarray
    states: tuple[DensityMatrix, ...]

    def column(self, k: str, l: str) -> np.ndarray:
        return np.array([state[(k, l)] for state in self.states])

    def rows(self) -> list[dict[str, float]]:
        return [
            {
                self.axis: float(value),
                "rho_aa": state[("a", "a")].real,
                "rho_bb": state[("b", "b")].real,
                "rho_cc": state[("c", "c")].real,
                "re_rho_ab": state[("a", "b")].real,
                "im_rho_ab": state[("a", "b")].imag,
            }
            for value, state in zip(self.axis_values, self.states)
        ]


def steady_state_sweep(
    driven: DrivenSystem,
    axis: DriveAxis,
    values,
    config: NumericsConfig = DEFAULT_CONFIG,
) -> SteadyStateTable:
    """Rotating-frame steady state for each drive parameter value, rebuilt per point."""
    values = np.asarray(values, dtype=float)
    points = [with_axis_value(driven, axis, float(value)) for value in values]
    states = ordered_map(
        lambda point: steady_state(build_liouvillian(point), config),
        points,
        config.threads,
    )
    logger.debug("Steady-state sweep over %s: %d points", axis, values.size)
    return SteadyStateTable(axis=axis, axis_values=values, states=tuple(states))
