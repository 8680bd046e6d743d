import dataclasses

import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from noneq_spectra.errors.base import ArgumentError, NumericalError
from noneq_spectra.typing_support import Self

POP = "pop"
COH = "coh"
TOTAL = "total"
EQ = "eq"


def _frozen(value, dtype=float) -> np.ndarray:
    array = np.array(value, dtype=dtype)
    array.flags.writeable = False
    return array


def frequency_grid(omega) -> np.ndarray:
    grid = np.atleast_1d(np.asarray(omega, dtype=float))
    if grid.ndim != 1 or grid.size == 0:
        raise ArgumentError("Frequency grid must be a nonempty 1D sequence")
    if grid.size > 1 and np.any(np.diff(grid) <= 0):
        raise ArgumentError("Frequency grid must be strictly increasing")
    return grid


class SignalTrace(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    omega: np.ndarray
    values: np.ndarray
    component: str = TOTAL
    eta: float = 0.0
    scenario: str = ""

    @field_validator("omega", "values", mode="before")
    @classmethod
    def _as_float_array(cls, value):
        return _frozen(value)

    @model_validator(mode="after")
    def _check_grid(self) -> Self:
        frequency_grid(self.omega)
        if self.values.shape != self.omega.shape:
            raise ArgumentError(
                f"Signal has {self.values.shape} values for {self.omega.shape} grid points"
            )
        if not np.all(np.isfinite(self.values)):
            raise NumericalError(f"Non-finite values in {self.component} signal")
        return self

    def __add__(self, other: "SignalTrace") -> "SignalTrace":
        if not np.array_equal(self.omega, other.omega):
            raise ArgumentError("Cannot add signals on different grids")
        return self.model_copy(update={"values": _frozen(self.values + other.values)})

    def relabel(self, component: str) -> "SignalTrace":
        return self.model_copy(update={"component": component})

    def magnitude(self) -> "SignalTrace":
        return self.model_copy(update={"values": _frozen(np.abs(self.values))})

    def peak_normalized(self) -> np.ndarray:
        scale = np.max(np.abs(self.values))
        return self.values / scale if scale > 0 else self.values.copy()

    def value_at(self, omega: float) -> float:
        return float(np.interp(omega, self.omega, self.values))


class SignalGrid(BaseModel):
    """Signal over ω (columns) for each value of a swept parameter (rows)."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    omega: np.ndarray
    axis: str
    axis_values: np.ndarray
    values: np.ndarray
    component: str = TOTAL
    scenario: str = ""

    @field_validator("omega", "axis_values", "values", mode="before")
    @classmethod
    def _as_float_array(cls, value):
        return _frozen(value)

    @model_validator(mode="after")
    def _check_shape(self) -> Self:
        expected = (self.axis_values.size, self.omega.size)
        if self.values.shape != expected:
            raise ArgumentError(f"Grid values must have shape {expected}")
        return self

    @classmethod
    def from_traces(
        cls, axis: str, axis_values, traces: list[SignalTrace]
    ) -> "SignalGrid":
        first = traces[0]
        return cls(
            omega=first.omega,
            axis=axis,
            axis_values=axis_values,
            values=np.vstack([trace.values for trace in traces]),
            component=first.component,
            scenario=first.scenario,
        )


@dataclasses.dataclass(frozen=True)
class SignalSet:
    """Total signal with its population/coherence partition and optional extra parts."""

    total: SignalTrace
    pop: SignalTrace
    coh: SignalTrace
    parts: dict[str, SignalTrace] = dataclasses.field(default_factory=dict)

    def components(self) -> dict[str, SignalTrace]:
        return {TOTAL: self.total, POP: self.pop, COH: self.coh, **self.parts}
