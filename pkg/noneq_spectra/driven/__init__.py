from noneq_spectra.driven.dressed import DressedSpectrum, dressed_frequencies, resolvent_poles
from noneq_spectra.driven.liouvillian import (
    DRIVEN_INDEX,
    Liouvillian,
    build_liouvillian,
    kernel_dimension,
    steady_state,
)
from noneq_spectra.driven.propagator import (
    Resolvent,
    frame_transform,
    lab_frame_state,
    lab_liouvillian,
    lab_time_propagator,
    rotating_propagator,
    rotating_time_propagator,
)
from noneq_spectra.driven.signal import driven_equilibrium_signal, driven_signal
from noneq_spectra.driven.sweep import (
    DRIVE_AXES,
    SteadyStateTable,
    steady_state_sweep,
    with_axis_value,
)
from noneq_spectra.driven.system import DRIVEN_LABELS, DrivenSystem

__all__ = [
    "DRIVE_AXES",
    "DRIVEN_INDEX",
    "DRIVEN_LABELS",
    "DressedSpectrum",
    "DrivenSystem",
    "Liouvillian",
    "Resolvent",
    "SteadyStateTable",
    "build_liouvillian",
    "dressed_frequencies",
    "driven_equilibrium_signal",
    "driven_signal",
    "frame_transform",
    "kernel_dimension",
    "lab_frame_state",
    "lab_liouvillian",
    "lab_time_propagator",
    "resolvent_poles",
    "rotating_propagator",
    "rotating_time_propagator",
    "steady_state",
    "steady_state_sweep",
    "with_axis_value",
]
