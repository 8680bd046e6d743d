from noneq_spectra.utils.grid import default_grid, optical_transitions
from noneq_spectra.utils.parallel import ordered_map
from noneq_spectra.utils.peaks import (
    Peak,
    find_peaks,
    full_width_half_maximum,
    oscillation_count,
    peak_area,
    peak_positions,
)

__all__ = [
    "Peak",
    "default_grid",
    "find_peaks",
    "full_width_half_maximum",
    "optical_transitions",
    "ordered_map",
    "oscillation_count",
    "peak_area",
    "peak_positions",
]
