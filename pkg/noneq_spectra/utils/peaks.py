from typing import NamedTuple

import numpy as np
from scipy import integrate, signal

from noneq_spectra.response.trace import SignalTrace


class Peak(NamedTuple):
    omega: float
    height: float
    index: int


def find_peaks(
    trace: SignalTrace, min_relative_height: float = 0.05, magnitude: bool = True
) -> list[Peak]:
    """
    Local maxima of |S| (or S) above ``min_relative_height`` of the global maximum.

    Returns peaks ordered by decreasing height.
    """
    values = np.abs(trace.values) if magnitude else trace.values
    top = float(np.max(values)) if values.size else 0.0
    if top <= 0:
        return []
    indices, _ = signal.find_peaks(values, height=min_relative_height * top)
    peaks = [
        Peak(omega=float(trace.omega[i]), height=float(values[i]), index=int(i))
        for i in indices
    ]
    return sorted(peaks, key=lambda peak: peak.height, reverse=True)


def peak_positions(
    trace: SignalTrace,
    count: int | None = None,
    min_relative_height: float = 0.05,
    magnitude: bool = True,
) -> list[float]:
    """Frequencies of the ``count`` strongest peaks, in increasing ω."""
    peaks = find_peaks(trace, min_relative_height, magnitude)
    if count is not None:
        peaks = peaks[:count]
    return sorted(peak.omega for peak in peaks)


def line_positions(
    trace: SignalTrace, min_relative_height: float = 0.0, merge_width: float = 0.006
) -> list[float]:
    """
    Centers of resonance lines in increasing ω.

    Maxima of |S| closer than ``merge_width`` to their neighbour belong to one
    line, so a split or dispersive line counts once wherever its lobes fall.
    """
    positions = sorted(peak.omega for peak in find_peaks(trace, min_relative_height))
    lines: list[list[float]] = []
    for omega in positions:
        if lines and omega - lines[-1][-1] <= merge_width:
            lines[-1].append(omega)
        else:
            lines.append([omega])
    return [float(np.mean(line)) for line in lines]


def full_width_half_maximum(trace: SignalTrace, peak: Peak) -> float:
    values = np.abs(trace.values)
    widths, _, left, right = signal.peak_widths(values, [peak.index], rel_height=0.5)
    samples = np.arange(trace.omega.size)
    # interpolated sample positions back onto the (possibly nonuniform) grid
    return float(
        np.interp(right[0], samples, trace.omega) - np.interp(left[0], samples, trace.omega)
    )


def peak_area(trace: SignalTrace, lower: float, upper: float) -> float:
    inside = (trace.omega >= lower) & (trace.omega <= upper)
    return float(integrate.trapezoid(np.abs(trace.values[inside]), trace.omega[inside]))


def oscillation_count(values) -> int:
    """Number of sign changes of the mean-removed series."""
    centered = np.asarray(values, dtype=float)
    centered = centered - centered.mean()
    signs = np.sign(centered)
    signs = signs[signs != 0]
    return int(np.count_nonzero(signs[1:] != signs[:-1]))
