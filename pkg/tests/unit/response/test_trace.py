import numpy as np
import pytest

from noneq_spectra.errors.base import ArgumentError, NumericalError
from noneq_spectra.response.trace import (
    COH,
    POP,
    SignalGrid,
    SignalTrace,
    frequency_grid,
)


@pytest.mark.parametrize("omega", [[], [0.1, 0.1], [0.3, 0.2, 0.4], [[0.1, 0.2]]])
def test_frequency_grid_rejects_invalid_grids_edge_case(omega):
    # Act & Assert
    with pytest.raises(ArgumentError):
        frequency_grid(omega)


def test_frequency_grid_single_point_sanity():
    # Act & Assert
    assert np.array_equal(frequency_grid(0.5), [0.5])


def test_signal_trace_rejects_non_finite_values_edge_case():
    # Act & Assert
    with pytest.raises(NumericalError):
        SignalTrace(omega=[0.1, 0.2], values=[1.0, np.inf])
    with pytest.raises(ArgumentError):
        SignalTrace(omega=[0.1, 0.2], values=[1.0])


def test_signal_trace_addition_sanity():
    # Arrange
    first = SignalTrace(omega=[0.1, 0.2, 0.3], values=[1.0, -2.0, 3.0], component=POP)
    second = SignalTrace(omega=[0.1, 0.2, 0.3], values=[0.5, 0.5, 0.5], component=COH)

    # Act
    total = first + second

    # Assert
    assert np.array_equal(total.values, [1.5, -1.5, 3.5])
    assert total.relabel("total").component == "total"
    assert np.array_equal(first.magnitude().values, [1.0, 2.0, 3.0])
    assert np.array_equal(first.peak_normalized(), [1 / 3, -2 / 3, 1.0])


def test_signal_trace_addition_on_mismatched_grids_edge_case():
    # Arrange
    first = SignalTrace(omega=[0.1, 0.2], values=[1.0, 2.0])
    second = SignalTrace(omega=[0.1, 0.25], values=[1.0, 2.0])

    # Act & Assert
    with pytest.raises(ArgumentError):
        first + second


def test_signal_trace_value_at_interpolates_sanity():
    # Arrange
    trace = SignalTrace(omega=[0.0, 1.0], values=[2.0, 4.0])

    # Act & Assert
    assert trace.value_at(0.25) == pytest.approx(2.5)


def test_zero_trace_peak_normalized_edge_case():
    # Arrange
    trace = SignalTrace(omega=[0.0, 1.0], values=[0.0, 0.0])

    # Act & Assert
    assert np.array_equal(trace.peak_normalized(), [0.0, 0.0])


def test_signal_grid_from_traces_sanity():
    # Arrange
    traces = [
        SignalTrace(omega=[0.1, 0.2], values=[row, row + 1.0], scenario="demo")
        for row in (0.0, 10.0, 20.0)
    ]

    # Act
    grid = SignalGrid.from_traces("phi2", [-1.0, 0.0, 1.0], traces)

    # Assert
    assert grid.values.shape == (3, 2)
    assert grid.values[2, 1] == 21.0
    assert grid.scenario == "demo"
    with pytest.raises(ArgumentError):
        SignalGrid(omega=[0.1, 0.2], axis="phi2", axis_values=[0.0], values=[[1.0]])
