import numpy as np
import pytest

from noneq_spectra.cli.output import (
    footer,
    output_stem,
    render_grid,
    render_traces,
    write_grid,
    write_rows,
    write_table,
    write_trace,
)
from noneq_spectra.errors.base import NumericalError
from noneq_spectra.response.trace import SignalGrid, SignalTrace

FOOTER = footer("abc123", "0.1.0")


def test_output_stem_sanity():
    # Act & Assert
    assert output_stem("fig1", "total") == "fig1"
    assert output_stem("fig1", "coh") == "fig1_coh"
    assert FOOTER == "# scenario_sha256=abc123 noneq_spectra=0.1.0"


def test_write_trace_format_sanity(tmp_path):
    # Arrange
    trace = SignalTrace(omega=[0.5, 0.75], values=[0.1, -2.0])

    # Act
    path = write_trace(tmp_path / "fig.csv", trace, FOOTER)

    # Assert
    assert path.read_text(encoding="utf-8") == (
        "omega_eV,signal\n"
        "0.5,0.10000000000000001\n"
        "0.75,-2\n"
        "# scenario_sha256=abc123 noneq_spectra=0.1.0\n"
    )


def test_write_grid_is_axis_major_sanity(tmp_path):
    # Arrange
    grid = SignalGrid(
        omega=[1.0, 2.0],
        axis="phi2",
        axis_values=[-5.0, 5.0],
        values=[[1.0, 2.0], [3.0, 4.0]],
    )

    # Act
    lines = write_grid(tmp_path / "grid.csv", grid, FOOTER).read_text().splitlines()

    # Assert
    assert lines[0] == "omega_eV,phi2,signal"
    assert lines[1:5] == ["1,-5,1", "2,-5,2", "1,5,3", "2,5,4"]


def test_write_rows_sanity(tmp_path):
    # Arrange
    records = [{"Omega": 0.0, "rho_aa": 0.6}, {"Omega": 0.1, "rho_aa": 0.5}]

    # Act
    lines = write_rows(tmp_path / "rows.csv", records, FOOTER).read_text().splitlines()

    # Assert
    assert lines[:3] == ["Omega,rho_aa", "0,0.59999999999999998", "0.10000000000000001,0.5"]


@pytest.mark.parametrize("rows", [[[1.0]], [[1.0, np.nan]], [[1.0, np.inf]]])
def test_write_table_rejects_bad_rows_edge_case(tmp_path, rows):
    # Act & Assert
    with pytest.raises(NumericalError):
        write_table(tmp_path / "bad.csv", ("a", "b"), rows, FOOTER)


def test_render_svg_sanity(tmp_path):
    # Arrange
    pytest.importorskip("matplotlib")
    omega = np.linspace(0.0, 1.0, 5)
    trace = SignalTrace(omega=omega, values=omega**2)
    grid = SignalGrid.from_traces("Omega", [0.0, 0.1], [trace, trace])

    # Act
    line_plot = render_traces(tmp_path / "line.svg", {"total": trace}, "demo")
    heatmap = render_grid(tmp_path / "map.svg", grid, "demo")

    # Assert
    assert line_plot.read_text().lstrip().startswith("<?xml")
    assert "<svg" in heatmap.read_text()
