import csv
import logging
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from noneq_spectra.errors.base import NumericalError
from noneq_spectra.response.trace import TOTAL, SignalGrid, SignalTrace

logger = logging.getLogger(__name__)

FLOAT_FORMAT = "%.17g"
OMEGA_COLUMN = "omega_eV"
SIGNAL_COLUMN = "signal"


def _number(value: float) -> str:
    return FLOAT_FORMAT % value


def output_stem(name: str, component: str) -> str:
    return name if component == TOTAL else f"{name}_{component}"


def footer(digest: str, version: str) -> str:
    return f"# scenario_sha256={digest} noneq_spectra={version}"


def write_table(
    path: Path,
    header: Sequence[str],
    rows: Iterable[Sequence[float]],
    footer_line: str,
) -> Path:
    """Write a rectangular numeric table with a provenance footer."""
    rows = [list(row) for row in rows]
    if any(len(row) != len(header) for row in rows):
        raise NumericalError(f"Table for {path.name} is not rectangular")
    if not all(np.isfinite(value) for row in rows for value in row):
        raise NumericalError(f"Table for {path.name} contains non-finite values")

    with path.open("w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_number(value) for value in row])
        handle.write(footer_line + "\n")
    logger.info("Wrote %s (%d rows)", path, len(rows))
    return path


def write_trace(path: Path, trace: SignalTrace, footer_line: str) -> Path:
    return write_table(
        path,
        (OMEGA_COLUMN, SIGNAL_COLUMN),
        zip(trace.omega, trace.values),
        footer_line,
    )


def write_grid(path: Path, grid: SignalGrid, footer_line: str) -> Path:
    # rows run axis-major: every ω point of the first axis value comes first
    rows = (
        (omega, axis_value, value)
        for axis_value, line in zip(grid.axis_values, grid.values)
        for omega, value in zip(grid.omega, line)
    )
    return write_table(path, (OMEGA_COLUMN, grid.axis, SIGNAL_COLUMN), rows, footer_line)


def write_rows(path: Path, records: list[dict[str, float]], footer_line: str) -> Path:
    header = list(records[0]) if records else []
    return write_table(path, header, ([r[key] for key in header] for r in records), footer_line)


def _pyplot():
    try:
        import matplotlib
    except ImportError:
        logger.warning("matplotlib is not installed; install the 'plot' extra for SVG output")
        return None
    matplotlib.use("Agg")
    matplotlib.rcParams["svg.hashsalt"] = "noneq-spectra"
    import matplotlib.pyplot as plt

    return plt


def render_traces(path: Path, traces: dict[str, SignalTrace], title: str) -> Path | None:
    plt = _pyplot()
    if plt is None:
        return None
    fig, ax = plt.subplots(figsize=(7, 4))
    for component, trace in traces.items():
        ax.plot(trace.omega, trace.values, label=component, linewidth=1.2)
    ax.set_xlabel("ω (eV)")
    ax.set_ylabel("S (arb. units)")
    ax.set_title(title)
    ax.legend()
    fig.savefig(path, format="svg", bbox_inches="tight", metadata={"Date": None})
    plt.close(fig)
    logger.info("Wrote %s", path)
    return path


def render_grid(path: Path, grid: SignalGrid, title: str) -> Path | None:
    plt = _pyplot()
    if plt is None:
        return None
    fig, ax = plt.subplots(figsize=(7, 5))
    extent = [grid.omega[0], grid.omega[-1], grid.axis_values[0], grid.axis_values[-1]]
    image = ax.imshow(grid.values, origin="lower", aspect="auto", extent=extent, cmap="viridis")
    fig.colorbar(image, ax=ax, label=grid.component)
    ax.set_xlabel("ω (eV)")
    ax.set_ylabel(grid.axis)
    ax.set_title(title)
    fig.savefig(path, format="svg", bbox_inches="tight", metadata={"Date": None})
    plt.close(fig)
    logger.info("Wrote %s", path)
    return path
