import dataclasses
import logging
from pathlib import Path

import numpy as np

from noneq_spectra import __version__
from noneq_spectra.cli import output
from noneq_spectra.cli.scenario import SWEEP_AXES, Scenario, scenario_digest
from noneq_spectra.config import DEFAULT_CONFIG, NumericsConfig
from noneq_spectra.driven.signal import driven_equilibrium_signal, driven_signal
from noneq_spectra.driven.sweep import SteadyStateTable, steady_state_sweep
from noneq_spectra.errors.base import ScenarioParseError
from noneq_spectra.response.linear import linear_signal
from noneq_spectra.response.trace import COH, POP, SignalGrid, SignalSet, SignalTrace
from noneq_spectra.utils.parallel import ordered_map
from noneq_spectra.wavemixing.pathways import chi3_pathway_fwm

logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class RunOptions:
    output_dir: Path = Path(".")
    svg: bool = False
    dry_run: bool = False
    threads: int | None = None

    def config(self) -> NumericsConfig:
        if self.threads is None:
            return DEFAULT_CONFIG
        return dataclasses.replace(DEFAULT_CONFIG, threads=max(1, self.threads))


def _driven(scenario: Scenario, grid: np.ndarray, config: NumericsConfig) -> SignalSet:
    driven = scenario.driven_system()
    pulse = scenario.pulse_model()
    eta = scenario.numerics.eta
    if scenario.numerics.preparation == "equilibrium":
        trace = driven_equilibrium_signal(driven, pulse, grid, eta, config, scenario.name)
        zero = trace.model_copy(update={"values": np.zeros_like(trace.values)})
        return SignalSet(total=trace, pop=trace.relabel(POP), coh=zero.relabel(COH))
    state = None
    if scenario.initial_state is not None and scenario.initial_state.type != "steady_state":
        state = scenario.initial_density(driven.system)
    return driven_signal(driven, pulse, grid, eta, state, config, scenario.name)


def compute(scenario: Scenario, config: NumericsConfig = DEFAULT_CONFIG) -> SignalSet:
    grid = scenario.grid()
    if scenario.kind == "linear":
        system = scenario.level_system()
        return linear_signal(
            system,
            scenario.initial_density(system),
            scenario.pulse_model(),
            grid,
            scenario.numerics.eta,
            scenario.numerics.preparation,
            scenario.name,
        )
    if scenario.kind == "fwm":
        return chi3_pathway_fwm(scenario.fwm_scenario(), grid, scenario.numerics.preparation)
    return _driven(scenario, grid, config)


def selected_components(
    scenario: Scenario, signals: SignalSet
) -> dict[str, SignalTrace]:
    available = signals.components()
    traces = {name: available[name] for name in scenario.output.components}
    if scenario.output.transform == "abs":
        traces = {name: trace.magnitude() for name, trace in traces.items()}
    return traces


def check_axis(scenario: Scenario, axis: str):
    if axis not in SWEEP_AXES[scenario.kind]:
        raise ScenarioParseError(
            f"Sweep axis {axis!r} is not valid for {scenario.kind} scenarios, "
            f"expected one of {SWEEP_AXES[scenario.kind]}"
        )


def sweep2d(
    scenario: Scenario,
    axis: str,
    values,
    config: NumericsConfig = DEFAULT_CONFIG,
) -> dict[str, SignalGrid]:
    """Rerun the scenario for every axis value; rows of each grid follow ``values``."""
    check_axis(scenario, axis)
    values = np.asarray(values, dtype=float)
    point_config = dataclasses.replace(config, threads=1)
    points = [scenario.with_axis_value(axis, float(value)) for value in values]
    results = ordered_map(
        lambda point: selected_components(point, compute(point, point_config)),
        points,
        config.threads,
    )
    logger.info("Sweep of %s over %s: %d points done", scenario.name, axis, values.size)
    return {
        name: SignalGrid.from_traces(axis, values, [result[name] for result in results])
        for name in scenario.output.components
    }


def steady_state_table(
    scenario: Scenario,
    axis: str,
    values,
    config: NumericsConfig = DEFAULT_CONFIG,
) -> SteadyStateTable:
    if scenario.kind != "driven" or axis not in ("Omega", "omega0"):
        raise ScenarioParseError("Steady-state tables need a driven scenario swept over Omega or omega0")
    return steady_state_sweep(scenario.driven_system(), axis, values, config)


def _footer(scenario: Scenario) -> str:
    return output.footer(scenario_digest(scenario), __version__)


def write_signals(scenario: Scenario, options: RunOptions, traces: dict[str, SignalTrace]) -> list[Path]:
    options.output_dir.mkdir(parents=True, exist_ok=True)
    footer = _footer(scenario)
    written = [
        output.write_trace(
            options.output_dir / f"{output.output_stem(scenario.name, name)}.csv", trace, footer
        )
        for name, trace in traces.items()
    ]
    if options.svg:
        svg = output.render_traces(
            options.output_dir / f"{scenario.name}.svg", traces, scenario.name
        )
        if svg is not None:
            written.append(svg)
    return written


def write_grids(scenario: Scenario, options: RunOptions, grids: dict[str, SignalGrid]) -> list[Path]:
    options.output_dir.mkdir(parents=True, exist_ok=True)
    footer = _footer(scenario)
    written = [
        output.write_grid(
            options.output_dir / f"{output.output_stem(scenario.name, name)}.csv", grid, footer
        )
        for name, grid in grids.items()
    ]
    if options.svg:
        first = next(iter(grids))
        svg = output.render_grid(
            options.output_dir / f"{scenario.name}.svg", grids[first], scenario.name
        )
        if svg is not None:
            written.append(svg)
    return written


def run(scenario: Scenario, options: RunOptions) -> list[Path]:
    """Compute the scenario (a 2D sweep when it carries a sweep section) and write its files."""
    if scenario.sweep is not None:
        sweep = scenario.sweep
        return run_sweep(scenario, sweep.axis, sweep.values(), options)

    logger.info("Running %s scenario %s", scenario.kind, scenario.name)
    if options.dry_run:
        logger.info("Dry run: %s is valid, %d grid points", scenario.name, scenario.grid().size)
        return []
    traces = selected_components(scenario, compute(scenario, options.config()))
    return write_signals(scenario, options, traces)


def run_sweep(
    scenario: Scenario,
    axis: str,
    values,
    options: RunOptions,
    steady_state: bool = False,
) -> list[Path]:
    check_axis(scenario, axis)
    values = np.asarray(values, dtype=float)
    logger.info("Sweeping %s over %s (%d points)", scenario.name, axis, values.size)
    if options.dry_run:
        return []

    config = options.config()
    if steady_state:
        table = steady_state_table(scenario, axis, values, config)
        options.output_dir.mkdir(parents=True, exist_ok=True)
        path = options.output_dir / f"{scenario.name}_steady_state.csv"
        return [output.write_rows(path, table.rows(), _footer(scenario))]
    return write_grids(scenario, options, sweep2d(scenario, axis, values, config))
