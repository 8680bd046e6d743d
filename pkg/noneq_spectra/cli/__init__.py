from noneq_spectra.cli.runner import RunOptions, compute, run, run_sweep, sweep2d
from noneq_spectra.cli.scenario import (
    Scenario,
    bundled_scenarios,
    dump_scenario,
    load_scenario,
    parse_scenario,
)

__all__ = [
    "RunOptions",
    "Scenario",
    "bundled_scenarios",
    "compute",
    "dump_scenario",
    "load_scenario",
    "parse_scenario",
    "run",
    "run_sweep",
    "sweep2d",
]
