import argparse
import logging
import sys
from pathlib import Path

import numpy as np

from noneq_spectra import __version__
from noneq_spectra.cli.runner import RunOptions, run, run_sweep
from noneq_spectra.cli.scenario import bundled_scenarios, load_scenario
from noneq_spectra.config import THREADS_ENV_VAR
from noneq_spectra.errors.base import ArgumentError, NoneqSpectraError, ScenarioParseError

logger = logging.getLogger("noneq_spectra.cli")

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4


def configure_logging(level: int = logging.INFO) -> None:
    """Stream log records to stderr."""
    logging.basicConfig(
        level=level,
        format="%(asctime)s [%(levelname)s] %(message)s",
        handlers=[logging.StreamHandler()],
        force=True,
    )


def _common_arguments(parser: argparse.ArgumentParser):
    parser.add_argument("scenario", help="scenario YAML file or bundled scenario name")
    parser.add_argument(
        "-o", "--output-dir", type=Path, default=Path("."), help="directory for CSV/SVG files"
    )
    parser.add_argument("--svg", action="store_true", help="also render an SVG plot")
    parser.add_argument(
        "--threads",
        type=int,
        default=None,
        help=f"worker threads for sweeps (default: ${THREADS_ENV_VAR} or 1)",
    )
    parser.add_argument(
        "--dry-run", action="store_true", help="validate the scenario without computing"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="noneq-spectra",
        description="Optical signals of multilevel systems in nonequilibrium states.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="warnings only")
    commands = parser.add_subparsers(dest="command", required=True)

    run_parser = commands.add_parser("run", help="compute a scenario")
    _common_arguments(run_parser)

    sweep_parser = commands.add_parser("sweep", help="sweep a scenario parameter")
    _common_arguments(sweep_parser)
    sweep_parser.add_argument("--axis", required=True, help="phi2, Omega or omega0")
    sweep_parser.add_argument("--min", type=float, required=True, dest="axis_min")
    sweep_parser.add_argument("--max", type=float, required=True, dest="axis_max")
    sweep_parser.add_argument("--points", type=int, required=True)
    sweep_parser.add_argument(
        "--steady-state",
        action="store_true",
        help="write the driven steady-state populations and coherence instead of spectra",
    )

    commands.add_parser("list", help="list bundled scenarios")
    return parser


def _execute(args: argparse.Namespace) -> int:
    if args.command == "list":
        for name in bundled_scenarios():
            print(name)
        return EXIT_OK

    scenario = load_scenario(args.scenario)
    options = RunOptions(
        output_dir=args.output_dir,
        svg=args.svg,
        dry_run=args.dry_run,
        threads=args.threads,
    )
    if args.command == "run":
        written = run(scenario, options)
    else:
        if args.points < 1:
            raise ArgumentError("A sweep needs at least one point")
        values = np.linspace(args.axis_min, args.axis_max, args.points)
        written = run_sweep(scenario, args.axis, values, options, args.steady_state)
    logger.info("%s finished, %d file(s) written", scenario.name, len(written))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        configure_logging(logging.DEBUG)
    elif args.quiet:
        configure_logging(logging.WARNING)
    else:
        configure_logging(logging.INFO)

    try:
        return _execute(args)
    except (ScenarioParseError, ArgumentError) as e:
        logger.error("%s", e)
        return EXIT_PARSE
    except NoneqSpectraError as e:
        logger.error("%s: %s", type(e).__name__, e)
        return EXIT_NUMERICAL
    except OSError as e:
        logger.error("I/O error: %s", e)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
