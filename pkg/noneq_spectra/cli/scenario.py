"""Declarative scenario files: YAML sections validated into pydantic models."""

import hashlib
from importlib import resources
from pathlib import Path
from typing import Annotated, Any, Literal

import numpy as np
import yaml
from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    PlainSerializer,
    ValidationError,
)

from noneq_spectra.core.density import (
    DensityMatrix,
    density_matrix,
    maximally_coherent_state,
    population_state,
    thermal_state,
)
from noneq_spectra.core.system import LevelSystem
from noneq_spectra.driven.system import DRIVEN_LABELS, DrivenSystem
from noneq_spectra.errors.base import (
    ConfigurationError,
    NoneqSpectraError,
    ScenarioParseError,
)
from noneq_spectra.fields.cw import CWField, GaussianProbe
from noneq_spectra.fields.pulse import ChirpedGaussianPulse
from noneq_spectra.response.trace import COH, POP, TOTAL
from noneq_spectra.utils.grid import default_grid
from noneq_spectra.wavemixing.pathways import FAMILIES
from noneq_spectra.wavemixing.scenario import FWMScenario

BUNDLED_PACKAGE = "noneq_spectra.cli.scenarios"
SCENARIO_SUFFIX = ".yaml"

Kind = Literal["linear", "fwm", "driven"]
SweepAxis = Literal["phi2", "Omega", "omega0"]

COMPONENTS = (TOTAL, POP, COH)

SWEEP_AXES: dict[str, tuple[str, ...]] = {
    "linear": ("phi2",),
    "fwm": (),
    "driven": ("phi2", "Omega", "omega0"),
}


def _to_complex(value: Any) -> complex:
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ValueError("complex values are written as [real, imag]")
        return complex(float(value[0]), float(value[1]))
    return complex(value)


def _from_complex(value: complex):
    return value.real if value.imag == 0 else [value.real, value.imag]


Complex = Annotated[
    complex, BeforeValidator(_to_complex), PlainSerializer(_from_complex)
]


class _Section(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid", populate_by_name=True)


class ScenarioInfo(_Section):
    name: str
    kind: Kind
    description: str = ""


class DipoleEntry(_Section):
    lower: str
    upper: str
    value: Complex = 1.0


class RateEntry(_Section):
    source: str = Field(alias="from")
    target: str = Field(alias="to")
    value: float = Field(ge=0)


class SystemSection(_Section):
    labels: list[str]
    energies: list[float]
    dipoles: list[DipoleEntry] = Field(default_factory=list)
    rates: list[RateEntry] = Field(default_factory=list)
    temperature: float | None = None


class InitialStateSection(_Section):
    type: Literal["thermal", "population", "maximally_coherent", "matrix", "steady_state"]
    states: list[str] = Field(default_factory=list)
    matrix: list[list[Complex]] | None = None


class PulseSection(_Section):
    amplitude: float = 1.0
    duration_fs: float = Field(gt=0)
    carrier: float
    chirp: float = 0.0
    phase: float = 0.0


class CWSection(_Section):
    amplitude: Complex = 1.0
    frequency: float = Field(gt=0)
    sign: Literal[1, -1] = 1


class ProbeSection(_Section):
    width: float = Field(gt=0)
    carrier: float


class DriveSection(_Section):
    rabi: float = Field(default=0.0, ge=0)
    frequency: float = Field(default=0.0, ge=0)


class GridSection(_Section):
    min: float
    max: float
    points: int = Field(ge=1)


class NumericsSection(_Section):
    eta: float = Field(default=0.0, ge=0)
    grid: GridSection | None = None
    preparation: Literal["nonequilibrium", "equilibrium"] = "nonequilibrium"


class SweepSection(_Section):
    axis: SweepAxis
    min: float
    max: float
    points: int = Field(ge=1)

    def values(self) -> np.ndarray:
        return np.linspace(self.min, self.max, self.points)


class OutputSection(_Section):
    components: list[str] = Field(default_factory=lambda: ["total", "pop", "coh"])
    transform: Literal["signal", "abs"] = "signal"


class Scenario(_Section):
    scenario: ScenarioInfo
    system: SystemSection
    initial_state: InitialStateSection | None = None
    pulse: PulseSection | None = None
    cw: list[CWSection] | None = None
    probe: ProbeSection | None = None
    drive: DriveSection | None = None
    numerics: NumericsSection = Field(default_factory=NumericsSection)
    sweep: SweepSection | None = None
    output: OutputSection = Field(default_factory=OutputSection)

    @property
    def name(self) -> str:
        return self.scenario.name

    @property
    def kind(self) -> str:
        return self.scenario.kind

    def problems(self) -> list[tuple[tuple, str]]:
        """Cross-section consistency issues as (document path, message) pairs."""
        issues: list[tuple[tuple, str]] = []
        labels = set(self.system.labels)
        for idx, dipole in enumerate(self.system.dipoles):
            for key in ("lower", "upper"):
                if getattr(dipole, key) not in labels:
                    issues.append(
                        (("system", "dipoles", idx, key), f"unknown state {getattr(dipole, key)!r}")
                    )
        for idx, rate in enumerate(self.system.rates):
            for key, alias in (("source", "from"), ("target", "to")):
                if getattr(rate, key) not in labels:
                    issues.append(
                        (("system", "rates", idx, alias), f"unknown state {getattr(rate, key)!r}")
                    )
        if self.initial_state is not None:
            for idx, state in enumerate(self.initial_state.states):
                if state not in labels:
                    issues.append((("initial_state", "states", idx), f"unknown state {state!r}"))
            needed = {"population": 1, "maximally_coherent": 2}.get(self.initial_state.type)
            if needed is not None and len(self.initial_state.states) != needed:
                issues.append(
                    (
                        ("initial_state", "states"),
                        f"{self.initial_state.type} states name {needed} level(s)",
                    )
                )
            if self.initial_state.type == "matrix" and self.initial_state.matrix is None:
                issues.append((("initial_state",), "matrix states need a 'matrix' entry"))
            if self.initial_state.type == "steady_state" and self.kind != "driven":
                issues.append(
                    (("initial_state", "type"), "steady_state is only available for driven scenarios")
                )

        required = {
            "linear": ("initial_state", "pulse"),
            "fwm": ("initial_state", "cw", "probe"),
            "driven": ("pulse", "drive"),
        }[self.kind]
        for section in required:
            if getattr(self, section) is None:
                issues.append(((), f"{self.kind} scenarios need a '{section}' section"))
        if self.kind == "fwm" and self.cw is not None and len(self.cw) != 3:
            issues.append((("cw",), f"fwm scenarios need exactly 3 cw modes, got {len(self.cw)}"))
        if self.kind == "driven" and tuple(self.system.labels) != DRIVEN_LABELS:
            issues.append((("system", "labels"), f"driven systems use labels {list(DRIVEN_LABELS)}"))
        if self.kind != "driven" and self.numerics.eta <= 0:
            issues.append((("numerics", "eta"), "eta must be positive"))
        if self.sweep is not None and self.sweep.axis not in SWEEP_AXES[self.kind]:
            issues.append(
                (("sweep", "axis"), f"axis {self.sweep.axis!r} is not valid for {self.kind} scenarios")
            )
        if self.numerics.grid is not None and self.numerics.grid.max < self.numerics.grid.min:
            issues.append((("numerics", "grid"), "grid max must not be below min"))
        allowed = COMPONENTS + (FAMILIES if self.kind == "fwm" else ())
        for idx, component in enumerate(self.output.components):
            if component not in allowed:
                issues.append(
                    (
                        ("output", "components", idx),
                        f"unknown component {component!r}, expected one of {allowed}",
                    )
                )
        return issues

    def level_system(self) -> LevelSystem:
        return LevelSystem.from_transitions(
            self.system.labels,
            self.system.energies,
            dipoles={(d.lower, d.upper): d.value for d in self.system.dipoles},
            decay_rates={(r.source, r.target): r.value for r in self.system.rates},
            temperature=self.system.temperature,
        )

    def initial_density(self, system: LevelSystem) -> DensityMatrix:
        section = self.initial_state
        if section is None or section.type == "thermal":
            return thermal_state(system)
        if section.type == "population":
            return population_state(system, section.states[0])
        if section.type == "maximally_coherent":
            first, second = section.states
            return maximally_coherent_state(system, first, second)
        if section.type == "matrix":
            matrix = np.array(section.matrix, dtype=complex)
            return density_matrix(system, matrix, float(np.trace(matrix).real))
        raise ConfigurationError(
            "steady_state initial states are only available for driven scenarios"
        )

    def pulse_model(self) -> ChirpedGaussianPulse:
        p = self.pulse
        return ChirpedGaussianPulse.from_fs(
            p.duration_fs, p.carrier, chirp=p.chirp, amplitude=p.amplitude, phase=p.phase
        )

    def driven_system(self) -> DrivenSystem:
        return DrivenSystem(
            system=self.level_system(),
            rabi=self.drive.rabi,
            drive_frequency=self.drive.frequency,
        )

    def fwm_scenario(self) -> FWMScenario:
        system = self.level_system()
        return FWMScenario(
            system=system,
            rho=self.initial_density(system),
            modes=tuple(
                CWField(amplitude=mode.amplitude, frequency=mode.frequency, sign=mode.sign)
                for mode in self.cw
            ),
            probe=GaussianProbe(width=self.probe.width, carrier=self.probe.carrier),
            eta=self.numerics.eta,
            name=self.name,
        )

    def grid(self) -> np.ndarray:
        grid = self.numerics.grid
        if grid is not None:
            return np.linspace(grid.min, grid.max, grid.points)
        system = self.level_system()
        width = self.numerics.eta or max((r.value for r in self.system.rates), default=0.0)
        return default_grid(system, width)

    def with_axis_value(self, axis: str, value: float) -> "Scenario":
        if axis == "phi2":
            return self.model_copy(update={"pulse": self.pulse.model_copy(update={"chirp": value})})
        if axis == "Omega":
            return self.model_copy(update={"drive": self.drive.model_copy(update={"rabi": value})})
        if axis == "omega0":
            return self.model_copy(update={"drive": self.drive.model_copy(update={"frequency": value})})
        raise ScenarioParseError(f"Unknown sweep axis {axis!r}")


def _node_at(root: yaml.Node | None, path: tuple) -> yaml.Node | None:
    node = root
    for key in path:
        if isinstance(node, yaml.MappingNode):
            match = next((v for k, v in node.value if k.value == key), None)
        elif isinstance(node, yaml.SequenceNode) and isinstance(key, int) and key < len(node.value):
            match = node.value[key]
        else:
            match = None
        if match is None:
            break
        node = match
    return node


def _located(text: str, path: tuple, message: str) -> ScenarioParseError:
    try:
        node = _node_at(yaml.compose(text, Loader=yaml.SafeLoader), path)
    except yaml.YAMLError:
        node = None
    if node is None:
        return ScenarioParseError(message)
    mark = node.start_mark
    return ScenarioParseError(message, line=mark.line + 1, column=mark.column + 1)


def parse_scenario(text: str) -> Scenario:
    try:
        document = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        problem = getattr(e, "problem", None) or str(e)
        if mark is None:
            raise ScenarioParseError(f"Invalid YAML: {problem}") from e
        raise ScenarioParseError(
            f"Invalid YAML: {problem}", line=mark.line + 1, column=mark.column + 1
        ) from e
    if not isinstance(document, dict):
        raise ScenarioParseError("A scenario file must be a mapping of sections", line=1, column=1)

    try:
        scenario = Scenario.model_validate(document)
    except ValidationError as e:
        first = e.errors()[0]
        location = ".".join(str(part) for part in first["loc"])
        raise _located(text, tuple(first["loc"]), f"{location}: {first['msg']}") from e
    except NoneqSpectraError as e:
        raise ScenarioParseError(str(e), line=1, column=1) from e

    issues = scenario.problems()
    if issues:
        path, message = issues[0]
        raise _located(text, path, message)
    return scenario


def dump_scenario(scenario: Scenario) -> str:
    """Canonical YAML form; parsing it back yields an equal scenario."""
    document = scenario.model_dump(mode="json", by_alias=True, exclude_none=True)
    return yaml.safe_dump(document, sort_keys=False, default_flow_style=None)


def scenario_digest(scenario: Scenario) -> str:
    return hashlib.sha256(dump_scenario(scenario).encode("utf-8")).hexdigest()


def bundled_scenarios() -> list[str]:
    package = resources.files(BUNDLED_PACKAGE)
    return sorted(
        entry.name[: -len(SCENARIO_SUFFIX)]
        for entry in package.iterdir()
        if entry.name.endswith(SCENARIO_SUFFIX)
    )


def read_scenario_text(reference: str | Path) -> str:
    """Text of a scenario file, or of a bundled scenario when ``reference`` is its name."""
    path = Path(reference)
    if path.is_file():
        return path.read_text(encoding="utf-8")
    name = str(reference)
    if name in bundled_scenarios():
        resource = resources.files(BUNDLED_PACKAGE).joinpath(name + SCENARIO_SUFFIX)
        return resource.read_text(encoding="utf-8")
    raise FileNotFoundError(f"No scenario file or bundled scenario named {name!r}")


def load_scenario(reference: str | Path) -> Scenario:
    return parse_scenario(read_scenario_text(reference))
