"""
Hard-coded Liouville-space pathway list of the phase-matched four-wave-mixing signal.

The four diagram families (a1-a4) of the three-level Λ system are written out
term by term; each is summed over lower states i, j, k with weight ρ_ij and
carries its ω1 ↔ ω3 exchange partner.
"""

import dataclasses
import logging

import numpy as np
from numpy.typing import ArrayLike

from noneq_spectra.fields.cw import probe_spectrum
from noneq_spectra.response.linear import Preparation, three_level_topology
from noneq_spectra.response.trace import (
    COH,
    EQ,
    POP,
    TOTAL,
    SignalSet,
    SignalTrace,
    frequency_grid,
)
from noneq_spectra.wavemixing.scenario import FWMScenario

logger = logging.getLogger(__name__)

FAMILIES = ("a1", "a2", "a3", "a4")


@dataclasses.dataclass(frozen=True)
class PathwayTerm:
    """
    One (family, i, j, k) term: ρ_ij·dipoles / Π (ω - shift + iη).

    ``shifts[0]`` is the leading ω1 - ω2 + ω3 + ω_ij denominator shared by
    every term.
    """

    family: str
    exchanged: bool
    indices: tuple[str, str, str]
    weight: complex
    dipoles: complex
    shifts: tuple[float, ...]

    @property
    def is_population(self) -> bool:
        return self.indices[0] == self.indices[1]

    def evaluate(
        self, omega: np.ndarray, eta: float, preparation: Preparation = "nonequilibrium"
    ) -> np.ndarray:
        leading, *rest = self.shifts
        offset = omega - leading
        if preparation == "equilibrium":
            # full transform of the last field: nascent delta in place of the one-sided pole
            value = 1.0 / (offset + 1j * eta) - 1.0 / (offset - 1j * eta)
        else:
            value = 1.0 / (offset + 1j * eta)
        for shift in rest:
            value = value / (omega - shift + 1j * eta)
        return self.weight * self.dipoles * value


def pathway_terms(scenario: FWMScenario) -> list[PathwayTerm]:
    system = scenario.system
    (lower_a, lower_b), upper = three_level_topology(system)
    mu = system.total_dipole()
    c = system.index(upper)
    bohr = system.bohr_matrix()
    rho = scenario.rho.matrix

    def w(x: int, y: int) -> float:
        return float(bohr[x, y])

    terms = []
    for exchanged in (False, True):
        w1, w2, w3 = scenario.frequencies
        if exchanged:
            w1, w3 = w3, w1
        for i_label in (lower_a, lower_b):
            for j_label in (lower_a, lower_b):
                i, j = system.index(i_label), system.index(j_label)
                weight = complex(rho[i, j])
                if weight == 0:
                    continue
                leading = w1 - w2 + w3 + w(i, j)
                for k_label in (lower_a, lower_b):
                    k = system.index(k_label)
                    # μ_xc is the lowering element, μ_cx its Hermitian partner
                    ladder = mu[k, c] * mu[c, j] * np.conj(mu[k, c]) * np.conj(mu[i, c])
                    families = {
                        "a1": (
                            mu[j, c] * np.conj(mu[k, c]) * mu[k, c] * np.conj(mu[i, c]),
                            (w(c, j), w3 + w(k, j), w3 - w2 + w(c, j)),
                        ),
                        "a2": (ladder, (w(c, k), w3, w3 - w2 + w(c, j))),
                        "a3": (ladder, (w(c, k), w1 + w(i, k), w1 + w3 + w(i, c))),
                        "a4": (ladder, (w(c, k), w3, w1 + w3 + w(i, c))),
                    }
                    for family, (dipoles, shifts) in families.items():
                        if dipoles == 0:
                            continue
                        terms.append(
                            PathwayTerm(
                                family=family,
                                exchanged=exchanged,
                                indices=(i_label, j_label, k_label),
                                weight=weight,
                                dipoles=complex(dipoles),
                                shifts=(leading, *shifts),
                            )
                        )
    return terms


def _signal(values, fields) -> np.ndarray:
    return 2.0 * np.real(fields * values)


def chi3_pathway_fwm(
    scenario: FWMScenario,
    omega: ArrayLike,
    preparation: Preparation = "nonequilibrium",
) -> SignalSet:
    """
    Pathway-sum FWM signal with population, coherence and per-family traces.

    The equilibrium preparation keeps the population pathways only and
    swaps the leading pole for its full-transform (nascent delta) form.
    """
    grid = frequency_grid(omega)
    eta = scenario.eta
    fields = np.conj(probe_spectrum(scenario.probe, grid)) * scenario.field_product

    pop = np.zeros(grid.shape, dtype=complex)
    coh = np.zeros(grid.shape, dtype=complex)
    families = {family: np.zeros(grid.shape, dtype=complex) for family in FAMILIES}
    terms = pathway_terms(scenario)
    for term in terms:
        if preparation == "equilibrium" and not term.is_population:
            continue
        value = term.evaluate(grid, eta, preparation)
        families[term.family] += value
        if term.is_population:
            pop += value
        else:
            coh += value
    logger.debug("Evaluated %d FWM pathway terms on %d points", len(terms), grid.size)

    def trace(values, component: str) -> SignalTrace:
        return SignalTrace(
            omega=grid,
            values=_signal(values, fields),
            component=component,
            eta=eta,
            scenario=scenario.name,
        )

    pop_trace = trace(pop, POP)
    coh_trace = trace(coh, COH)
    total_tag = EQ if preparation == "equilibrium" else TOTAL
    total = SignalTrace(
        omega=grid,
        values=pop_trace.values + coh_trace.values,
        component=total_tag,
        eta=eta,
        scenario=scenario.name,
    )
    return SignalSet(
        total=total,
        pop=pop_trace,
        coh=coh_trace,
        parts={family: trace(values, family) for family, values in families.items()},
    )
