import dataclasses
import itertools
import logging

import numpy as np
from numpy.typing import ArrayLike

from noneq_spectra.config import DEFAULT_CONFIG, NumericsConfig
from noneq_spectra.fields.cw import probe_spectrum
from noneq_spectra.response.trace import COH, POP, TOTAL, SignalSet, SignalTrace, frequency_grid
from noneq_spectra.wavemixing.correlation import (
    DETECTED,
    FIRST,
    SECOND,
    CorrelationTerm,
    cubic_terms,
)
from noneq_spectra.wavemixing.pathways import chi3_pathway_fwm
from noneq_spectra.wavemixing.scenario import FWMScenario

logger = logging.getLogger(__name__)


def is_rotating(
    term: CorrelationTerm,
    bohr: np.ndarray,
    ordering: tuple[float, float, float],
    window: float,
) -> bool:
    """
    Whether every propagator of ``term`` can be resonant for this mode ordering.

    Each argument is taken at the phase-matched detection frequency
    Σf + ω_ab and must lie within ``window`` of its Bohr frequency.
    """
    f1, f2, f3 = ordering
    nominal = f1 + f2 + f3 + bohr[term.a, term.b]
    arguments = {DETECTED: nominal, FIRST: nominal - f1, SECOND: nominal - f1 - f2}
    return all(abs(arguments[g.slot] - bohr[g.k, g.l]) <= window for g in term.propagators)


def chi3_cw_signal(
    scenario: FWMScenario,
    omega: ArrayLike,
    rwa_window: float | None = None,
    config: NumericsConfig = DEFAULT_CONFIG,
) -> SignalSet:
    """
    FWM signal from the generalized χ̃⁽³⁾ with every CW delta collapsed.

    The three modes enter in all orderings of the signed frequencies
    (ω1, -ω2, ω3); the last interaction is the one-sided CW transform
    i/(ω - Σf - ω_ab + iη). Terms failing the RWA filter are dropped.
    """
    grid = frequency_grid(omega)
    window = config.rwa_window if rwa_window is None else rwa_window
    system = scenario.system
    bohr = system.bohr_matrix()
    eta = scenario.eta
    terms = cubic_terms(system, scenario.rho)
    signed = tuple(mode.signed_frequency for mode in scenario.modes)

    pop = np.zeros(grid.shape, dtype=complex)
    coh = np.zeros(grid.shape, dtype=complex)
    kept = 0
    orderings = sorted(set(itertools.permutations(signed)))
    for ordering in orderings:
        f1, f2, f3 = ordering
        arguments = {DETECTED: grid, FIRST: grid - f1, SECOND: grid - f1 - f2}
        for term in terms:
            if not is_rotating(term, bohr, ordering, window):
                continue
            kept += 1
            last = 1j / (grid - f1 - f2 - f3 - bohr[term.a, term.b] + 1j * eta)
            value = term.evaluate(bohr, arguments, eta) * last
            if term.a == term.b:
                pop += value
            else:
                coh += value
    logger.debug(
        "RWA filter kept %d of %d term/ordering combinations (window %g eV)",
        kept,
        len(terms) * len(orderings),
        window,
    )

    fields = np.conj(probe_spectrum(scenario.probe, grid)) * scenario.field_product
    pop_values = 2.0 * np.imag(fields * pop)
    coh_values = 2.0 * np.imag(fields * coh)

    def trace(values, component: str) -> SignalTrace:
        return SignalTrace(
            omega=grid, values=values, component=component, eta=eta, scenario=scenario.name
        )

    return SignalSet(
        total=trace(pop_values + coh_values, TOTAL),
        pop=trace(pop_values, POP),
        coh=trace(coh_values, COH),
    )


@dataclasses.dataclass(frozen=True)
class RepresentationComparison:
    pathway: SignalTrace
    susceptibility: SignalTrace
    residual: float

    def within(self, tolerance: float) -> bool:
        return self.residual <= tolerance


def compare_representations(
    scenario: FWMScenario,
    omega: ArrayLike,
    rwa_window: float | None = None,
    config: NumericsConfig = DEFAULT_CONFIG,
) -> RepresentationComparison:
    """Peak-normalized max deviation between the pathway sum and the filtered χ̃⁽³⁾ signal."""
    pathway = chi3_pathway_fwm(scenario, omega).total
    susceptibility = chi3_cw_signal(scenario, omega, rwa_window, config).total
    residual = float(
        np.max(np.abs(pathway.peak_normalized() - susceptibility.peak_normalized()))
    )
    logger.info("Pathway vs susceptibility residual %.3e", residual)
    return RepresentationComparison(
        pathway=pathway, susceptibility=susceptibility, residual=residual
    )
