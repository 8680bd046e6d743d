import itertools

import numpy as np
from numpy.typing import ArrayLike

from noneq_spectra.core.density import DensityMatrix
from noneq_spectra.core.system import LevelSystem
from noneq_spectra.errors.base import ConfigurationError
from noneq_spectra.fields.cw import CWField, GaussianProbe, probe_spectrum
from noneq_spectra.response.linear import require_positive_eta
from noneq_spectra.response.trace import COH, POP, TOTAL, SignalSet, SignalTrace, frequency_grid
from noneq_spectra.wavemixing.correlation import evaluate_terms, quadratic_terms


def twm_signal(
    system: LevelSystem,
    rho: DensityMatrix,
    modes: tuple[CWField, CWField],
    probe: GaussianProbe,
    omega: ArrayLike,
    eta: float,
    scenario: str = "",
) -> SignalSet:
    """
    Three-wave-mixing signal for two CW modes heterodyned against a broad probe.

    The first mode fixes ω1' and the second enters through its one-sided
    transform, supported at ω - ω1' - ω_ab; both orderings are summed.
    """
    require_positive_eta(eta)
    if len(modes) != 2:
        raise ConfigurationError(f"TWM needs exactly two CW modes, got {len(modes)}")
    grid = frequency_grid(omega)
    bohr = system.bohr_matrix()
    terms = quadratic_terms(system, rho)
    amplitude = modes[0].signed_amplitude * modes[1].signed_amplitude

    pop = np.zeros(grid.shape, dtype=complex)
    coh = np.zeros(grid.shape, dtype=complex)
    for first, second in itertools.permutations(modes):
        f1, f2 = first.signed_frequency, second.signed_frequency
        for term in terms:
            last = 1j / (grid - f1 - f2 - bohr[term.a, term.b] + 1j * eta)
            value = evaluate_terms(system, [term], grid, f1, eta=eta) * last
            if term.a == term.b:
                pop += value
            else:
                coh += value

    fields = np.conj(probe_spectrum(probe, grid)) * amplitude
    pop_values = 2.0 * np.imag(fields * pop)
    coh_values = 2.0 * np.imag(fields * coh)
    return SignalSet(
        total=SignalTrace(
            omega=grid, values=pop_values + coh_values, component=TOTAL, eta=eta, scenario=scenario
        ),
        pop=SignalTrace(omega=grid, values=pop_values, component=POP, eta=eta, scenario=scenario),
        coh=SignalTrace(omega=grid, values=coh_values, component=COH, eta=eta, scenario=scenario),
    )
