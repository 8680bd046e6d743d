import math

import numpy as np
from pydantic import BaseModel, ConfigDict

from noneq_spectra.driven.liouvillian import Liouvillian
from noneq_spectra.driven.system import DrivenSystem


class DressedSpectrum(BaseModel):
    """
    Dressed-state probe resonances of the driven system.

    ``a_type`` resonances belong to the c→a channel (seen in G̃_ca;ca(ω - ω₀))
    and ``b_type`` to the c→b channel. ``static_energies`` are the shifted
    lower levels ω_a', ω_b' of a static (ω₀ = 0) coupling.
    """

    model_config = ConfigDict(frozen=True)

    delta_ab: float
    generalized_rabi: float
    a_type: tuple[float, float]
    b_type: tuple[float, float]
    static_energies: tuple[float, float]

    @property
    def resonances(self) -> tuple[float, ...]:
        return tuple(sorted(self.a_type + self.b_type))


def dressed_frequencies(driven: DrivenSystem) -> DressedSpectrum:
    # rotating-frame eigenvalues shift the a-type pair by +Δ/2 and the b-type pair by -Δ/2
    delta = driven.delta_ab
    rabi_prime = math.sqrt(4.0 * driven.rabi**2 + delta**2)
    omega_a, omega_b, _ = driven.system.energies
    static_gap = math.sqrt(4.0 * driven.rabi**2 + driven.omega_ba**2)
    center = 0.5 * (omega_a + omega_b)
    return DressedSpectrum(
        delta_ab=delta,
        generalized_rabi=rabi_prime,
        a_type=(
            driven.omega_ca + 0.5 * (delta - rabi_prime),
            driven.omega_ca + 0.5 * (delta + rabi_prime),
        ),
        b_type=(
            driven.omega_cb - 0.5 * (delta + rabi_prime),
            driven.omega_cb - 0.5 * (delta - rabi_prime),
        ),
        static_energies=(center - 0.5 * static_gap, center + 0.5 * static_gap),
    )


def resolvent_poles(liouvillian: Liouvillian) -> dict[str, np.ndarray]:
    """
    Probe-frequency poles read off the eigenvalues λ of the ca/cb coherence block.

    G̃(ω) has poles at ω = -Im λ, so the ω-argument (c→b) channel peaks at
    -Im λ and the ω - ω₀ argument (c→a) channel at ω₀ - Im λ.
    """
    index = liouvillian.index
    block = [index.flat("c", "a"), index.flat("c", "b")]
    eigenvalues = np.linalg.eigvals(liouvillian.matrix[np.ix_(block, block)])
    poles = -eigenvalues.imag
    return {
        "a": np.sort(liouvillian.drive_frequency + poles),
        "b": np.sort(poles),
    }
