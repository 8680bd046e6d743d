"""Sum-over-states expansions of the second- and third-order matter correlation functions."""

import dataclasses
import logging
from typing import Iterator, Mapping

import numpy as np
from numpy.typing import ArrayLike

from noneq_spectra.core.density import DensityMatrix, check_state_labels
from noneq_spectra.core.system import LevelSystem
from noneq_spectra.response.linear import require_positive_eta

logger = logging.getLogger(__name__)

# propagator argument slots, counted from the detection end
DETECTED = 0  # ω
FIRST = 1  # ω - ω1'
SECOND = 2  # ω - ω1' - ω2'

SLOT_NAMES = {DETECTED: "omega", FIRST: "omega-omega1", SECOND: "omega-omega1-omega2"}


@dataclasses.dataclass(frozen=True)
class Propagator:
    k: int
    l: int
    slot: int


@dataclasses.dataclass(frozen=True)
class CorrelationTerm:
    """ρ_ab times a dipole product times a chain of G_kl(slot) factors."""

    a: int
    b: int
    coefficient: complex
    propagators: tuple[Propagator, ...]

    def evaluate(
        self, bohr: np.ndarray, arguments: Mapping[int, np.ndarray], eta: float
    ) -> np.ndarray:
        value = self.coefficient
        for g in self.propagators:
            value = value / (arguments[g.slot] - bohr[g.k, g.l] + 1j * eta)
        return value


def _quadratic_brackets(mu: np.ndarray, a: int, b: int, c: int, d: int):
    G = Propagator
    ket = mu[c, a] * mu[d, c] * mu[b, d]
    yield ket, (G(c, b, FIRST), G(d, b, DETECTED))
    yield -ket, (G(c, b, FIRST), G(c, d, DETECTED))
    bra = mu[b, c] * mu[d, a] * mu[c, d]
    yield bra, (G(a, c, FIRST), G(a, d, DETECTED))
    yield -bra, (G(a, c, FIRST), G(d, c, DETECTED))


def _cubic_brackets(mu: np.ndarray, a: int, b: int, c: int, d: int, e: int):
    G = Propagator
    first = mu[c, a] * mu[d, c] * mu[b, e] * mu[e, d]
    yield first, (G(c, b, SECOND), G(d, b, FIRST), G(e, b, DETECTED))
    yield -first, (G(c, b, SECOND), G(d, b, FIRST), G(d, e, DETECTED))
    second = mu[c, a] * mu[b, d] * mu[e, c] * mu[d, e]
    yield second, (G(a, d, SECOND), G(c, d, FIRST), G(c, e, DETECTED))
    yield -second, (G(a, d, SECOND), G(c, d, FIRST), G(e, d, DETECTED))
    third = mu[c, a] * mu[b, d] * mu[e, c] * mu[d, e]
    yield third, (G(c, b, SECOND), G(c, d, FIRST), G(c, e, DETECTED))
    yield -third, (G(c, b, SECOND), G(c, d, FIRST), G(e, d, DETECTED))
    fourth = mu[e, a] * mu[d, e] * mu[c, d] * mu[b, c]
    yield fourth, (G(a, c, SECOND), G(a, d, FIRST), G(e, d, DETECTED))
    yield -fourth, (G(a, c, SECOND), G(a, d, FIRST), G(a, e, DETECTED))


def _expand(system: LevelSystem, rho: DensityMatrix, order: int) -> Iterator[CorrelationTerm]:
    mu = system.total_dipole()
    n = system.size
    for a, b, weight in rho.nonzero_elements():
        if order == 2:
            brackets = (
                bracket
                for c in range(n)
                for d in range(n)
                for bracket in _quadratic_brackets(mu, a, b, c, d)
            )
        else:
            brackets = (
                bracket
                for c in range(n)
                for d in range(n)
                for e in range(n)
                for bracket in _cubic_brackets(mu, a, b, c, d, e)
            )
        for dipoles, propagators in brackets:
            if dipoles != 0:
                yield CorrelationTerm(a, b, complex(weight * dipoles), propagators)


def quadratic_terms(system: LevelSystem, rho: DensityMatrix) -> list[CorrelationTerm]:
    check_state_labels(system, rho)
    return list(_expand(system, rho, 2))


def cubic_terms(system: LevelSystem, rho: DensityMatrix) -> list[CorrelationTerm]:
    check_state_labels(system, rho)
    return list(_expand(system, rho, 3))


def evaluate_terms(
    system: LevelSystem,
    terms: list[CorrelationTerm],
    omega: ArrayLike,
    omega1: ArrayLike,
    omega2: ArrayLike = 0.0,
    eta: float = 0.0,
):
    omega, omega1, omega2 = np.broadcast_arrays(
        np.asarray(omega, dtype=float),
        np.asarray(omega1, dtype=float),
        np.asarray(omega2, dtype=float),
    )
    arguments = {
        DETECTED: omega,
        FIRST: omega - omega1,
        SECOND: omega - omega1 - omega2,
    }
    bohr = system.bohr_matrix()
    total = np.zeros(omega.shape, dtype=complex)
    for term in terms:
        total = total + term.evaluate(bohr, arguments, eta)
    return complex(total) if total.ndim == 0 else total


def matter_correlation_quadratic(
    system: LevelSystem,
    rho: DensityMatrix,
    omega: ArrayLike,
    omega1: ArrayLike,
    eta: float,
):
    """⟨V_L G(ω) V_- G(ω - ω1') V_-⟩ summed over the initial pairs of ρ."""
    require_positive_eta(eta)
    return evaluate_terms(system, quadratic_terms(system, rho), omega, omega1, eta=eta)


def chi3_generalized(
    system: LevelSystem,
    rho: DensityMatrix,
    omega: ArrayLike,
    omega1: ArrayLike,
    omega2: ArrayLike,
    eta: float,
):
    """
    Third-order generalized susceptibility weight, summed over initial pairs.

    Each pair (a, b) carries δ(ω - ω1' - ω2' - ω3' - ω_ab); use
    ``chi3_support`` to collapse the last frequency integral.
    """
    require_positive_eta(eta)
    return evaluate_terms(system, cubic_terms(system, rho), omega, omega1, omega2, eta)


def chi3_support(system: LevelSystem, a: str, b: str, omega, omega1, omega2) -> float:
    """The ω3' at which the (a, b) delta is supported."""
    return omega - omega1 - omega2 - system.energy(a) + system.energy(b)


def pole_inventory(system: LevelSystem, terms: list[CorrelationTerm]) -> set[tuple[str, float]]:
    """Distinct (argument slot, ω_kl) resonances over all terms."""
    bohr = system.bohr_matrix()
    return {
        (SLOT_NAMES[g.slot], round(float(bohr[g.k, g.l]), 12))
        for term in terms
        for g in term.propagators
    }


def pole_inventory_quadratic(system: LevelSystem, rho: DensityMatrix) -> set[tuple[str, float]]:
    return pole_inventory(system, quadratic_terms(system, rho))


def pole_inventory_cubic(system: LevelSystem, rho: DensityMatrix) -> set[tuple[str, float]]:
    return pole_inventory(system, cubic_terms(system, rho))
