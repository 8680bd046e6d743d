"""Faddeeva and imaginary error functions for complex arguments."""

import functools
import logging
import math

import numpy as np
from numpy.typing import ArrayLike

from noneq_spectra.errors.base import DomainError

logger = logging.getLogger(__name__)

MAX_ARGUMENT = 1e8
SERIES_RADIUS = 1.0
SERIES_TERMS = 48
RATIONAL_TERMS = 40

_SQRT_PI = math.sqrt(math.pi)


@functools.lru_cache(maxsize=None)
def _faddeeva_series_coefficients(terms: int = SERIES_TERMS) -> np.ndarray:
    # w(z) = sum_n (iz)^n / Gamma(n/2 + 1)
    coefficients = np.empty(terms)
    coefficients[0] = 1.0
    coefficients[1] = 2.0 / _SQRT_PI
    for n in range(2, terms):
        coefficients[n] = coefficients[n - 2] / (n / 2.0)
    return coefficients[::-1].copy()


@functools.lru_cache(maxsize=None)
def _erfi_series_coefficients(terms: int = SERIES_TERMS // 2) -> np.ndarray:
    # Erfi(z) = 2/sqrt(pi) * sum_k z^(2k+1) / (k! (2k+1)), as a polynomial in z^2
    coefficients = np.array(
        [2.0 / _SQRT_PI / (math.factorial(k) * (2 * k + 1)) for k in range(terms)]
    )
    return coefficients[::-1].copy()


@functools.lru_cache(maxsize=None)
def _rational_coefficients(n: int = RATIONAL_TERMS) -> tuple[float, np.ndarray]:
    """
    Coefficients of the rational approximation of w(z) in the upper half plane.

    The map z -> (L + iz)/(L - iz) sends the upper half plane to the unit disc,
    where (L - iz)^2 w(z) is expanded in a truncated power series whose
    coefficients come from an FFT of the boundary values.
    """
    m = 2 * n
    samples = 2 * m
    k = np.arange(-m + 1, m)
    scale = math.sqrt(n / math.sqrt(2.0))
    theta = k * np.pi / m
    t = scale * np.tan(theta / 2.0)
    boundary = np.concatenate(([0.0], np.exp(-(t**2)) * (scale**2 + t**2)))
    coefficients = np.real(np.fft.fft(np.fft.fftshift(boundary))) / samples
    return scale, np.flipud(coefficients[1 : n + 1])


def _validate(z: ArrayLike) -> np.ndarray:
    values = np.asarray(z, dtype=complex)
    if not np.all(np.isfinite(values)):
        raise DomainError("Faddeeva function argument must be finite")
    if np.any(np.abs(values) >= MAX_ARGUMENT):
        raise DomainError(f"Faddeeva function argument must satisfy |z| < {MAX_ARGUMENT:g}")
    return values


def _rational_upper(z: np.ndarray) -> np.ndarray:
    scale, coefficients = _rational_coefficients()
    denominator = scale - 1j * z
    mapped = (scale + 1j * z) / denominator
    polynomial = np.polyval(coefficients, mapped)
    return 2.0 * polynomial / denominator**2 + (1.0 / _SQRT_PI) / denominator


def _faddeeva_array(values: np.ndarray) -> np.ndarray:
    result = np.empty_like(values)
    near = np.abs(values) < SERIES_RADIUS
    upper = ~near & (values.imag >= 0)
    lower = ~near & (values.imag < 0)

    if np.any(near):
        result[near] = np.polyval(_faddeeva_series_coefficients(), 1j * values[near])
    if np.any(upper):
        result[upper] = _rational_upper(values[upper])
    if np.any(lower):
        reflected = -values[lower]
        with np.errstate(over="ignore", invalid="ignore"):
            result[lower] = 2.0 * np.exp(-(reflected**2)) - _rational_upper(reflected)
    return result


def faddeeva(z: ArrayLike):
    """
    Scaled complementary error function w(z) = exp(-z^2) erfc(-iz).

    Uses the Maclaurin series for |z| < 1 and a rational approximation in the
    upper half plane elsewhere, reflected through w(-z) = 2 exp(-z^2) - w(z).
    Accepts scalars or arrays; relative accuracy is better than 1e-10 on |z| <= 10.
    """
    values = _validate(z)
    result = _faddeeva_array(np.atleast_1d(values))
    if values.ndim == 0:
        return complex(result[0])
    return result.reshape(values.shape)


def _erfi_array(values: np.ndarray) -> np.ndarray:
    result = np.empty_like(values)
    near = np.abs(values) < SERIES_RADIUS
    if np.any(near):
        squared = values[near] ** 2
        result[near] = values[near] * np.polyval(_erfi_series_coefficients(), squared)

    far = ~near
    if np.any(far):
        # odd symmetry keeps the faddeeva argument in the closed upper half plane
        sign = np.where(values[far].imag < 0, -1.0, 1.0)
        upper = sign * values[far]
        with np.errstate(over="ignore", invalid="ignore"):
            erfi_upper = -1j * (_faddeeva_array(upper) * np.exp(upper**2) - 1.0)
        result[far] = sign * erfi_upper
    return result


def erfi(z: ArrayLike):
    """Imaginary error function Erfi(z) = -i erf(iz)."""
    values = _validate(z)
    result = _erfi_array(np.atleast_1d(values))
    if values.ndim == 0:
        return complex(result[0])
    return result.reshape(values.shape)
