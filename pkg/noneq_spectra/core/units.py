import numpy as np
from numpy.typing import ArrayLike

# Reduced Planck constant in eV·fs; internal units set it to 1 (eV, eV⁻¹).
HBAR_EV_FS = 0.6582119569


def fs_to_inverse_ev(t: ArrayLike):
    if np.ndim(t):
        return np.asarray(t, dtype=float) / HBAR_EV_FS
    return float(t) / HBAR_EV_FS


def inverse_ev_to_fs(t: ArrayLike):
    if np.ndim(t):
        return np.asarray(t, dtype=float) * HBAR_EV_FS
    return float(t) * HBAR_EV_FS
