from noneq_spectra.core.density import (
    check_state_labels,
    DensityMatrix,
    density_matrix,
    maximally_coherent_state,
    population_state,
    thermal_state,
)
from noneq_spectra.core.liouville import LiouvilleIndex
from noneq_spectra.core.system import LevelSystem, bohr_frequency
from noneq_spectra.core.units import HBAR_EV_FS, fs_to_inverse_ev, inverse_ev_to_fs

__all__ = [
    "DensityMatrix",
    "LevelSystem",
    "LiouvilleIndex",
    "HBAR_EV_FS",
    "bohr_frequency",
    "check_state_labels",
    "density_matrix",
    "fs_to_inverse_ev",
    "inverse_ev_to_fs",
    "maximally_coherent_state",
    "population_state",
    "thermal_state",
]
