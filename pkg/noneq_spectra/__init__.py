"""Linear and wave-mixing optical signals of multilevel systems prepared out of equilibrium."""

from noneq_spectra.core import DensityMatrix, LevelSystem, thermal_state
from noneq_spectra.driven import DrivenSystem, driven_signal, steady_state
from noneq_spectra.fields import ChirpedGaussianPulse, CWField, GaussianProbe
from noneq_spectra.response import linear_signal, time_domain_oracle
from noneq_spectra.wavemixing import FWMScenario, chi3_pathway_fwm

__version__ = "0.1.0"

__all__ = [
    "ChirpedGaussianPulse",
    "CWField",
    "DensityMatrix",
    "DrivenSystem",
    "FWMScenario",
    "GaussianProbe",
    "LevelSystem",
    "chi3_pathway_fwm",
    "driven_signal",
    "linear_signal",
    "steady_state",
    "thermal_state",
    "time_domain_oracle",
]
