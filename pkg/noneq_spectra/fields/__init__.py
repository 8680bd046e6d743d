from noneq_spectra.fields.cw import (
    CWField,
    DeltaComponent,
    GaussianProbe,
    cw_one_sided,
    cw_spectrum,
    probe_spectrum,
)
from noneq_spectra.fields.pulse import (
    ChirpedGaussianPulse,
    chirp_rate,
    instantaneous_frequency,
    one_sided_spectrum,
    pulse_duration,
    spectral_envelope,
    temporal_envelope,
)

__all__ = [
    "CWField",
    "ChirpedGaussianPulse",
    "DeltaComponent",
    "GaussianProbe",
    "chirp_rate",
    "cw_one_sided",
    "cw_spectrum",
    "instantaneous_frequency",
    "one_sided_spectrum",
    "probe_spectrum",
    "pulse_duration",
    "spectral_envelope",
    "temporal_envelope",
]
