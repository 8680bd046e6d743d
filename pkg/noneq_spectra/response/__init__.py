from noneq_spectra.response.linear import (
    GeneralizedTerm,
    chi1_generalized,
    chi1_nascent,
    cw_integrated_signal,
    equilibrium_signal,
    linear_signal,
    linear_signal_threelevel_rwa,
    matter_correlation_linear,
    three_level_topology,
)
from noneq_spectra.response.oracle import time_domain_oracle
from noneq_spectra.response.trace import (
    COH,
    EQ,
    POP,
    TOTAL,
    SignalGrid,
    SignalSet,
    SignalTrace,
    frequency_grid,
)

__all__ = [
    "COH",
    "EQ",
    "POP",
    "TOTAL",
    "GeneralizedTerm",
    "SignalGrid",
    "SignalSet",
    "SignalTrace",
    "chi1_generalized",
    "chi1_nascent",
    "cw_integrated_signal",
    "equilibrium_signal",
    "frequency_grid",
    "linear_signal",
    "linear_signal_threelevel_rwa",
    "matter_correlation_linear",
    "three_level_topology",
    "time_domain_oracle",
]
