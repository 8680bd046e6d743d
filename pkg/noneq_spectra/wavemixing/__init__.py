from noneq_spectra.wavemixing.correlation import (
    CorrelationTerm,
    Propagator,
    chi3_generalized,
    chi3_support,
    cubic_terms,
    matter_correlation_quadratic,
    pole_inventory_cubic,
    pole_inventory_quadratic,
    quadratic_terms,
)
from noneq_spectra.wavemixing.pathways import FAMILIES, PathwayTerm, chi3_pathway_fwm, pathway_terms
from noneq_spectra.wavemixing.rwa import (
    RepresentationComparison,
    chi3_cw_signal,
    compare_representations,
)
from noneq_spectra.wavemixing.scenario import PHASE_MATCHING, FWMScenario, detuning
from noneq_spectra.wavemixing.twm import twm_signal

__all__ = [
    "FAMILIES",
    "PHASE_MATCHING",
    "CorrelationTerm",
    "FWMScenario",
    "PathwayTerm",
    "Propagator",
    "RepresentationComparison",
    "chi3_cw_signal",
    "chi3_generalized",
    "chi3_pathway_fwm",
    "chi3_support",
    "compare_representations",
    "cubic_terms",
    "detuning",
    "matter_correlation_quadratic",
    "pathway_terms",
    "pole_inventory_cubic",
    "pole_inventory_quadratic",
    "quadratic_terms",
    "twm_signal",
]
