from noneq_spectra.errors.base import (
    NoneqSpectraError,
    LabelError,
    ConfigurationError,
    ArgumentError,
    InvalidDensityMatrix,
    DomainError,
    NumericalError,
    QuadratureError,
    DegeneracyError,
    SingularityError,
    ContractError,
    ScenarioParseError,
)

__all__ = [
    "NoneqSpectraError",
    "LabelError",
    "ConfigurationError",
    "ArgumentError",
    "InvalidDensityMatrix",
    "DomainError",
    "NumericalError",
    "QuadratureError",
    "DegeneracyError",
    "SingularityError",
    "ContractError",
    "ScenarioParseError",
]
