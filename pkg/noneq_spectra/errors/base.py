class NoneqSpectraError(Exception):
    """Base exception for all noneq-spectra errors."""

    pass


class LabelError(NoneqSpectraError):
    """Raised when a state label is not part of the level system."""

    pass


class ConfigurationError(NoneqSpectraError):
    """Raised when a system or scenario is not set up for the requested computation."""

    pass


class ArgumentError(NoneqSpectraError):
    """Raised when an operation receives an argument outside its domain of definition."""

    pass


class InvalidDensityMatrix(ArgumentError):
    """Raised when a matrix violates hermiticity, trace or positivity of the diagonal."""

    pass


class DomainError(NoneqSpectraError):
    """Raised when a special function is evaluated outside its supported domain."""

    pass


class NumericalError(NoneqSpectraError):
    """Raised when a numerical procedure fails to reach its tolerance."""

    pass


class QuadratureError(NumericalError):
    """Raised when an oracle quadrature reports an error estimate above tolerance."""

    def __init__(self, message: str, error_estimate: float, tolerance: float):
        super().__init__(message)
        self.error_estimate = error_estimate
        self.tolerance = tolerance


class DegeneracyError(NumericalError):
    """Raised when a Liouvillian has more than one stationary state."""

    def __init__(self, message: str, kernel_dimension: int):
        super().__init__(message)
        self.kernel_dimension = kernel_dimension


class SingularityError(NumericalError):
    """Raised when a resolvent is evaluated exactly on an undamped pole."""

    pass


class ContractError(NoneqSpectraError):
    """Raised when an operation is called outside the regime it is defined for."""

    pass


class ScenarioParseError(NoneqSpectraError):
    """Raised when a scenario file cannot be parsed or validated."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        super().__init__(message)
        self.line = line
        self.column = column

    def __str__(self):
        message = super().__str__()
        if self.line is None:
            return message
        return f"line {self.line}, column {self.column}: {message}"
