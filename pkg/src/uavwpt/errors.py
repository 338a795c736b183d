"""Exception hierarchy shared by all uavwpt modules."""


class WptError(ValueError):
    """Base class for all domain and physics errors raised by this package."""


class GeometryError(WptError):
    """A coil or pose parameter is outside the validity domain of the model."""


class SingularityError(WptError):
    """Filaments coincide or nearly touch; the field integral diverges."""


class PhysicalityError(WptError):
    """Inputs describe a configuration no passive circuit can realize."""


class BracketingError(WptError):
    """Root bracket does not contain a sign change."""


class NumericalError(WptError):
    """An iterative scheme failed to converge.

    Carries the best available estimate so callers can decide whether
    it is still usable.
    """

    def __init__(self, message, best_estimate=None):
        super().__init__(message)
        self.best_estimate = best_estimate


class TouchstoneFormatError(WptError):
    """Malformed Touchstone input."""

    def __init__(self, message, line_number=None):
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)
        self.line_number = line_number


class ConversionError(WptError):
    """Two-port parameter conversion is singular for this sample."""


class ExtractionError(WptError):
    """Coupling extraction is invalid (e.g. a port is not inductive)."""


class ReportKeyError(WptError):
    """Analytic and measured series do not share the same keys."""

    def __init__(self, message, missing_keys=()):
        super().__init__(message)
        self.missing_keys = tuple(missing_keys)


class DataRangeError(WptError):
    """A query lies outside the hull of a bundled measurement dataset."""


class ChargeRateError(WptError):
    """Requested charge rate exceeds the cell's safe maximum."""


class InfeasibleError(WptError):
    """The requested operating point cannot be reached (e.g. k = 0)."""
