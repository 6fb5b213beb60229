"""Exception types shared across the package."""


class StableArmaError(Exception):
    """Base class for all package errors."""


class DomainError(StableArmaError, ValueError):
    """A parameter or input is outside its admissible range."""


class StationarityError(StableArmaError, ValueError):
    """A GARCH specification violates its strict stationarity condition."""


class EstimationError(StableArmaError, RuntimeError):
    """An estimator could not produce a usable result."""
