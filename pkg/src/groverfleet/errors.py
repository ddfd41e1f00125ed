"""Exception types shared across the estimator."""


class InvalidInputError(ValueError):
    """An argument is outside the domain an operation accepts."""


class AboveThresholdError(InvalidInputError):
    """Physical error rate at or above the surface-code threshold."""


class CapacityError(InvalidInputError):
    """A dense simulation was requested beyond the supported register size."""


class ImpracticalSamplingError(InvalidInputError):
    """Monte Carlo estimation requested for a hit rate too small to sample."""
