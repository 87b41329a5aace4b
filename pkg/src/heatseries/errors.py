"""Exception types shared across the package."""


class HeatSeriesError(Exception):
    """Base class for all library errors."""


class DomainError(HeatSeriesError, ValueError):
    """An argument lies outside an operation's documented domain."""


class IntegrabilityError(HeatSeriesError, RuntimeError):
    """A quadrature did not converge, typically because the integrand
    decays too slowly.  Carries the offending multi-index when there is one."""

    def __init__(self, message, alpha=None):
        super().__init__(message)
        self.alpha = alpha


class UnsupportedVariantError(HeatSeriesError, TypeError):
    """The initial-datum variant cannot support the requested operation."""
