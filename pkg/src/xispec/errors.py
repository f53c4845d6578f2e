"""Exception types shared across the package.

Numerical routines raise instead of returning NaN: a silent NaN in a zero
scan or a figure table is worse than a loud failure.
"""


class XispecError(Exception):
    """Base class for all package-specific errors."""


class DomainError(XispecError, ValueError):
    """Argument outside the mathematical domain of the operation."""


class RangeError(XispecError, ValueError):
    """Argument inside the domain but outside the supported numeric range.

    Carries ``largest_safe`` when a concrete boundary is known.
    """

    def __init__(self, message, largest_safe=None):
        super().__init__(message)
        self.largest_safe = largest_safe


class ValidationError(XispecError, ValueError):
    """Structurally invalid input (non-monotone table, bad config, ...)."""


class ConvergenceError(XispecError, RuntimeError):
    """Requested tolerance not achieved; ``achieved`` holds the estimate."""

    def __init__(self, message, achieved=None):
        super().__init__(message)
        self.achieved = achieved


class IntegrationError(XispecError, RuntimeError):
    """ODE integration failed (step-size collapse, solver error)."""


class SeedError(XispecError, RuntimeError):
    """Asymptotic seed for a shooting run is not valid at the start point."""


class AsymptoticRegimeError(XispecError, ValueError):
    """Asymptotic formula requested outside its validity regime."""


class UnsupportedShapeError(XispecError, ValueError):
    """Potential shape not handled (e.g. multiple turning points)."""


class ResolutionError(XispecError, ValueError):
    """Grid too coarse to resolve the requested quantity."""


class EvaluationError(XispecError, RuntimeError):
    """A function produced a non-finite value where a finite one is required."""


class GridAdjustmentError(XispecError, ValueError):
    """A sample grid node coincides with a pole; shift the grid."""


def require_finite(value, what):
    """Raise EvaluationError if ``value`` has a non-finite component."""
    import numpy as np

    arr = np.atleast_1d(value)
    if not (np.all(np.isfinite(arr.real)) and np.all(np.isfinite(arr.imag))):
        raise EvaluationError(f"{what} produced a non-finite value")
    return value
