# src/utils/errors.py
"""
Exception hierarchy shared by every calculator.

Numerical failures (``NumericalError`` and subclasses) abort a CLI command
with exit code 3; everything else is either a usage problem or is recorded
as a failed check.
"""


class HopfionError(Exception):
    """Base class for all library errors."""


class DomainError(HopfionError, ValueError):
    """Input outside the operating domain (bad parameters, branch cut, Re z <= 0)."""


class NumericalError(HopfionError):
    """A numerical method could not deliver a trustworthy value."""


class QuadratureError(NumericalError):
    """Quadrature did not converge within its evaluation budget."""


class BesselAccuracyError(NumericalError):
    """Series and continued-fraction branches disagree at the crossover."""


class TraceError(NumericalError):
    """Streamline integration aborted (step underflow or budget exhausted)."""


class FitError(NumericalError):
    """Least-squares fit was ill-conditioned."""


class DegeneratePointError(HopfionError):
    """Field vanishes at the requested point so a ratio is undefined."""


class ClosureError(HopfionError):
    """Trace never left its seed neighbourhood, or is not closed when it must be."""


class TraceProximityError(HopfionError):
    """Two traces come too close for the Gauss linking integral."""
