"""Exception types raised across the package."""


class KGOscillatorError(Exception):
    """Base class for all package errors."""


class DomainError(KGOscillatorError, ValueError):
    """Argument outside the domain of a special function or model."""


class ConvergenceError(KGOscillatorError, RuntimeError):
    """An iterative root-finder failed to converge."""


class ComplexEnergy(KGOscillatorError, ValueError):
    """The dispersion quadratic has a negative discriminant."""


class DegenerateDispersion(KGOscillatorError, ValueError):
    """Both the E^2 and E coefficients of the dispersion relation vanish."""


class ZeroDensity(KGOscillatorError, ValueError):
    """The mode carries no charge, so it cannot be normalized to +/-1."""


class GridTooCoarse(KGOscillatorError, ValueError):
    """Estimated discretization error is too large relative to the level spacing."""
