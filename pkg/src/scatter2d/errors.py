"""Exception hierarchy shared by all scatter2d modules."""


class Scatter2dError(Exception):
    """Base class for all scatter2d errors."""


class DomainError(Scatter2dError):
    """Argument outside the mathematical domain of an operation."""


class PoleError(Scatter2dError):
    """Evaluation at a pole of the running coupling."""


class FallToCenterError(DomainError):
    """ell^2 + 2 m lambda <= 0: the effective order would be imaginary."""


class ResonanceError(Scatter2dError):
    """Singular matching denominator; |tan delta| is infinite."""


class ExtrapolationError(Scatter2dError):
    """Zero-radius extrapolation failed to converge."""


class AccuracyError(Scatter2dError):
    """Requested step/tolerance cannot deliver the target accuracy."""


class ConditioningError(Scatter2dError):
    """Ill-conditioned linear solve (bad choice of fit radii)."""


class QuadratureError(Scatter2dError):
    """Adaptive quadrature failed to reach the requested tolerance."""
