"""Exception types raised by the kernel."""


class EphCurveError(Exception):
    """Base class for all kernel errors."""


class DomainError(EphCurveError, ValueError):
    """Evaluation parameter outside the curve domain."""


class OverflowHazardError(EphCurveError, OverflowError):
    """Naive hyperbolic forms would overflow double precision at this omega."""


class ZeroVectorError(EphCurveError, ValueError):
    """A direction vector required to be nonzero has zero length."""


class DegenerateDirectionError(EphCurveError, ValueError):
    """Direction (anti)parallel to the singular axis of the square-root map."""


class SingularControlBlockError(EphCurveError, ValueError):
    """Trailing control-point block is singular; dynamic recursion undefined."""
