"""Exception and warning types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the region where a formula is valid."""


class PoleError(DomainError):
    """Evaluation hit a pole (e.g. gamma at a nonpositive integer)."""


class NoConvergence(ArithmeticError):
    """A series did not meet its termination criterion within the term cap."""


class NonFinite(ArithmeticError):
    """A quadrature produced a non-finite value or failed to stabilize."""


class TruncationWarning(RuntimeWarning):
    """A truncated power series left a tail above the requested tolerance."""
