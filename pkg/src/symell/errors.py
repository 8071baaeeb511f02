"""Exception types shared across the package."""


class DomainError(ValueError):
    """Arguments violate a function's mathematical domain."""


class RegimeError(ValueError):
    """Arguments violate the validity preconditions of an asymptotic case."""


class ToleranceError(ValueError):
    """No available method can certify the requested relative tolerance."""


class ConvergenceError(RuntimeError):
    """The adaptive quadrature scheme could not meet its accuracy target."""
