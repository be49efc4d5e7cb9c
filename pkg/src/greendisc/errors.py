"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class SingularityError(ValueError):
    """Evaluation was requested at (or too close to) a pole."""


class ConvergenceError(RuntimeError):
    """A series failed to reach the requested tolerance within its term budget."""


class QuadratureError(RuntimeError):
    """A quadrature rule sampled a non-finite value."""


class InadmissibleMeasureError(ValueError):
    """The measure fails the weighted moment condition for the exponent in use."""
