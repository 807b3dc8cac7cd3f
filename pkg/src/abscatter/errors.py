"""Exception types raised by abscatter."""


class ParameterError(ValueError):
    """An input parameter lies outside the admissible range."""


class IntegerFluxError(ParameterError):
    """The reduced flux is an integer number of flux quanta (alpha = 0)."""


class DomainError(ParameterError):
    """A special-function argument lies outside the supported domain."""


class ForwardSingularityError(ValueError):
    """Evaluation requested in the forward direction theta = theta0."""


class QuadratureError(ArithmeticError):
    """A quadrature rule produced a non-finite sample."""
