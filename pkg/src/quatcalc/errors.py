"""Exception types raised by quatcalc."""


class QuatCalcError(Exception):
    """Base class for all library errors."""


class PureRealInput(QuatCalcError, ValueError):
    """The point has no well-defined unit imaginary (imaginary radius too small)."""


class PureScalarInput(PureRealInput):
    """SU(2) analogue of PureRealInput: the element is a multiple of the identity."""


class DomainError(QuatCalcError, ValueError):
    """A function was evaluated at a pole or on a branch cut."""


class DegenerateResidual(QuatCalcError, ArithmeticError):
    """All residuals are at rounding level, so no convergence slope exists."""


class AntiderivativeMismatch(QuatCalcError, ValueError):
    """The supplied antiderivative does not differentiate to the integrand."""
