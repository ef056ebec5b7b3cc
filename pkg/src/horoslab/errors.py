"""Exception types raised by the library."""


class InvalidParameterError(ValueError):
    """A parameter lies outside the domain of the requested family or operation."""


class DegenerateAxisError(InvalidParameterError):
    """A closed form divides by U(s) at a point where the profile touches the axis."""


class NotATangencyError(InvalidParameterError):
    """The parameter handed to a tangency routine is not a vertical tangency."""


class QuadratureError(ArithmeticError):
    """Adaptive quadrature failed to reach the requested tolerance."""


class ContourError(ValueError):
    """A meridian contour is open or negatively oriented."""


class StepTooLargeError(ArithmeticError):
    """Finite-difference estimates at h and h/2 disagree."""


class NoCandidateError(LookupError):
    """No candidate family reaches the requested volume."""
