"""Exception types shared by every module in the package."""


class QuadranceError(Exception):
    """Base class for all domain errors raised by this package."""


# -- field construction and arithmetic ------------------------------------

class CharacteristicTwo(QuadranceError):
    """The field F_2 (or any characteristic-2 field) is not supported."""


class NotPrime(QuadranceError):
    """A prime-field modulus failed the primality check."""


class DivisionByZero(QuadranceError, ZeroDivisionError):
    """Division or inversion with a zero divisor."""


class MixedContexts(QuadranceError):
    """Two operands belong to different fields."""


class InfiniteField(QuadranceError):
    """Enumeration requested over the rationals."""


# -- geometry --------------------------------------------------------------

class DegenerateForm(QuadranceError):
    """The form has zero discriminant and defines no metrical structure."""


class NullPoint(QuadranceError):
    """A projective point is null for the form in use.

    ``argument`` names which input was null (e.g. "a1").
    """

    def __init__(self, message, argument=None):
        super().__init__(message)
        self.argument = argument


class CoincidentPoints(QuadranceError):
    """Two points coincide where distinct points are required."""


class DegenerateDenominator(QuadranceError):
    """A solution formula's denominator vanished."""


class NotIsometry(QuadranceError):
    """A map or matrix is not an isometry of the structure in question."""


class NullParameter(QuadranceError):
    """An isometry or multiplication parameter is null for its color."""


class ColorMismatch(QuadranceError):
    """Two isometries of different colors cannot be composed."""


class NotUnitCircle(QuadranceError):
    """The point cannot be scaled onto x^2 + y^2 = 1 inside its field."""


# -- polynomial engine ------------------------------------------------------

class NonIntegralResult(QuadranceError):
    """An exact division that must yield integers did not."""


class FactorizationFailure(QuadranceError):
    """A polynomial factor came out with a remainder or wrong degree."""


# -- command line ------------------------------------------------------------

class ParseError(QuadranceError):
    """Malformed literal, descriptor, or request line."""


class UnknownSuite(QuadranceError):
    """The requested verification suite does not exist."""
