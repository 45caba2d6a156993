"""Exception types raised across the package."""


class MatklsError(Exception):
    """Base class for all errors raised by matkls."""


class DegreeExceedsRank(MatklsError, ValueError):
    pass


class ZeroPolynomial(MatklsError, ValueError):
    pass


class NonIntegralCoefficient(MatklsError, ArithmeticError):
    pass


class MalformedSpec(MatklsError, ValueError):
    pass


class NotAMatroid(MatklsError, ValueError):
    pass


class GroundSetTooLarge(MatklsError, ValueError):
    pass


class NotComparable(MatklsError, ValueError):
    pass


class LatticeMismatch(MatklsError, ValueError):
    pass


class NotInvertible(MatklsError, ValueError):
    pass


class NotAKernel(MatklsError, ValueError):
    pass


class InconsistentKernel(MatklsError, ArithmeticError):
    """The half-degree equation for an interval had no solution."""


class NoClosedForm(MatklsError, ValueError):
    pass


class LimitTooLarge(MatklsError, ValueError):
    pass
