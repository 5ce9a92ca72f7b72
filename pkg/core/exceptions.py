# core/exceptions.py


class CarlitzLabError(Exception):
    """Base class for all errors raised by carlitz_lab"""

    pass


class InvalidFieldError(CarlitzLabError, ValueError):
    """Raised when p, e or the modulus do not describe a finite field"""

    pass


class FieldMismatchError(CarlitzLabError, ValueError):
    """Raised when operands live over different fields"""

    pass


class FieldDivisionError(CarlitzLabError, ZeroDivisionError):
    """Raised on division by zero in F_r, F_r[T] or F_r(T)"""

    pass


class ExponentOverflowError(CarlitzLabError, OverflowError):
    """Raised when an exponent or degree leaves the supported integer range"""

    pass


class ParseError(CarlitzLabError, ValueError):
    """Raised when canonical text cannot be parsed"""

    pass


class TruncationError(CarlitzLabError, ValueError):
    """Raised when a coefficient beyond a series' truncation order is requested"""

    pass


class NonUnitSeriesError(CarlitzLabError, ZeroDivisionError):
    """Raised when inverting a series whose constant term is zero"""

    pass


class RouteNotApplicableError(CarlitzLabError):
    """Raised when a computation route cannot evaluate a cell"""

    pass


class ConfigurationError(CarlitzLabError, ValueError):
    """Raised for an invalid run configuration"""

    pass
