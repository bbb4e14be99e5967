"""Exception types shared across the package."""


class ChromToolsError(Exception):
    """Base class for every error raised by chromtools."""


class InexactDivision(ChromToolsError, ArithmeticError):
    pass


class ZeroPolynomial(ChromToolsError, ValueError):
    pass


class InvalidEdge(ChromToolsError, ValueError):
    pass


class Disconnected(ChromToolsError, ValueError):
    pass


class MalformedGraph6(ChromToolsError, ValueError):
    pass


class InvalidSpec(ChromToolsError, ValueError):
    pass


class UnsupportedHost(ChromToolsError, ValueError):
    pass


class DomainViolation(ChromToolsError, ValueError):
    pass


class ZeroArgument(ChromToolsError, ZeroDivisionError):
    pass


class InvalidOrder(ChromToolsError, ValueError):
    pass


class OrderTooLarge(ChromToolsError, ValueError):
    pass


class WrongChromaticNumber(ChromToolsError, ValueError):
    pass
