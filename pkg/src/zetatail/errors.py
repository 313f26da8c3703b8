"""Exception types shared across the package."""


class ZetaTailError(Exception):
    """Base class for all errors raised by :mod:`zetatail`."""


class DomainError(ZetaTailError, ValueError):
    """An argument or parameter lies outside the supported domain."""


class DivergentMomentError(DomainError):
    """The requested moment of the distribution is infinite."""


class ConvergenceError(ZetaTailError, ArithmeticError):
    """A series, optimizer or quadrature failed to reach its tolerance."""


class DegenerateDataError(ZetaTailError, ValueError):
    """The data drive the maximum-likelihood estimate onto a boundary."""


class DataError(ZetaTailError, ValueError):
    """Malformed input data (bad CSV row, negative count, ...)."""
