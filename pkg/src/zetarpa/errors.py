"""Exception types shared across the package."""


class ZetaRpaError(Exception):
    """Base class for all computation errors raised by this package."""


class PoleAtOne(ZetaRpaError):
    """Evaluation at s = 1, where zeta(s, a) and (s)_{-1} have a pole."""


class ZeroDenominator(ZetaRpaError):
    """A rational function was built with an identically zero denominator."""


class DegenerateTable(ZetaRpaError):
    """The Hankel system for a Pade approximant is singular.

    The approximant of the requested order does not exist (non-normal
    table entry).  This is expected for certain orders of series with
    vanishing coefficients and otherwise signals an out-of-theory input.
    """


class InsufficientCoefficients(ZetaRpaError):
    """Too few series coefficients were supplied for the requested order."""


class ZeroDeterminant(ZetaRpaError):
    """A moment determinant vanished while building an orthogonal polynomial."""


class SlowConvergence(ZetaRpaError):
    """A series or quadrature needed more terms than the configured cap."""


class InvalidM(ZetaRpaError):
    """The integration-by-parts order m violates m > s - 1."""


class IntegralityViolation(ZetaRpaError):
    """A value that must be an integer after scaling is not one.

    Raised by the integrality checks; hitting this indicates an
    implementation bug, not bad user input.
    """
