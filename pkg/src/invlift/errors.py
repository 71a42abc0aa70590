"""Exception types raised by the library."""


class InvliftError(Exception):
    """Base class for all library-specific errors."""


class SingularMatrixError(InvliftError):
    """An exact matrix inverse was requested but the matrix has no inverse."""


class SingularJacobianError(InvliftError):
    """The Jacobian of a lifting system is singular at the base point."""


class RegularPointNotFoundError(InvliftError):
    """No sample point with an invertible Jacobian was found.

    Signals degenerate generators, a tiny coefficient field, or bad luck.
    The last point tried is kept in ``last_point``.
    """

    def __init__(self, message, last_point=None):
        super().__init__(message)
        self.last_point = last_point


class VerificationFailedError(InvliftError):
    """Substituting the generators back into the result did not reproduce
    the input polynomial.  The nonzero difference is kept in ``difference``.
    """

    def __init__(self, message, difference=None):
        super().__init__(message)
        self.difference = difference


class InterpolationSingularError(InvliftError):
    """All interpolation attempts produced a singular collocation matrix."""


class ParseError(InvliftError, ValueError):
    """Expression text could not be parsed.

    ``offset`` is the byte offset of the failure, ``expected`` a set of
    token descriptions that would have been accepted there.
    """

    def __init__(self, message, offset, expected=()):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset
        self.expected = frozenset(expected)


class UnknownIdentifierError(ParseError):
    """An identifier in an expression is not a declared variable."""

    def __init__(self, name, offset):
        super().__init__(f"unknown identifier {name!r}", offset)
        self.name = name
