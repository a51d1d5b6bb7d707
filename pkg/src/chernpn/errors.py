"""Exception hierarchy shared by every module in the package."""


class ChernError(Exception):
    """Base class for all errors raised by chernpn."""


class DomainError(ChernError, ValueError):
    """An argument lies outside the supported domain (dimension, degree, rank)."""


class AmbientMismatch(ChernError, ValueError):
    """Two classes living on different projective spaces were combined."""


class NotAUnit(ChernError, ArithmeticError):
    """Inversion of a class whose constant term is zero."""


class DegreeOutOfRange(DomainError):
    pass


class InvalidAtDimension(DomainError):
    """The expression has no meaning on the requested P^n (e.g. Omega^2 on P^1)."""


class NonIntegralChern(ChernError, ArithmeticError):
    """A computation produced Chern classes that are not integers."""


class RankViolation(ChernError, ValueError):
    """Nonzero Chern classes above the rank of the bundle."""


class RankTooSmall(ChernError, ValueError):
    pass


class UnsupportedOperation(ChernError, NotImplementedError):
    pass


class UnsupportedExpression(ChernError, ValueError):
    """Cohomology is not determined for this expression (quotients, wedges)."""


class BundleSyntaxError(ChernError, ValueError):
    """Raised by the expression parser.

    Attributes
    ----------
    offset : int
        Byte offset into the source text where parsing failed.
    expected : frozenset of str
        Tokens that would have been accepted at ``offset``.
    """

    def __init__(self, message, text, offset, expected=()):
        self.text = text
        self.offset = offset
        self.expected = frozenset(expected)
        detail = message
        if self.expected:
            detail += "; expected one of: " + ", ".join(sorted(self.expected))
        pointer = text + "\n" + " " * offset + "^"
        super().__init__(f"{detail} at offset {offset}\n{pointer}")
