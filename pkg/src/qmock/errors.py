"""Exception types shared across the package."""


class QMockError(Exception):
    """Base class for all engine errors."""


class DivisionByZero(QMockError, ZeroDivisionError):
    pass


class DenominatorMismatch(QMockError):
    pass


class ZeroSeries(QMockError):
    pass


class FractionalExponentNegation(QMockError):
    pass


class InsufficientValidity(QMockError):
    pass


class PoleError(QMockError):
    pass


class NonConvergentProduct(QMockError):
    pass


class NonTruncatable(QMockError):
    pass


class UnboundedEnumeration(QMockError):
    pass


class NonGenericParameters(PoleError):
    pass


class UnknownIdentity(QMockError, KeyError):
    def __str__(self):
        return "unknown identity: %s" % (self.args[0] if self.args else "")


class UnknownTheorem(QMockError, KeyError):
    def __str__(self):
        return "unknown theorem: %s" % (self.args[0] if self.args else "")


class DSLSyntaxError(QMockError, SyntaxError):
    """Parse failure with position and the set of tokens that would have been accepted."""

    def __init__(self, message, line, col, expected=()):
        self.line = line
        self.col = col
        self.expected = tuple(sorted(set(expected)))
        detail = "%s at line %d, column %d" % (message, line, col)
        if self.expected:
            detail += "; expected one of: " + ", ".join(self.expected)
        super().__init__(detail)
        self.msg = detail

    def __str__(self):
        return self.msg


class EvaluationError(QMockError):
    """Wraps an engine error with the location of the offending subexpression."""

    def __init__(self, cause, where=""):
        self.cause = cause
        self.where = where
        super().__init__("%s: %s%s" % (type(cause).__name__, cause, (" in " + where) if where else ""))
