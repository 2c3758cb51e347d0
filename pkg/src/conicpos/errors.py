"""Exception hierarchy shared by every module of the package."""


class ConicError(Exception):
    """Base class for all errors raised by conicpos."""


class AllZero(ConicError):
    pass


class RoleMismatch(ConicError):
    """A conic does not have the type its role in a classifier requires."""


class DegenerateInput(RoleMismatch):
    """The conic matrix is singular (a line pair, a double line, ...)."""


class NegativeRadicand(ConicError, ValueError):
    pass


class NotFinite(ConicError, ValueError):
    pass


class LeadingZero(ConicError, ValueError):
    pass


class InvalidParams(ConicError, ValueError):
    pass


class NoCaseMatched(ConicError):
    """No condition set of a decision list holds for an exact input.

    Never expected; when raised, the offending sign data is attached so
    the instance can be logged as a counterexample.
    """

    def __init__(self, message, data=None):
        super().__init__(message)
        self.data = data


class CaseOverlap(NoCaseMatched):
    """More than one case of a decision list matched the same input."""


class PatternUnmatched(ConicError):
    """A characteristic-root pattern fits none of the listed positions."""

    def __init__(self, message, pattern=None):
        super().__init__(message)
        self.pattern = pattern


class CommonComponent(ConicError):
    pass


class ParseError(ConicError, ValueError):
    pass


class IndeterminateSign(ConicError):
    """Float mode could not sign a quantity the decision needed."""

    def __init__(self, message, quantities=()):
        super().__init__(message)
        self.quantities = tuple(quantities)
