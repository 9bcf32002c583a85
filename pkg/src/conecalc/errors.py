"""Exception hierarchy for conecalc."""


class ConecalcError(Exception):
    """Base class for every error raised by this package."""


class FormSyntaxError(ConecalcError, ValueError):
    pass


class MixedDegree(ConecalcError, ValueError):
    pass


class WrongArity(ConecalcError, ValueError):
    """A variable index lies outside 1..n."""


class ArityMismatch(ConecalcError, ValueError):
    """A point has the wrong number of coordinates."""


class DimensionMismatch(ConecalcError, ValueError):
    pass


class DegreeMismatch(ConecalcError, ValueError):
    pass


class DimensionTooSmall(ConecalcError, ValueError):
    pass


class TermBudgetExceeded(ConecalcError, RuntimeError):
    pass


class BadLevel(ConecalcError, ValueError):
    pass


class NotUnitVector(ConecalcError, ValueError):
    pass


class ZeroProjection(ConecalcError, ValueError):
    pass


class NotNormalized(ConecalcError, ValueError):
    pass


class DegenerateMax(ConecalcError, ValueError):
    pass


class ZeroIntegral(ConecalcError, ValueError):
    pass


class OddDegree(ConecalcError, ValueError):
    pass


class BadDegrees(ConecalcError, ValueError):
    pass


class BadEpsilon(ConecalcError, ValueError):
    pass
