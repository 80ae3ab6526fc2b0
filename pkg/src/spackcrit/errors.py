"""Exception types shared across the package."""


class SpackError(Exception):
    """Base class for all errors raised by spackcrit."""


class IndexOutOfRange(SpackError, IndexError):
    pass


class ParseError(SpackError, ValueError):
    pass


class NotNonDecreasing(SpackError, ValueError):
    pass


class MalformedGraph6(SpackError, ValueError):
    pass


class BadParameter(SpackError, ValueError):
    pass


class TooLarge(SpackError, ValueError):
    pass


class BadColoring(SpackError, ValueError):
    pass


class PreconditionViolated(SpackError, ValueError):
    pass


class HypothesisViolated(SpackError, ValueError):
    pass


class NoFiniteColoring(SpackError):
    """A finite packing sequence has too few terms to color the graph."""
