"""
Error types raised by the arithmetic, enumeration and verification layers.
"""


class ApaverError(Exception):
    """Base class for every domain error"""


class ZeroSeries(ApaverError):
    """A series with no nonzero tracked coefficient was inverted"""


class PrecisionExhausted(ApaverError):
    """The tracked window is too short to decide the requested fact"""


class WindowViolation(ApaverError):
    """An exponent range or coefficient falls outside the permitted window"""


class BudgetExceeded(ApaverError):
    """An enumeration would produce more points than the configured cap"""

    def __init__(self, requested, budget):
        self.requested = requested
        self.budget = budget
        super().__init__(f"Enumeration of {requested} points exceeds budget {budget}")


class NotApplicable(ApaverError):
    """A construction was asked for on an input outside its precondition"""


class InvalidCombination(ApaverError):
    """Region, vertex type and level disagree in a way that cannot happen"""


class ValuationMismatch(ApaverError):
    """No split element with the requested valuations exists over the field"""
