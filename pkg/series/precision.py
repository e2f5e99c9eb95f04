"""
Working precision for a run.

Every valuation compared while classifying points, retracting them or testing
fixedness is bounded by 3N plus shifts by n and a, where N is the largest
triangle index in play. Four extra exponents of slack sit on top; a shortfall
surfaces as PrecisionExhausted rather than a wrong answer.
"""


def precision_budget(N, n=0, a=0):
    return 3 * N + n + a + 4


def resolve_precision(N, n=0, a=0, override=None):
    """The --prec override when given, otherwise the budget for (N, n, a)"""
    if override is not None:
        return override
    return precision_budget(N, n, a)
