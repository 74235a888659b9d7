import math

from fractions import Fraction

from kannanfix.space.rational import format_rational


INFINITE = math.inf

HALF = Fraction(1, 2)


def format_lambda(value):
    return "inf" if value == INFINITE else format_rational(value)


class LambdaVerdict:
    """
    Smallest constant for which a contraction condition holds on all
    included pairs.

    Instance Attributes
    -------------------
    _lambdaMin : Fraction or INFINITE
        Exact supremum of the pair ratios; INFINITE iff some included pair
        has a zero denominator and a positive numerator.
    _argmaxPair : tuple of PointId or None
        First pair (canonical order) attaining the supremum.
    _excludedPairs : frozenset of frozenset of int
        Pairs left out of the scan (truncation clamps).
    """

    def __init__(self, condition, lambdaMin, argmaxPair, excludedPairs):

        self._condition = condition
        self._lambdaMin = lambdaMin
        self._argmaxPair = argmaxPair
        self._excludedPairs = frozenset(excludedPairs)

    @property
    def condition(self):
        return self._condition

    @property
    def lambdaMin(self):
        return self._lambdaMin

    @property
    def argmaxPair(self):
        return self._argmaxPair

    @property
    def excludedPairs(self):
        return self._excludedPairs

    @property
    def isInfinite(self):
        return self._lambdaMin == INFINITE

    @property
    def feasibleBelowHalf(self):
        return self._lambdaMin < HALF

    def __repr__(self):
        return (f"LambdaVerdict({self._condition}, "
                f"lambda={format_lambda(self._lambdaMin)})")
