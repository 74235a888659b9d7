import logging

from fractions import Fraction

from kannanfix.contraction.interface import ContractionCondition
from kannanfix.contraction.verdict import INFINITE, LambdaVerdict
from kannanfix.map.finiteMap import FiniteSelfMap
from kannanfix.map.interface import MapInterface
from kannanfix.map.properties import check_injective
from kannanfix.utility.boilerplate import create_logger


logger = create_logger("contraction", logging.WARNING)


class KannanCondition(ContractionCondition):
    """
    d(Sx, Sy) <= lambda [d(x, Sx) + d(y, Sy)]
    """

    def __init__(self, selfMap: FiniteSelfMap):
        self._selfMap = selfMap

    @property
    def name(self):
        return "kannan"

    def numerator(self, x, y):
        return self._selfMap.image_distance(x, y)

    def denominator(self, x, y):

        space = self._selfMap.space
        S = self._selfMap

        return space.distance(x, S(x)) + space.distance(y, S(y))


class ExtendedKannanCondition(ContractionCondition):
    """
    d(TSx, TSy) <= lambda [d(Tx, TSx) + d(Ty, TSy)]

    With T the identity this is exactly the Kannan condition.
    """

    def __init__(self, selfMap: FiniteSelfMap, auxiliaryMap: MapInterface):

        if auxiliaryMap.space != selfMap.space:
            raise ValueError("S and T must be defined on the same space")

        self._selfMap = selfMap
        self._auxMap = auxiliaryMap

    @property
    def name(self):
        return "t-kannan"

    def numerator(self, x, y):

        S = self._selfMap
        return self._auxMap.image_distance(S(x), S(y))

    def denominator(self, x, y):

        S, T = self._selfMap, self._auxMap
        return T.image_distance(x, S(x)) + T.image_distance(y, S(y))


def pair_key(x, y):
    return frozenset((x.index, y.index))


def pair_ratio(numerator, denominator):
    """
    0/0 contributes 0 (the inequality reads 0 <= 0), k/0 with k > 0 is
    INFINITE (no constant works).
    """
    if denominator == 0:
        return Fraction(0) if numerator == 0 else INFINITE

    return Fraction(numerator) / denominator


def contraction_constant(space, condition: ContractionCondition,
                         excluded=frozenset()):
    """
    Exact supremum of numerator/denominator over all unordered pairs
    (diagonal included) that are not excluded.
    """
    excluded = frozenset(excluded)

    lambdaMin = Fraction(0)
    argmaxPair = None

    for x, y in space.pairs():

        if pair_key(x, y) in excluded:
            continue

        ratio = pair_ratio(condition.numerator(x, y),
                           condition.denominator(x, y))

        if argmaxPair is None or ratio > lambdaMin:
            lambdaMin = ratio
            argmaxPair = (x, y)

        if lambdaMin == INFINITE:
            break

    return LambdaVerdict(condition.name, lambdaMin, argmaxPair, excluded)


def condition_holds(space, condition: ContractionCondition, lam,
                    excluded=frozenset()):
    """
    Check the inequality pairwise at a fixed constant. Returns (True, None)
    or (False, firstFailingPair).
    """
    excluded = frozenset(excluded)

    for x, y in space.pairs():

        if pair_key(x, y) in excluded:
            continue

        if condition.numerator(x, y) > lam * condition.denominator(x, y):
            return False, (x, y)

    return True, None


def kannan_lambda(space, selfMap, excluded=frozenset()):
    return contraction_constant(space, KannanCondition(selfMap), excluded)


def t_kannan_lambda(space, selfMap, auxiliaryMap, excluded=frozenset()):

    injectivity = check_injective(auxiliaryMap)

    if not injectivity.injective:
        x, y = injectivity.collision
        logger.warning(f"auxiliary map is not injective ({x.label} and "
                       f"{y.label} share an image); the fixed-point theorems "
                       "do not apply")

    return contraction_constant(
        space, ExtendedKannanCondition(selfMap, auxiliaryMap), excluded)
