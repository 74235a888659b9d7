from enum import Enum, unique
from fractions import Fraction
from itertools import permutations
from math import factorial

from kannanfix.contraction.condition import pair_key, t_kannan_lambda
from kannanfix.contraction.verdict import HALF
from kannanfix.map.finiteMap import FiniteSelfMap
from kannanfix.map.properties import check_injective, classify_convergence
from kannanfix.utility.boilerplate import create_logger
from kannanfix.utility.errors import LambdaOutOfRange, SearchSpaceTooLarge
from kannanfix.utility.verbosity import VerbosityController


logger = create_logger("certificate")


@unique
class SearchSpace(Enum):
    """
    On a finite set an injective self-map is a bijection, so both options
    enumerate the same candidates; the distinction is kept for reports.
    """

    PERMUTATIONS = "permutations"
    INJECTIONS = "injections"


class Certificate:
    """
    Injective auxiliary map T with a constant below 1/2 for which the
    T-dependent Kannan condition holds on every included pair.
    """

    def __init__(self, auxiliaryMap, lam, properties, verdict):

        self._auxMap = auxiliaryMap
        self._lambda = lam
        self._properties = properties
        self._verdict = verdict

    @property
    def auxiliaryMap(self):
        return self._auxMap

    @property
    def lam(self):
        return self._lambda

    @property
    def properties(self):
        return self._properties

    @property
    def verdict(self):
        return self._verdict


def validate_cap(lambdaCap):

    lambdaCap = Fraction(lambdaCap)

    if lambdaCap < 0 or lambdaCap >= HALF:
        raise LambdaOutOfRange(
            f"lambda cap must lie in [0, 1/2), got {lambdaCap}")

    return lambdaCap


class CertificateSearch:
    """
    Exhaustive search for the lexicographically smallest certifying T.

    Candidates are visited in lexicographic order of their image tables
    (image of point 0 first), so the first hit is the minimum regardless of
    how the work is split.
    """

    MAX_POINTS = 10

    def __init__(self, space, selfMap, excluded=frozenset(), maxPoints=None,
                 verbose=False):

        self._space = space
        self._selfMap = selfMap
        self._excluded = frozenset(excluded)
        self._maxPoints = CertificateSearch.MAX_POINTS \
            if maxPoints is None else maxPoints

        self._verbosityController = VerbosityController(
            task="certificate search")
        if not verbose:
            self._verbosityController.turn_off()

        self._nExamined = 0

    @property
    def candidatesExamined(self):
        return self._nExamined

    def _check_budget(self):

        if self._space.size > self._maxPoints:
            raise SearchSpaceTooLarge(
                f"{self._space.size}! candidate maps exceed the search budget "
                f"of {self._maxPoints} points")

    def _admissible_pairs(self):

        return [(x.index, y.index)
                for x, y in self._space.pairs(includeDiagonal=False)
                if pair_key(x, y) not in self._excluded]

    def _satisfies(self, table, cap, pairs, dist, sTable):

        gap = [dist[table[x]][table[sTable[x]]] for x in range(len(table))]

        for x, y in pairs:
            if dist[table[sTable[x]]][table[sTable[y]]] > \
                    cap * (gap[x] + gap[y]):
                return False

        return True

    def run(self, lambdaCap, searchSpace=SearchSpace.PERMUTATIONS):
        """
        Returns the smallest Certificate with constant <= lambdaCap, or None
        when no injective T qualifies.
        """
        lambdaCap = validate_cap(lambdaCap)
        searchSpace = SearchSpace(searchSpace)

        self._check_budget()

        n = self._space.size
        pairs = self._admissible_pairs()
        dist = self._space.matrix
        sTable = self._selfMap.table

        if self._verbosityController.isOn:
            self._verbosityController.prepare(factorial(n))

        self._nExamined = 0

        for table in permutations(range(n)):

            self._verbosityController.run(self._nExamined)
            self._nExamined += 1

            if not self._satisfies(table, lambdaCap, pairs, dist, sTable):
                continue

            auxMap = FiniteSelfMap(self._space, table, "T")
            verdict = t_kannan_lambda(self._space, self._selfMap, auxMap,
                                      self._excluded)

            if self._verbosityController.isOn:
                logger.info(f"certificate found after {self._nExamined} "
                            f"{searchSpace.value}")

            return Certificate(auxMap, verdict.lambdaMin,
                               classify_convergence(auxMap), verdict)

        return None


def search_certificate(space, selfMap, lambdaCap,
                       searchSpace=SearchSpace.PERMUTATIONS,
                       excluded=frozenset(), maxPoints=None, verbose=False):

    search = CertificateSearch(space, selfMap, excluded, maxPoints, verbose)
    return search.run(lambdaCap, searchSpace)


def verify_certificate(space, selfMap, auxiliaryMap, lambdaCap,
                       excluded=frozenset()):
    """
    Decide whether a given T certifies S at the cap: T injective and the
    T-dependent constant at most lambdaCap. Returns (valid, verdict).
    """
    lambdaCap = validate_cap(lambdaCap)

    verdict = t_kannan_lambda(space, selfMap, auxiliaryMap, excluded)
    injective = check_injective(auxiliaryMap).injective

    return injective and verdict.lambdaMin <= lambdaCap, verdict
