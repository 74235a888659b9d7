from enum import Enum, unique
from fractions import Fraction

from kannanfix.map.finiteMap import FiniteSelfMap
from kannanfix.map.lineMap import LineMap
from kannanfix.space.finiteSpace import FiniteSpace, SpaceKind
from kannanfix.space.rational import format_rational
from kannanfix.utility.errors import TruncationTooSmall


@unique
class FamilyId(Enum):

    KANNAN23 = "kannan23"


class AnalyticFamily:
    """
    Closed-form pair (S, T) on X = {0} u {1/n : n >= 4} with the Euclidean
    metric:

        S(0) = 0,  S(1/n) = 1/(n+1),
        T(0) = 0,  T(1/n) = 1/n^n.

    S fails the Kannan condition for every positive constant, while the
    T-dependent condition holds with constant 1/3.

    Instance Attributes
    -------------------
    _familyId : FamilyId
    _truncation : int
        Largest retained n; the finite domain is {0, 1/4, ..., 1/N}.
    """

    FIRST_INDEX = 4
    MIN_TRUNCATION = 5

    def __init__(self, familyId=FamilyId.KANNAN23, truncation=30):

        familyId = FamilyId(familyId)
        truncation = int(truncation)

        if truncation < AnalyticFamily.MIN_TRUNCATION:
            raise TruncationTooSmall(
                f"truncation N = {truncation} is below "
                f"{AnalyticFamily.MIN_TRUNCATION}; the domain needs at least "
                "two non-fixed points")

        self._familyId = familyId
        self._truncation = truncation

    @property
    def familyId(self):
        return self._familyId

    @property
    def truncation(self):
        return self._truncation

    @staticmethod
    def s_value(value):

        value = Fraction(value)
        if value == 0:
            return value

        return Fraction(1, value.denominator + 1)

    @staticmethod
    def t_value(value):

        value = Fraction(value)
        if value == 0:
            return value

        n = value.denominator
        return Fraction(1, n ** n)

    def domain(self):
        """
        Exact coordinates of the retained points: 0, 1/4, ..., 1/N.
        """
        return [Fraction(0)] + [Fraction(1, n) for n in
                                range(AnalyticFamily.FIRST_INDEX,
                                      self._truncation + 1)]

    def __eq__(self, other):

        if isinstance(other, AnalyticFamily):
            return self._familyId == other._familyId and \
                self._truncation == other._truncation

        return NotImplemented

    def __hash__(self):
        return hash((self._familyId, self._truncation))

    def __repr__(self):
        return f"AnalyticFamily({self._familyId.value}, N={self._truncation})"


class FamilyRealisation:
    """
    Finite realisation of an analytic family: the truncated space, S as a
    self-map with its boundary clamp, and T as a map into the line.
    """

    def __init__(self, family, space, selfMap, auxiliaryMap, clampedPoints):

        self._family = family
        self._space = space
        self._selfMap = selfMap
        self._auxMap = auxiliaryMap
        self._clampedPoints = frozenset(clampedPoints)

    @property
    def family(self):
        return self._family

    @property
    def space(self):
        return self._space

    @property
    def selfMap(self):
        return self._selfMap

    @property
    def auxiliaryMap(self):
        return self._auxMap

    @property
    def clampedPoints(self):
        return self._clampedPoints

    def excluded_pairs(self):
        """
        Every unordered pair (as a frozenset of indices) that touches a
        clamped point.
        """
        excluded = set()

        for clamp in self._clampedPoints:
            for p in self._space.points:
                excluded.add(frozenset((clamp.index, p.index)))

        return frozenset(excluded)

    def __iter__(self):
        return iter((self._space, self._selfMap, self._auxMap))


def realize_family(family: AnalyticFamily):
    """
    Truncate the family to {0, 1/4, ..., 1/N}.

    S(1/N) would leave the retained set, so the boundary point is clamped
    to itself and reported in `clampedPoints`. T images are exact big
    rationals on the line.
    """
    if family.truncation < AnalyticFamily.MIN_TRUNCATION:
        raise TruncationTooSmall(f"truncation N = {family.truncation}")

    values = family.domain()
    labels = [format_rational(v) for v in values]

    space = FiniteSpace.from_coordinates(labels, values, SpaceKind.METRIC)

    indexOf = {v: i for i, v in enumerate(values)}
    boundary = indexOf[Fraction(1, family.truncation)]

    table = []
    for i, v in enumerate(values):
        if i == boundary:
            table.append(i)
        else:
            table.append(indexOf[AnalyticFamily.s_value(v)])

    selfMap = FiniteSelfMap(space, table, "S")
    auxMap = LineMap(space, [AnalyticFamily.t_value(v) for v in values], "T")

    return FamilyRealisation(family, space, selfMap, auxMap,
                             [space.points[boundary]])
