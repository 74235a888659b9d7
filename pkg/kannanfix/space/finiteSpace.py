from enum import Enum, unique
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from kannanfix.space.point import PointId
from kannanfix.space.rational import parse_rational
from kannanfix.utility.errors import MalformedSpace


@unique
class SpaceKind(Enum):

    METRIC = "metric"
    GENERALIZED = "generalized"


def point_index(point):

    if isinstance(point, PointId):
        return point.index

    return int(point)


class FiniteSpace:
    """
    Finite labelled point set with an exact distance table.

    The table is stored as a full square matrix of Fractions so that
    asymmetric or otherwise defective inputs stay representable and can be
    reported by the validators. Spaces are immutable; derived spaces are new
    objects.

    Instance Attributes
    -------------------
    _points : tuple of PointId
        Points in index order.
    _dist : tuple of tuple of Fraction
        _dist[i][j] is the distance from point i to point j.
    _kind : SpaceKind
        Declared kind; decides which validator `validate_declared` runs.
    """

    def __init__(self, labels, matrix, kind=SpaceKind.METRIC):

        labels = [str(label) for label in labels]

        if len(labels) == 0:
            raise MalformedSpace("a space needs at least one point")

        if len(set(labels)) != len(labels):
            raise MalformedSpace(f"point labels are not unique: {labels}")

        if len(matrix) != len(labels) or \
                any(len(row) != len(labels) for row in matrix):
            raise MalformedSpace("distance matrix does not match the number "
                                 f"of points ({len(labels)})")

        for i, row in enumerate(matrix):
            for j, entry in enumerate(row):
                if entry is None:
                    raise MalformedSpace(
                        f"missing distance d({labels[i]},{labels[j]})")

        self._points = tuple(PointId(i, label)
                             for i, label in enumerate(labels))
        self._labelIndex = {label: i for i, label in enumerate(labels)}
        self._dist = tuple(tuple(Fraction(entry) for entry in row)
                           for row in matrix)
        self._kind = SpaceKind(kind)

    @classmethod
    def from_matrix(cls, labels, matrix, kind=SpaceKind.METRIC):
        return cls(labels, matrix, kind)

    @classmethod
    def from_table(cls, labels, entries, kind=SpaceKind.METRIC):
        """
        Build a symmetric space from unordered entries (labelA, labelB, value).
        Every unordered pair of distinct points must appear exactly once;
        values may be Fractions, ints or "p/q" strings.
        """
        labels = [str(label) for label in labels]
        labelIndex = {label: i for i, label in enumerate(labels)}

        n = len(labels)
        matrix = [[Fraction(0) if i == j else None for j in range(n)]
                  for i in range(n)]

        for entry in entries:

            labelA, labelB, value = entry
            labelA, labelB = str(labelA), str(labelB)

            for label in (labelA, labelB):
                if label not in labelIndex:
                    raise MalformedSpace(f"unknown point label '{label}' in "
                                         "distance table")

            i, j = labelIndex[labelA], labelIndex[labelB]

            if i == j:
                raise MalformedSpace(f"self-distance d({labelA},{labelB}) "
                                     "must not be listed")

            if matrix[i][j] is not None:
                raise MalformedSpace(f"pair {{{labelA},{labelB}}} listed "
                                     "more than once")

            distance = parse_rational(value)
            matrix[i][j] = distance
            matrix[j][i] = distance

        return cls(labels, matrix, kind)

    @classmethod
    def from_coordinates(cls, labels, values, kind=SpaceKind.METRIC):
        """
        Points on the rational line with the absolute-difference metric.
        """
        values = [Fraction(v) for v in values]
        matrix = [[abs(a - b) for b in values] for a in values]

        return cls(labels, matrix, kind)

    @property
    def size(self):
        return len(self._points)

    @property
    def points(self):
        return self._points

    @property
    def labels(self):
        return tuple(p.label for p in self._points)

    @property
    def kind(self):
        return self._kind

    @property
    def matrix(self):
        return self._dist

    def point(self, label):

        try:
            return self._points[self._labelIndex[str(label)]]
        except KeyError:
            raise ValueError(f"unknown point label '{label}'") from None

    def distance(self, x, y):
        return self._dist[point_index(x)][point_index(y)]

    def pairs(self, includeDiagonal=True):
        """
        Unordered pairs {x, y} in canonical order (x.index <= y.index).
        """
        for x, y in combinations_with_replacement(self._points, 2):
            if x == y and not includeDiagonal:
                continue
            yield x, y

    def scaled(self, factor):

        factor = Fraction(factor)
        if factor <= 0:
            raise ValueError(f"scaling factor must be positive, got {factor}")

        matrix = [[factor * entry for entry in row] for row in self._dist]
        return FiniteSpace(self.labels, matrix, self._kind)

    @property
    def symmetric(self):
        return all(self._dist[i][j] == self._dist[j][i]
                   for i, j in combinations(range(self.size), 2))

    def with_distance(self, labelA, labelB, value):
        """
        Copy of this space with the symmetric entry d(a,b) = d(b,a) replaced.
        """
        i, j = self.point(labelA).index, self.point(labelB).index

        matrix = [list(row) for row in self._dist]
        matrix[i][j] = parse_rational(value)
        matrix[j][i] = parse_rational(value)

        return FiniteSpace(self.labels, matrix, self._kind)

    def __eq__(self, other):

        if isinstance(other, FiniteSpace):
            return self.labels == other.labels and \
                self._dist == other._dist and self._kind == other._kind

        return NotImplemented

    def __hash__(self):
        return hash((self.labels, self._dist, self._kind))

    def __repr__(self):
        return f"FiniteSpace({list(self.labels)}, kind={self._kind.value})"
