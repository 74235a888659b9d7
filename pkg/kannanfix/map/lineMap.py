from fractions import Fraction

from kannanfix.map.interface import MapInterface
from kannanfix.space.finiteSpace import FiniteSpace, point_index


class LineMap(MapInterface):
    """
    Map from a finite space into the rational line, given by exact image
    coordinates. Distances between images are absolute differences.

    This is how an auxiliary map of a truncated family is represented when
    its images (e.g. 1/n^n) fall outside the retained points.
    """

    def __init__(self, space: FiniteSpace, values, name=None):

        values = tuple(Fraction(v) for v in values)

        if len(values) != space.size:
            raise ValueError(f"line map has {len(values)} values, space has "
                             f"{space.size} points")

        self._space = space
        self._values = values
        self._name = name

    @property
    def space(self):
        return self._space

    @property
    def values(self):
        return self._values

    @property
    def name(self):
        return self._name

    def image(self, point):
        return self._values[point_index(point)]

    def image_key(self, point):
        return self._values[point_index(point)]

    def image_distance(self, x, y):
        return abs(self.image(x) - self.image(y))

    def __eq__(self, other):

        if isinstance(other, LineMap):
            return self._values == other._values and \
                self._space == other._space

        return NotImplemented

    def __hash__(self):
        return hash(self._values)

    def __repr__(self):
        return f"LineMap({self._name or ''}, {len(self._values)} points)"
