from kannanfix.map.interface import MapInterface
from kannanfix.space.finiteSpace import FiniteSpace, point_index


class FiniteSelfMap(MapInterface):
    """
    Self-map of a finite space given by its table of image indices.
    """

    def __init__(self, space: FiniteSpace, table, name=None):

        table = tuple(int(t) for t in table)

        if len(table) != space.size:
            raise ValueError(f"map table has {len(table)} entries, space has "
                             f"{space.size} points")

        for i, t in enumerate(table):
            if t < 0 or t >= space.size:
                raise ValueError(f"image of point {space.points[i].label} "
                                 f"lies outside the space (index {t})")

        self._space = space
        self._table = table
        self._name = name

    @classmethod
    def from_labels(cls, space, mapping, name=None):
        """
        Build from a label -> label mapping covering every point.
        """
        mapping = {str(k): str(v) for k, v in mapping.items()}

        missing = [label for label in space.labels if label not in mapping]
        if missing:
            raise ValueError(f"map {name or ''} undefined on points {missing}")

        unknown = [label for label in mapping if label not in space.labels]
        if unknown:
            raise ValueError(f"map {name or ''} refers to unknown points "
                             f"{unknown}")

        table = [space.point(mapping[label]).index for label in space.labels]

        return cls(space, table, name)

    @classmethod
    def identity(cls, space):
        return cls(space, range(space.size), "identity")

    @classmethod
    def constant(cls, space, label, name=None):

        target = space.point(label).index
        return cls(space, [target] * space.size, name)

    @property
    def space(self):
        return self._space

    @property
    def table(self):
        return self._table

    @property
    def name(self):
        return self._name

    def image(self, point):
        return self._space.points[self._table[point_index(point)]]

    def image_key(self, point):
        return self._table[point_index(point)]

    def image_distance(self, x, y):
        return self._space.distance(self.image(x), self.image(y))

    def compose(self, inner):
        """
        The map x -> self(inner(x)).
        """
        if inner.space is not self._space and inner.space != self._space:
            raise ValueError("cannot compose maps on different spaces")

        table = [self._table[t] for t in inner.table]
        return FiniteSelfMap(self._space, table)

    def is_identity(self):
        return all(t == i for i, t in enumerate(self._table))

    def as_labels(self):

        points = self._space.points
        return {points[i].label: points[t].label
                for i, t in enumerate(self._table)}

    def __eq__(self, other):

        if isinstance(other, FiniteSelfMap):
            return self._table == other._table and self._space == other._space

        return NotImplemented

    def __hash__(self):
        return hash(self._table)

    def __repr__(self):
        return f"FiniteSelfMap({self.as_labels()})"
