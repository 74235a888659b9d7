import json

from pathlib import Path

from kannanfix.map.family import AnalyticFamily, FamilyId, realize_family
from kannanfix.map.finiteMap import FiniteSelfMap
from kannanfix.space.finiteSpace import FiniteSpace, SpaceKind
from kannanfix.space.rational import format_rational, parse_rational
from kannanfix.utility.errors import DocumentError, MalformedSpace


IDENTITY_MAP = "identity"

FIELDS = ("kind", "points", "distances", "maps", "families")


class BuiltDocument:
    """
    A space document turned into domain objects: the space, its named maps
    (plus the reserved 'identity') and, for family documents, the
    realisation with its clamp information.
    """

    def __init__(self, space, maps, realisation=None):

        self._space = space
        self._maps = dict(maps)
        self._maps.setdefault(IDENTITY_MAP, FiniteSelfMap.identity(space))
        self._realisation = realisation

    @property
    def space(self):
        return self._space

    @property
    def realisation(self):
        return self._realisation

    @property
    def mapNames(self):
        return sorted(self._maps)

    def map(self, name, option="--map"):

        if name not in self._maps:
            raise DocumentError(f"unknown map '{name}'; available: "
                                f"{', '.join(self.mapNames)}", field=option)

        return self._maps[name]

    def self_map(self, name, option="--map"):

        selfMap = self.map(name, option)

        if not isinstance(selfMap, FiniteSelfMap):
            raise DocumentError(f"map '{name}' does not map the space into "
                                "itself", field=option)

        return selfMap

    def excluded_pairs(self, excludeClamp):

        if excludeClamp and self._realisation is not None:
            return self._realisation.excluded_pairs()

        return frozenset()

    def family_of(self, auxMap):
        """
        The analytic family behind auxMap, if auxMap is the realised T.
        """
        if self._realisation is not None and \
                auxMap is self._realisation.auxiliaryMap:
            return self._realisation.family

        return None


class SpaceDocument:
    """
    Schema of a space-definition file (UTF-8 JSON):

        kind       "metric" | "generalized"
        points     list of labels
        distances  list of [label, label, "p/q"], every unordered pair of
                   distinct points exactly once
        maps       {name: {label: label}}
        families   optional list with at most one {"family_id", "N"}; a
                   family document declares no points, distances or maps and
                   exposes the realised maps as 'S' and 'T'
    """

    def __init__(self, kind, points=(), distances=(), maps=None,
                 families=()):

        self.kind = kind
        self.points = list(points)
        self.distances = [list(entry) for entry in distances]
        self.maps = {name: dict(table) for name, table in
                     (maps or {}).items()}
        self.families = [dict(f) for f in families]

    @classmethod
    def from_dict(cls, data):

        if not isinstance(data, dict):
            raise DocumentError("top level must be an object")

        unknown = sorted(set(data) - set(FIELDS))
        if unknown:
            raise DocumentError(f"unknown fields {unknown}", field=unknown[0])

        if "kind" not in data:
            raise DocumentError("missing field", field="kind")

        kind = data["kind"]
        if kind not in [k.value for k in SpaceKind]:
            raise DocumentError(f"kind must be 'metric' or 'generalized', "
                                f"got {kind!r}", field="kind")

        points = data.get("points", [])
        if not isinstance(points, list) or \
                not all(isinstance(p, str) for p in points):
            raise DocumentError("points must be a list of strings",
                                field="points")

        distances = data.get("distances", [])
        if not isinstance(distances, list):
            raise DocumentError("distances must be a list", field="distances")

        for i, entry in enumerate(distances):
            if not isinstance(entry, list) or len(entry) != 3:
                raise DocumentError("expected [label, label, value]",
                                    field=f"distances[{i}]")
            try:
                parse_rational(entry[2])
            except ValueError as e:
                raise DocumentError(str(e), field=f"distances[{i}]") from e

        maps = data.get("maps", {})
        if not isinstance(maps, dict) or \
                not all(isinstance(t, dict) for t in maps.values()):
            raise DocumentError("maps must be an object of label tables",
                                field="maps")

        families = data.get("families", [])
        if not isinstance(families, list) or len(families) > 1:
            raise DocumentError("families must be a list with at most one "
                                "entry", field="families")

        for i, family in enumerate(families):
            if not isinstance(family, dict) or \
                    set(family) != {"family_id", "N"}:
                raise DocumentError("expected {\"family_id\", \"N\"}",
                                    field=f"families[{i}]")

            truncation = family["N"]
            if not isinstance(truncation, int) or isinstance(truncation, bool):
                raise DocumentError(f"N must be an integer, got {truncation!r}",
                                    field=f"families[{i}]")

        if families and (points or distances or maps):
            raise DocumentError("a family document declares no points, "
                                "distances or maps", field="families")

        return cls(kind, points, distances, maps, families)

    def to_dict(self):

        return {"kind": self.kind,
                "points": list(self.points),
                "distances": [list(entry) for entry in self.distances],
                "maps": {name: dict(table) for name, table in
                         self.maps.items()},
                "families": [dict(f) for f in self.families]}

    def _build_family(self):

        entry = self.families[0]

        try:
            family = AnalyticFamily(FamilyId(entry["family_id"]),
                                    entry["N"])
        except (ValueError, TypeError) as e:
            raise DocumentError(str(e), field="families[0]") from e

        if self.kind != SpaceKind.METRIC.value:
            raise DocumentError("built-in families live on metric spaces",
                                field="kind")

        realisation = realize_family(family)

        return BuiltDocument(realisation.space,
                             {"S": realisation.selfMap,
                              "T": realisation.auxiliaryMap},
                             realisation)

    def build(self) -> BuiltDocument:

        if self.families:
            return self._build_family()

        try:
            space = FiniteSpace.from_table(self.points, self.distances,
                                           SpaceKind(self.kind))
        except MalformedSpace as e:
            raise DocumentError(str(e), field="distances") from e

        maps = {}
        for name, table in self.maps.items():

            if name == IDENTITY_MAP:
                raise DocumentError(f"'{IDENTITY_MAP}' is reserved",
                                    field=f"maps.{name}")
            try:
                maps[name] = FiniteSelfMap.from_labels(space, table, name)
            except ValueError as e:
                raise DocumentError(str(e), field=f"maps.{name}") from e

        return BuiltDocument(space, maps)


def parse_document(text) -> SpaceDocument:

    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(e.msg, line=e.lineno) from e

    return SpaceDocument.from_dict(data)


def load_document(path) -> SpaceDocument:

    path = Path(path)

    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise DocumentError(f"cannot read {path}: {e.strerror}") from e

    return parse_document(text)


def emit_document(document: SpaceDocument):
    return json.dumps(document.to_dict(), indent=2, sort_keys=True) + "\n"


def document_from_space(space, maps=None):
    """
    Serialise a symmetric finite space and its self-maps.
    """
    distances = [[x.label, y.label, format_rational(space.distance(x, y))]
                 for x, y in space.pairs(includeDiagonal=False)]

    tables = {name: m.as_labels() for name, m in (maps or {}).items()}

    return SpaceDocument(space.kind.value, space.labels, distances, tables)
