from dataclasses import dataclass
from enum import IntEnum, unique
from fractions import Fraction
from itertools import combinations, permutations
from typing import Tuple

from kannanfix.space.finiteSpace import FiniteSpace, SpaceKind
from kannanfix.space.point import PointId
from kannanfix.space.rational import format_rational
from kannanfix.utility.errors import MalformedSpace


@unique
class Axiom(IntEnum):
    """
    Axioms of (generalized) metrics. The integer value fixes the order in
    which violations are reported.
    """

    NON_NEGATIVITY = 0
    IDENTITY_OF_INDISCERNIBLES = 1
    SYMMETRY = 2
    TRIANGLE = 3
    RECTANGULAR = 4

    @property
    def tag(self):
        return "".join(word.capitalize() for word in self.name.split("_"))


@dataclass(frozen=True)
class AxiomViolation:
    """
    A single failing instance of an axiom.

    Witnesses are written in path order: (x, x) or (x, y) for identity and
    symmetry, (x, z, y) for the triangle inequality and (x, w, z, y) for the
    rectangular inequality. For inequality axioms lhs > rhs.
    """

    axiom: Axiom
    witness: Tuple[PointId, ...]
    lhs: Fraction
    rhs: Fraction

    def sort_key(self):
        return (int(self.axiom), tuple(p.index for p in self.witness))

    def describe(self):

        path = ",".join(p.label for p in self.witness)
        relation = ">" if self.axiom in (Axiom.TRIANGLE, Axiom.RECTANGULAR) \
            else "vs"

        return (f"{self.axiom.tag} ({path}): {format_rational(self.lhs)} "
                f"{relation} {format_rational(self.rhs)}")


def _non_negativity_violations(space: FiniteSpace):

    violations = []

    for x in space.points:
        for y in space.points:
            d = space.distance(x, y)
            if d < 0:
                violations.append(
                    AxiomViolation(Axiom.NON_NEGATIVITY, (x, y), Fraction(0), d))

    return violations


def _require_non_negative(space: FiniteSpace):

    violations = _non_negativity_violations(space)

    if violations:
        raise MalformedSpace(
            f"negative distance entries: "
            f"{[v.describe() for v in violations]}", violations)


def _identity_violations(space: FiniteSpace):

    violations = []

    for x, y in space.pairs():

        d = space.distance(x, y)

        if x == y and d != 0:
            violations.append(AxiomViolation(
                Axiom.IDENTITY_OF_INDISCERNIBLES, (x, x), d, Fraction(0)))

        elif x != y and (d == 0 or space.distance(y, x) == 0):
            violations.append(AxiomViolation(
                Axiom.IDENTITY_OF_INDISCERNIBLES, (x, y), d,
                space.distance(y, x)))

    return violations


def _symmetry_violations(space: FiniteSpace):

    violations = []

    for x, y in space.pairs(includeDiagonal=False):

        if space.distance(x, y) != space.distance(y, x):
            violations.append(AxiomViolation(
                Axiom.SYMMETRY, (x, y),
                space.distance(x, y), space.distance(y, x)))

    return violations


def _directed_pairs(space: FiniteSpace):

    # one direction per unordered pair on symmetric tables
    if space.symmetric:
        return combinations(space.points, 2)

    return permutations(space.points, 2)


def _triangle_violations(space: FiniteSpace):

    violations = []

    for x, y in _directed_pairs(space):

        lhs = space.distance(x, y)

        for z in space.points:

            if z == x or z == y:
                continue

            rhs = space.distance(x, z) + space.distance(z, y)
            if lhs > rhs:
                violations.append(
                    AxiomViolation(Axiom.TRIANGLE, (x, z, y), lhs, rhs))

    return violations


def _rectangular_violations(space: FiniteSpace):

    violations = []

    # x = y is vacuous since d(x,x) = 0; spaces with fewer than four points
    # have no admissible (w, z) and pass by vacuity.
    for x, y in _directed_pairs(space):

        lhs = space.distance(x, y)
        others = [p for p in space.points if p != x and p != y]

        for w, z in permutations(others, 2):

            rhs = space.distance(x, w) + space.distance(w, z) + \
                space.distance(z, y)
            if lhs > rhs:
                violations.append(
                    AxiomViolation(Axiom.RECTANGULAR, (x, w, z, y), lhs, rhs))

    return violations


def _sorted(violations):
    return sorted(violations, key=AxiomViolation.sort_key)


def validate_metric(space: FiniteSpace):
    """
    All violations of the metric axioms, in canonical order. An empty list
    means the table is a metric.

    Raises
    ------
    MalformedSpace
        If the table holds a negative entry.
    """
    _require_non_negative(space)

    return _sorted(_identity_violations(space)
                   + _symmetry_violations(space)
                   + _triangle_violations(space))


def validate_generalized_metric(space: FiniteSpace):
    """
    All violations of the generalized (rectangular) metric axioms, in
    canonical order. An empty list means the table is a generalized metric.
    """
    _require_non_negative(space)

    return _sorted(_identity_violations(space)
                   + _symmetry_violations(space)
                   + _rectangular_violations(space))


def validate_declared(space: FiniteSpace):

    if space.kind == SpaceKind.METRIC:
        return validate_metric(space)

    return validate_generalized_metric(space)
