from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from kannanfix.space.point import PointId


@dataclass(frozen=True)
class FixedPointCertificate:
    """
    A point with S(p) = p, checked by exhaustion. `unique` is relative to
    the complete list of fixed points; otherwise `otherFixedPoint` names a
    second one.
    """

    point: PointId
    residual: Fraction
    unique: bool
    otherFixedPoint: Optional[PointId] = None


def fixed_points_exhaustive(space, selfMap):

    fixed = [p for p in space.points if selfMap(p) == p]

    certificates = []

    for p in fixed:

        others = [q for q in fixed if q != p]
        certificates.append(FixedPointCertificate(
            p, space.distance(selfMap(p), p), not others,
            others[0] if others else None))

    return certificates
