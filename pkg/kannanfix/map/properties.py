from collections import Counter
from dataclasses import dataclass
from enum import Enum, unique
from typing import Optional, Tuple

import numpy as np

from kannanfix.map.family import AnalyticFamily
from kannanfix.map.interface import MapInterface
from kannanfix.space.point import PointId


@unique
class Trivalent(Enum):

    YES = "Yes"
    NO = "No"
    UNDECIDED = "Undecided"


@unique
class Rationale(Enum):

    FINITE_SPACE = "FiniteSpace"
    FINITE_INJECTIVE = "FiniteInjective"
    FINITE_NON_INJECTIVE = "FiniteNonInjective"
    BUILT_IN_ANALYTIC = "BuiltInAnalytic"


@dataclass(frozen=True)
class InjectivityCheck:

    injective: bool
    collision: Optional[Tuple[PointId, PointId]] = None


@dataclass(frozen=True)
class MapProperties:
    """
    Hypotheses on the auxiliary map T. Convergence properties are never
    guessed: outside what finiteness or the built-in family settles they
    stay UNDECIDED. Continuity is automatic on finite discrete spaces and
    for the built-in family.
    """

    injective: bool
    collision: Optional[Tuple[PointId, PointId]]
    subsequentiallyConvergent: Trivalent
    subsequentialRationale: Rationale
    sequentiallyConvergent: Trivalent
    sequentialRationale: Rationale
    continuous: Trivalent = Trivalent.YES


def check_injective(auxMap: MapInterface) -> InjectivityCheck:
    """
    First collision in canonical pair order, if any.
    """
    seen = {}

    for p in auxMap.space.points:

        key = auxMap.image_key(p)

        if key in seen:
            return InjectivityCheck(False, (seen[key], p))

        seen[key] = p

    return InjectivityCheck(True)


def classify_convergence(auxMap) -> MapProperties:
    """
    Decide sequential / subsequential convergence of T.

    On a finite domain every sequence has a constant subsequence, and a
    convergent image sequence is eventually constant, which injectivity
    pulls back to the sequence itself. The built-in analytic family is
    strictly monotone onto a set whose only limit point is 0.
    """
    if isinstance(auxMap, AnalyticFamily):
        return MapProperties(True, None,
                             Trivalent.YES, Rationale.BUILT_IN_ANALYTIC,
                             Trivalent.YES, Rationale.BUILT_IN_ANALYTIC)

    injectivity = check_injective(auxMap)

    if injectivity.injective:
        sequential = (Trivalent.YES, Rationale.FINITE_INJECTIVE)
    else:
        sequential = (Trivalent.UNDECIDED, Rationale.FINITE_NON_INJECTIVE)

    return MapProperties(injectivity.injective, injectivity.collision,
                         Trivalent.YES, Rationale.FINITE_SPACE,
                         *sequential)


@dataclass(frozen=True)
class SamplingOutcome:

    nSequences: int
    nImageConvergent: int
    nWithConvergentSubsequence: int

    @property
    def holds(self):
        return self.nImageConvergent == self.nWithConvergentSubsequence


def sample_subsequential_convergence(auxMap: MapInterface, nSequences,
                                     length, rng=None,
                                     strayProbability=0.05) -> SamplingOutcome:
    """
    Sampled sanity check of subsequential convergence on a finite domain.

    Each sample is the tail of a sequence aimed at the preimage of a random
    limit (any prefix is irrelevant to the limit). Every tail entry is replaced by a uniform draw from
    the whole domain with probability `strayProbability`. Only samples whose
    image sequence is eventually constant are kept. A kept sample passes if
    some point repeats in the tail and maps onto the limit, i.e. a constant
    (hence convergent) subsequence exists. This is a pigeonhole check, not a
    proof.
    """
    points = auxMap.space.points
    n = len(points)

    if length <= n:
        raise ValueError(f"tail length {length} must exceed the number of "
                         f"points ({n}) for the pigeonhole argument")

    if not 0 <= strayProbability <= 1:
        raise ValueError(f"stray probability must lie in [0, 1], got "
                         f"{strayProbability}")

    if rng is None:
        rng = np.random.default_rng()

    keys = [auxMap.image_key(p) for p in points]

    nImageConvergent = 0
    nWithSubsequence = 0

    for _ in range(nSequences):

        limitKey = keys[int(rng.integers(0, n))]
        preimage = [i for i in range(n) if keys[i] == limitKey]

        tail = rng.choice(preimage, size=length)
        stray = rng.random(length) < strayProbability
        tail[stray] = rng.integers(0, n, size=int(stray.sum()))

        if any(keys[int(i)] != limitKey for i in tail):
            continue

        nImageConvergent += 1

        counts = Counter(int(i) for i in tail)
        repeated = [i for i, c in counts.items() if c >= 2
                    and keys[i] == limitKey]

        if repeated:
            nWithSubsequence += 1

    return SamplingOutcome(nSequences, nImageConvergent, nWithSubsequence)
