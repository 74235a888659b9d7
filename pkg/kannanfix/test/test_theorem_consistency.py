import pytest
import numpy as np

from fractions import Fraction

from kannanfix.contraction.analysis import analyze
from kannanfix.contraction.certificate import search_certificate
from kannanfix.iteration.bounds import verify_bounds
from kannanfix.iteration.fixedPoint import fixed_points_exhaustive
from kannanfix.iteration.picard import picard
from kannanfix.iteration.trajectory import Termination
from kannanfix.map.finiteMap import FiniteSelfMap
from kannanfix.space.finiteSpace import SpaceKind
from kannanfix.test.testSetup import (random_bounded_space, random_injection,
                                      random_self_map)


def random_triple(rng, kind, idx):
    """
    Random (space, S, T). Every tenth S is constant; every third T is the
    certificate found by exhaustive search, when one exists.
    """
    space = random_bounded_space(rng, int(rng.integers(2, 6)), kind)

    if idx % 10 == 0:
        selfMap = FiniteSelfMap.constant(
            space, space.labels[int(rng.integers(0, space.size))])
    else:
        selfMap = random_self_map(rng, space)

    auxMap = random_injection(rng, space)

    if idx % 3 == 0:
        certificate = search_certificate(space, selfMap, Fraction(49, 100))
        if certificate is not None:
            auxMap = certificate.auxiliaryMap

    return space, selfMap, auxMap


@pytest.mark.parametrize("kind, seed", [(SpaceKind.METRIC, 41),
                                        (SpaceKind.GENERALIZED, 42)])
def test_applicable_theorem_implies_unique_attracting_fixed_point(kind, seed):

    rng = np.random.default_rng(seed)

    nApplied = 0
    counterexamples = []

    for idx in range(1000):

        space, selfMap, auxMap = random_triple(rng, kind, idx)
        report = analyze(space, selfMap, auxMap)

        theorem = report.metricTheorem if kind == SpaceKind.METRIC \
            else report.generalizedTheorem

        if not theorem.applies:
            continue

        nApplied += 1

        fixedPoints = fixed_points_exhaustive(space, selfMap)
        if len(fixedPoints) != 1:
            counterexamples.append((space, selfMap, auxMap))
            continue

        target = fixedPoints[0].point

        for start in space.points:

            trajectory = picard(space, selfMap, start, auxiliaryMap=auxMap)

            if trajectory.termination != Termination.FIXED_POINT or \
                    trajectory.fixedPoint != target:
                counterexamples.append((space, selfMap, auxMap))
                break

    assert nApplied >= 100
    assert counterexamples == []


@pytest.mark.parametrize("kind, seed", [(SpaceKind.METRIC, 51),
                                        (SpaceKind.GENERALIZED, 52)])
def test_trajectories_respect_bounds(kind, seed):
    """
    The one-step and geometric bounds only use the contraction inequality;
    the tail bound additionally needs the triangle inequality.
    """
    rng = np.random.default_rng(seed)

    for idx in range(300):

        space, selfMap, auxMap = random_triple(rng, kind, 3 * idx)
        report = analyze(space, selfMap, auxMap)

        if not report.extendedVerdict.feasibleBelowHalf or \
                not report.properties.injective:
            continue

        lam = report.extendedVerdict.lambdaMin

        for start in space.points:

            trajectory = picard(space, selfMap, start, auxiliaryMap=auxMap)
            bounds = verify_bounds(trajectory, auxMap, lam)

            assert all(r.holds for r in bounds.stepRecords)

            if kind == SpaceKind.METRIC:
                assert bounds.allHold


if __name__ == "__main__":
    pytest.main()
