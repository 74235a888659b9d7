import pytest

from fractions import Fraction

from kannanfix.iteration.bounds import BoundVerifier, verify_bounds
from kannanfix.iteration.picard import picard
from kannanfix.map.family import AnalyticFamily, realize_family
from kannanfix.map.finiteMap import FiniteSelfMap
from kannanfix.space.finiteSpace import FiniteSpace
from kannanfix.test.testSetup import example_maps, example_space
from kannanfix.utility.errors import LambdaOutOfRange


@pytest.fixture
def example():

    space = example_space()
    selfMap, auxMap = example_maps(space)

    return space, selfMap, auxMap


@pytest.mark.parametrize("start", ["1", "2", "3", "4"])
def test_example_bounds_hold(example, start):

    space, selfMap, auxMap = example
    trajectory = picard(space, selfMap, start, auxiliaryMap=auxMap)

    report = verify_bounds(trajectory, auxMap, Fraction(1, 3))

    assert report.factor == Fraction(1, 2)
    assert report.allHold
    assert report.failures() == []


def test_example_bound_values(example):

    space, selfMap, auxMap = example
    trajectory = picard(space, selfMap, "1", auxiliaryMap=auxMap)

    report = verify_bounds(trajectory, auxMap, Fraction(1, 3))

    assert [r.tGap for r in report.stepRecords] == [4, 1, 0]
    assert [r.geometricBound for r in report.stepRecords] == [4, 2, 1]
    assert [r.ratioBound for r in report.stepRecords] == \
        [None, 2, Fraction(1, 2)]

    # pairs (m, n) with m > n among x_0 .. x_3
    assert len(report.tailRecords) == 6
    assert report.tailRecords[0].tailBound == 8


def test_family_prefix_bounds():

    realisation = realize_family(AnalyticFamily(truncation=40))
    space, selfMap, auxMap = realisation

    trajectory = picard(space, selfMap, "1/4", auxiliaryMap=auxMap,
                        clampedPoints=realisation.clampedPoints)
    prefix = trajectory.prefix(36)

    report = verify_bounds(prefix, auxMap, Fraction(1, 3))

    assert len(report.stepRecords) == 36
    assert report.allHold
    assert all(r.ratioBound is None or r.tGap <= r.ratioBound
               for r in report.stepRecords)


def test_violated_bounds_are_reported():

    space = FiniteSpace.from_coordinates(["a", "b", "c"], [0, 1, 3])
    shift = FiniteSelfMap.from_labels(space, {"a": "b", "b": "c", "c": "c"})
    identity = FiniteSelfMap.identity(space)

    trajectory = picard(space, shift, "a", auxiliaryMap=identity)
    report = verify_bounds(trajectory, identity, Fraction(1, 3))

    # the gaps grow from 1 to 2
    assert not report.allHold
    assert report.failures()[0].n == 1


def test_tail_window(example):

    space, selfMap, auxMap = example
    trajectory = picard(space, selfMap, "1", auxiliaryMap=auxMap)

    report = verify_bounds(trajectory, auxMap, Fraction(1, 3), window=1)

    assert len(report.tailRecords) == 1


@pytest.mark.parametrize("lam", [Fraction(1, 2), Fraction(2, 3),
                                 Fraction(-1, 5)])
def test_lambda_out_of_range(lam):

    with pytest.raises(LambdaOutOfRange):
        BoundVerifier(lam)


if __name__ == "__main__":
    pytest.main()
