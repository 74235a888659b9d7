import pytest
import numpy as np

from fractions import Fraction

from kannanfix.contraction.condition import (ExtendedKannanCondition,
                                             KannanCondition, condition_holds,
                                             kannan_lambda, pair_ratio,
                                             t_kannan_lambda)
from kannanfix.contraction.verdict import INFINITE, format_lambda
from kannanfix.map.family import AnalyticFamily, realize_family
from kannanfix.map.finiteMap import FiniteSelfMap
from kannanfix.test.testSetup import (example_maps, example_space,
                                      random_injection, random_self_map,
                                      random_space)


@pytest.fixture
def example():

    space = example_space()
    selfMap, auxMap = example_maps(space)

    return space, selfMap, auxMap


def labels(pair):
    return [p.label for p in pair]


def test_pair_ratio():

    assert pair_ratio(0, 0) == 0
    assert pair_ratio(3, 0) == INFINITE
    assert pair_ratio(1, 4) == Fraction(1, 4)


def test_kannan_fails_on_example(example):

    space, selfMap, _ = example
    verdict = kannan_lambda(space, selfMap)

    assert verdict.lambdaMin == 1
    assert labels(verdict.argmaxPair) == ["1", "2"]
    assert not verdict.feasibleBelowHalf
    assert verdict.condition == "kannan"


def test_t_kannan_on_example(example):

    space, selfMap, auxMap = example
    verdict = t_kannan_lambda(space, selfMap, auxMap)

    assert verdict.lambdaMin == Fraction(1, 4)
    assert labels(verdict.argmaxPair) == ["1", "2"]
    assert verdict.feasibleBelowHalf

    condition = ExtendedKannanCondition(selfMap, auxMap)
    x, y, z = space.point("1"), space.point("3"), space.point("4")

    assert pair_ratio(condition.numerator(x, y),
                      condition.denominator(x, y)) == Fraction(1, 5)
    assert pair_ratio(condition.numerator(x, z),
                      condition.denominator(x, z)) == Fraction(1, 5)


def test_condition_holds_with_slack(example):

    space, selfMap, auxMap = example
    condition = ExtendedKannanCondition(selfMap, auxMap)

    assert condition_holds(space, condition, Fraction(1, 3)) == (True, None)

    holds, pair = condition_holds(space, condition, Fraction(1, 5))
    assert not holds
    assert labels(pair) == ["1", "2"]


def test_identity_map_is_infinite(example):

    space, _, _ = example
    identity = FiniteSelfMap.identity(space)

    verdict = kannan_lambda(space, identity)

    assert verdict.isInfinite
    assert format_lambda(verdict.lambdaMin) == "inf"
    assert not verdict.feasibleBelowHalf


def test_constant_map_is_zero(example):

    space, _, _ = example
    constant = FiniteSelfMap.constant(space, "2")

    assert kannan_lambda(space, constant).lambdaMin == 0


def test_mismatched_spaces(example):

    space, selfMap, _ = example
    other = FiniteSelfMap.identity(example_space().scaled(2))

    with pytest.raises(ValueError):
        ExtendedKannanCondition(selfMap, other)


def test_identity_auxiliary_map_reproduces_kannan():

    rng = np.random.default_rng(1001)

    for _ in range(1000):

        space = random_space(rng, int(rng.integers(1, 7)))
        selfMap = random_self_map(rng, space)
        identity = FiniteSelfMap.identity(space)

        kannan = kannan_lambda(space, selfMap)
        extended = t_kannan_lambda(space, selfMap, identity)

        assert kannan.lambdaMin == extended.lambdaMin
        assert kannan.argmaxPair == extended.argmaxPair


def ratios(space, condition):
    return [pair_ratio(condition.numerator(x, y), condition.denominator(x, y))
            for x, y in space.pairs()]


def random_conditions(rng, space):

    selfMap = random_self_map(rng, space)
    auxMap = random_injection(rng, space)

    yield KannanCondition(selfMap), kannan_lambda(space, selfMap)
    yield (ExtendedKannanCondition(selfMap, auxMap),
           t_kannan_lambda(space, selfMap, auxMap))


def test_supremum_property():

    rng = np.random.default_rng(77)

    for _ in range(200):

        space = random_space(rng, int(rng.integers(2, 6)))

        for condition, verdict in random_conditions(rng, space):

            lam = verdict.lambdaMin

            if lam == INFINITE:
                continue

            assert condition_holds(space, condition, lam) == (True, None)

            if lam == 0:
                continue

            # strictly between the largest and the next smaller ratio
            below = max([r for r in ratios(space, condition) if r < lam],
                        default=Fraction(0))
            holds, pair = condition_holds(space, condition, (below + lam) / 2)

            assert not holds
            assert pair == verdict.argmaxPair


def test_scale_invariance():

    rng = np.random.default_rng(314)

    for _ in range(100):

        space = random_space(rng, 4)
        selfMap = random_self_map(rng, space)
        auxMap = random_injection(rng, space)
        factor = Fraction(int(rng.integers(1, 20)), int(rng.integers(1, 20)))

        scaled = space.scaled(factor)
        scaledSelf = FiniteSelfMap(scaled, selfMap.table)
        scaledAux = FiniteSelfMap(scaled, auxMap.table)

        for original, rescaled in [
                (kannan_lambda(space, selfMap),
                 kannan_lambda(scaled, scaledSelf)),
                (t_kannan_lambda(space, selfMap, auxMap),
                 t_kannan_lambda(scaled, scaledSelf, scaledAux))]:

            assert original.lambdaMin == rescaled.lambdaMin
            assert original.argmaxPair == rescaled.argmaxPair


@pytest.mark.parametrize("truncation", [20, 50])
def test_family_kannan_is_unbounded(truncation):

    realisation = realize_family(AnalyticFamily(truncation=truncation))
    space, selfMap, _ = realisation

    verdict = kannan_lambda(space, selfMap, realisation.excluded_pairs())

    assert verdict.lambdaMin == truncation - 1
    assert labels(verdict.argmaxPair) == ["0", f"1/{truncation - 1}"]


@pytest.mark.parametrize("truncation", [5, 20, 50])
def test_family_t_kannan(truncation):

    realisation = realize_family(AnalyticFamily(truncation=truncation))
    space, selfMap, auxMap = realisation

    verdict = t_kannan_lambda(space, selfMap, auxMap,
                              realisation.excluded_pairs())

    assert verdict.lambdaMin == Fraction(256, 2869)
    assert verdict.lambdaMin <= Fraction(1, 3)
    assert labels(verdict.argmaxPair) == ["0", "1/4"]
    assert len(verdict.excludedPairs) == space.size


def test_family_clamp_pollutes_t_kannan():

    space, selfMap, auxMap = realize_family(AnalyticFamily(truncation=10))

    verdict = t_kannan_lambda(space, selfMap, auxMap)

    assert verdict.isInfinite
    assert sorted(labels(verdict.argmaxPair)) == ["0", "1/10"]


if __name__ == "__main__":
    pytest.main()
