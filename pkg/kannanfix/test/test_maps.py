import pytest
import numpy as np

from fractions import Fraction

from kannanfix.map.family import AnalyticFamily, FamilyId, realize_family
from kannanfix.map.finiteMap import FiniteSelfMap
from kannanfix.map.properties import (Rationale, Trivalent, check_injective,
                                      classify_convergence,
                                      sample_subsequential_convergence)
from kannanfix.space.axioms import validate_metric
from kannanfix.test.testSetup import example_maps, example_space, swap_space
from kannanfix.utility.errors import TruncationTooSmall


@pytest.fixture
def example():

    space = example_space()
    selfMap, auxMap = example_maps(space)

    return space, selfMap, auxMap


def test_images(example):

    space, selfMap, auxMap = example

    assert selfMap(space.point("1")).label == "4"
    assert selfMap(space.point("3")).label == "2"
    assert auxMap.as_labels() == {"1": "4", "2": "3", "3": "1", "4": "2"}

    # d(T1, T2) = d(4, 3)
    assert auxMap.image_distance(space.point("1"), space.point("2")) == 4


def test_compose(example):

    space, selfMap, auxMap = example
    composed = auxMap.compose(selfMap)

    assert composed.as_labels() == {"1": "2", "2": "3", "3": "3", "4": "3"}


@pytest.mark.parametrize("mapping", [
    {"1": "4", "2": "2", "3": "2"},
    {"1": "4", "2": "2", "3": "2", "4": "9"},
    {"1": "4", "2": "2", "3": "2", "4": "2", "5": "1"},
])
def test_incomplete_or_foreign_tables(example, mapping):

    space, _, _ = example

    with pytest.raises(ValueError):
        FiniteSelfMap.from_labels(space, mapping)


def test_identity_and_constant(example):

    space, _, _ = example

    identity = FiniteSelfMap.identity(space)
    assert identity.is_identity()
    assert identity.name == "identity"

    constant = FiniteSelfMap.constant(space, "3")
    assert set(constant.table) == {2}
    assert not constant.is_identity()


def test_injectivity(example):

    space, selfMap, auxMap = example

    assert check_injective(auxMap).injective

    check = check_injective(selfMap)
    assert not check.injective
    assert [p.label for p in check.collision] == ["2", "3"]


def test_convergence_classification(example):

    _, selfMap, auxMap = example

    injective = classify_convergence(auxMap)
    assert injective.subsequentiallyConvergent == Trivalent.YES
    assert injective.subsequentialRationale == Rationale.FINITE_SPACE
    assert injective.sequentiallyConvergent == Trivalent.YES
    assert injective.sequentialRationale == Rationale.FINITE_INJECTIVE
    assert injective.continuous == Trivalent.YES

    collapsing = classify_convergence(selfMap)
    assert collapsing.subsequentiallyConvergent == Trivalent.YES
    assert collapsing.sequentiallyConvergent == Trivalent.UNDECIDED
    assert collapsing.sequentialRationale == Rationale.FINITE_NON_INJECTIVE


def test_family_points_and_images():

    space, selfMap, auxMap = realize_family(AnalyticFamily(truncation=6))

    assert space.labels == ("0", "1/4", "1/5", "1/6")
    assert auxMap.image(space.point("1/5")) == Fraction(1, 3125)
    assert auxMap.image(space.point("0")) == 0

    assert selfMap(space.point("1/4")).label == "1/5"
    assert selfMap(space.point("0")).label == "0"


def test_family_clamp():

    realisation = realize_family(AnalyticFamily(FamilyId.KANNAN23, 10))
    space, selfMap, _ = realisation

    clamp = space.point("1/10")
    assert realisation.clampedPoints == frozenset([clamp])
    assert selfMap(clamp) == clamp

    excluded = realisation.excluded_pairs()
    assert len(excluded) == space.size
    assert all(clamp.index in pair for pair in excluded)


def test_family_distances_are_euclidean():

    space, _, _ = realize_family(AnalyticFamily(truncation=5))

    assert space.distance(space.point("1/4"), space.point("1/5")) == \
        Fraction(1, 20)


def test_family_big_rationals():

    space, _, auxMap = realize_family(AnalyticFamily(truncation=50))

    image = auxMap.image(space.point("1/50"))

    assert image == Fraction(1, 50 ** 50)
    assert len(str(image.denominator)) == 85


@pytest.mark.parametrize("truncation", range(5, 61))
def test_family_auxiliary_map_is_injective(truncation):

    realisation = realize_family(AnalyticFamily(truncation=truncation))

    assert check_injective(realisation.auxiliaryMap).injective


@pytest.mark.parametrize("truncation", [5, 6, 17, 30, 60])
def test_family_space_is_metric(truncation):

    space, _, _ = realize_family(AnalyticFamily(truncation=truncation))

    assert validate_metric(space) == []


@pytest.mark.parametrize("truncation", [0, 3, 4])
def test_truncation_too_small(truncation):

    with pytest.raises(TruncationTooSmall):
        AnalyticFamily(truncation=truncation)


def test_family_classification():

    family = AnalyticFamily(truncation=20)
    properties = classify_convergence(family)

    assert properties.subsequentiallyConvergent == Trivalent.YES
    assert properties.sequentiallyConvergent == Trivalent.YES
    assert properties.subsequentialRationale == Rationale.BUILT_IN_ANALYTIC


def test_sampled_subsequential_convergence_of_family():

    _, _, auxMap = realize_family(AnalyticFamily(truncation=10))

    outcome = sample_subsequential_convergence(
        auxMap, 200, 12, np.random.default_rng(5))

    # strays off the preimage of an injective map break convergence
    assert 0 < outcome.nImageConvergent < 200
    assert outcome.holds


def test_sampled_subsequential_convergence_of_collapsing_map():

    space, swap = swap_space()
    constant = FiniteSelfMap.constant(space, "a")

    swapped = sample_subsequential_convergence(
        swap, 100, 3, np.random.default_rng(6), strayProbability=0.5)

    assert swapped.nImageConvergent < 100
    assert swapped.holds

    collapsed = sample_subsequential_convergence(
        constant, 100, 3, np.random.default_rng(6), strayProbability=0.5)

    assert collapsed.nImageConvergent == 100
    assert collapsed.nWithConvergentSubsequence == 100

    unperturbed = sample_subsequential_convergence(
        swap, 50, 3, np.random.default_rng(6), strayProbability=0)
    assert unperturbed.nImageConvergent == 50

    with pytest.raises(ValueError):
        sample_subsequential_convergence(swap, 10, 2)

    with pytest.raises(ValueError, match="stray"):
        sample_subsequential_convergence(swap, 10, 3, strayProbability=2)


if __name__ == "__main__":
    pytest.main()
