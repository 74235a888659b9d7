import time

import pytest
import numpy as np

from fractions import Fraction
from itertools import permutations

from kannanfix.contraction.certificate import (CertificateSearch,
                                               SearchSpace,
                                               search_certificate,
                                               verify_certificate)
from kannanfix.contraction.condition import t_kannan_lambda
from kannanfix.map.finiteMap import FiniteSelfMap
from kannanfix.test.testSetup import (example_maps, example_space,
                                      random_self_map, random_space,
                                      swap_space)
from kannanfix.utility.errors import LambdaOutOfRange, SearchSpaceTooLarge


@pytest.fixture
def example():

    space = example_space()
    selfMap, auxMap = example_maps(space)

    return space, selfMap, auxMap


def test_smallest_certificate_on_example(example):

    space, selfMap, _ = example

    start = time.perf_counter()
    certificate = search_certificate(space, selfMap, Fraction(1, 3))
    elapsed = time.perf_counter() - start

    assert certificate is not None
    assert certificate.auxiliaryMap.table == (0, 2, 3, 1)
    assert certificate.auxiliaryMap.as_labels() == \
        {"1": "1", "2": "3", "3": "4", "4": "2"}
    assert certificate.lam == Fraction(1, 3)
    assert certificate.properties.injective
    assert elapsed < 1.


def test_certificate_is_lexicographic_minimum(example):

    space, selfMap, _ = example
    cap = Fraction(1, 3)

    valid = [table for table in permutations(range(space.size))
             if t_kannan_lambda(space, selfMap,
                                FiniteSelfMap(space, table)).lambdaMin <= cap]

    certificate = search_certificate(space, selfMap, cap)

    assert certificate.auxiliaryMap.table == min(valid)


def test_given_map_verifies(example):

    space, selfMap, auxMap = example

    valid, verdict = verify_certificate(space, selfMap, auxMap,
                                        Fraction(1, 3))

    assert valid
    assert verdict.lambdaMin == Fraction(1, 4)


def test_non_injective_map_never_verifies(example):

    space, selfMap, _ = example
    constant = FiniteSelfMap.constant(space, "1")

    valid, verdict = verify_certificate(space, selfMap, constant,
                                        Fraction(1, 3))

    assert verdict.lambdaMin == 0
    assert not valid


def test_swap_has_no_certificate():

    space, swap = swap_space()

    assert search_certificate(space, swap, Fraction(1, 3)) is None

    for table in permutations(range(2)):
        auxMap = FiniteSelfMap(space, table)
        assert t_kannan_lambda(space, swap, auxMap).lambdaMin == \
            Fraction(1, 2)


def test_constant_map_gets_identity_certificate(example):

    space, _, _ = example
    constant = FiniteSelfMap.constant(space, "3")

    certificate = search_certificate(space, constant, 0)

    assert certificate.auxiliaryMap.is_identity()
    assert certificate.lam == 0


@pytest.mark.parametrize("cap", [Fraction(1, 2), Fraction(-1, 10), 1])
def test_cap_out_of_range(example, cap):

    space, selfMap, _ = example

    with pytest.raises(LambdaOutOfRange):
        search_certificate(space, selfMap, cap)


def test_search_budget():

    rng = np.random.default_rng(3)
    space = random_space(rng, 5)
    selfMap = random_self_map(rng, space)

    with pytest.raises(SearchSpaceTooLarge):
        search_certificate(space, selfMap, Fraction(1, 3), maxPoints=4)


def test_injections_match_permutations():

    rng = np.random.default_rng(11)

    for _ in range(30):

        space = random_space(rng, 4)
        selfMap = random_self_map(rng, space)

        results = [search_certificate(space, selfMap, Fraction(2, 5), s)
                   for s in SearchSpace]

        tables = [None if c is None else c.auxiliaryMap.table
                  for c in results]
        assert tables[0] == tables[1]


def test_found_certificates_verify():

    rng = np.random.default_rng(12)
    cap = Fraction(9, 20)

    for _ in range(40):

        space = random_space(rng, int(rng.integers(2, 5)))
        selfMap = random_self_map(rng, space)

        certificate = search_certificate(space, selfMap, cap)
        if certificate is None:
            continue

        valid, verdict = verify_certificate(space, selfMap,
                                            certificate.auxiliaryMap, cap)
        assert valid
        assert verdict.lambdaMin == certificate.lam


def test_candidates_are_counted(example):

    space, selfMap, _ = example

    search = CertificateSearch(space, selfMap)
    search.run(Fraction(1, 3))
    examined = search.candidatesExamined

    # (0, 2, 3, 1) is the fourth permutation of four indices
    assert examined == 4


if __name__ == "__main__":
    pytest.main()
