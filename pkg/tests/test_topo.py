import random
from itertools import combinations

import pytest

from stonefin.topo import (
    ContinuousMap,
    FiniteSpace,
    TopologyError,
    check_continuous,
    clopen_points,
    clopens,
    components,
    enumerate_topologies,
    is_homeomorphism,
    parse_partition,
    quotient,
    random_topology,
)


def all_families(n):
    """Every family of subsets of n points containing the empty and full set."""
    full = (1 << n) - 1
    middle = [m for m in range(1 << n) if m not in (0, full)]
    for r in range(len(middle) + 1):
        for extra in combinations(middle, r):
            yield frozenset({0, full, *extra})


def closed_family(fam):
    return all(a | b in fam and a & b in fam for a in fam for b in fam)


@pytest.mark.parametrize("n, count", [(0, 1), (1, 1), (2, 4), (3, 29), (4, 355)])
def test_topology_count_matches_brute_force(n, count):
    brute = {fam for fam in all_families(n) if closed_family(fam)} if n <= 3 else None
    listed = {s.opens for s in enumerate_topologies(n)}
    assert len(listed) == count
    if brute is not None:
        assert listed == brute


def test_validation_names_violation():
    with pytest.raises(TopologyError, match="union"):
        FiniteSpace.from_sets(["a", "b", "c"], [[], ["a"], ["b"], ["a", "b", "c"]])
    with pytest.raises(TopologyError, match="empty set"):
        FiniteSpace.from_sets(["a"], [["a"]])
    with pytest.raises(TopologyError, match="unknown point"):
        FiniteSpace.from_sets(["a"], [[], ["z"], ["a"]])


def test_components_examples(sierpinski):
    assert components(sierpinski) == [["0", "1"]]
    assert components(FiniteSpace.discrete("abc")) == [["a"], ["b"], ["c"]]
    assert components(FiniteSpace.discrete([])) == []


def test_clopen_algebra_examples(sierpinski):
    # exhaustive: only the empty and full set of the 4 subsets are clopen
    clop = [m for m in range(4) if sierpinski.is_clopen(m)]
    assert clop == [0, 3]
    assert clopens(sierpinski).size == 2
    assert clopens(FiniteSpace.discrete("ab")).size == 4
    assert clopens(FiniteSpace.discrete([])).size == 1


def test_clopen_carrier_is_unions_of_components():
    rng = random.Random(3)
    for n in range(0, 9):
        for _ in range(8):
            x = random_topology(n, rng)
            alg = clopens(x)
            carrier = {clopen_points(alg, a) for a in alg.elements()}
            brute = {m for m in range(1 << n) if x.is_clopen(m)}
            assert carrier == brute
            assert all(x.is_clopen(b) for b in x.component_masks)


@pytest.mark.parametrize("n", range(0, 5))
def test_example_properties(n):
    for x in enumerate_topologies(n):
        size = clopens(x).size
        assert (size == 1) == (n == 0)
        if n:
            assert (size == 2) == (len(components(x)) == 1)
        assert (size == 1 << n) == x.is_discrete()


def test_check_continuous(sierpinski):
    assert check_continuous(ContinuousMap.identity(sierpinski))
    d = FiniteSpace.discrete("ab")
    assert check_continuous(ContinuousMap.from_mapping(sierpinski, d, {"0": "a", "1": "a"}))
    assert not check_continuous(ContinuousMap.from_mapping(sierpinski, d, {"0": "a", "1": "b"}))


def test_quotient_examples(discrete3):
    q, proj = quotient(discrete3, [["1"], ["2"], ["3"]])
    assert is_homeomorphism(ContinuousMap(discrete3, q, proj.assignment))
    q, proj = quotient(discrete3, [["1", "2"], ["3"]])
    assert len(q) == 2 and q.is_discrete() and check_continuous(proj)
    q, _ = quotient(discrete3, [["1", "2", "3"]])
    assert len(q) == 1


def test_quotient_rejects_non_partition(discrete3):
    with pytest.raises(TopologyError):
        quotient(discrete3, [["1", "2"], ["2", "3"]])
    with pytest.raises(TopologyError):
        quotient(discrete3, [["1"]])


def test_parse_partition():
    assert parse_partition("1,2|3") == [["1", "2"], ["3"]]
