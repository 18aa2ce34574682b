from itertools import product

import pytest

from stonefin.balg import is_ultrafilter
from stonefin.topo import ContinuousMap, FiniteSpace, check_continuous, clopen_points, enumerate_topologies
from stonefin.ufspace import (
    UniversalityError,
    build_uf,
    check_idempotent,
    cluster_points,
    criterion_report,
    principal,
    principal_is_dense,
    pushforward,
    uf_map,
)


def member_sets(space, uf):
    return sorted(tuple(space.names(clopen_points(uf.algebra, a))) for a in uf.members)


def test_principal_examples(sierpinski):
    d = FiniteSpace.discrete(["1", "2"])
    assert member_sets(d, principal(d, "1")) == [("1",), ("1", "2")]
    assert member_sets(sierpinski, principal(sierpinski, "0")) == [("0", "1")]
    one = FiniteSpace.discrete(["p"])
    assert member_sets(one, principal(one, "p")) == [("p",)]
    assert is_ultrafilter(principal(d, "2"))


def test_cluster_points_examples(sierpinski, discrete3):
    assert cluster_points(discrete3, principal(discrete3, "2")) == ["2"]
    assert cluster_points(sierpinski, build_uf(sierpinski).ultrafilters[0]) == ["0", "1"]
    for x in enumerate_topologies(4):
        for p in x.points:
            comp = x.component_masks[x.component_of(x.index(p))]
            assert cluster_points(x, principal(x, p)) == x.names(comp)


def test_build_uf_examples(sierpinski):
    assert len(build_uf(FiniteSpace.discrete([]))) == 0
    assert len(build_uf(sierpinski)) == 1
    ufx = build_uf(FiniteSpace.discrete("abcd"))
    assert len(ufx) == 4 and ufx.space.is_discrete()


def test_pushforward_examples(discrete3):
    d12 = FiniteSpace.discrete(["1", "2"])
    dab = FiniteSpace.discrete(["a", "b"])
    f = ContinuousMap.from_mapping(d12, dab, {"1": "a", "2": "a"})
    assert pushforward(f, principal(d12, "1")).members == principal(dab, "a").members
    ident = ContinuousMap.identity(discrete3)
    uf = principal(discrete3, "3")
    assert pushforward(ident, uf).members == uf.members


def test_pushforward_rejects_discontinuous(sierpinski):
    dab = FiniteSpace.discrete(["a", "b"])
    f = ContinuousMap.from_mapping(sierpinski, dab, {"0": "a", "1": "b"})
    with pytest.raises(UniversalityError):
        pushforward(f, principal(sierpinski, "0"))


def test_uf_map_examples(sierpinski):
    d3 = FiniteSpace.discrete(["1", "2", "3"])
    dab = FiniteSpace.discrete(["a", "b"])
    f = ContinuousMap.from_mapping(d3, dab, {"1": "a", "2": "a", "3": "b"})
    g = uf_map(f)
    ufx = build_uf(d3)
    assert [g.assignment[ufx.principal_map().assignment[i]] for i in range(3)] == [0, 0, 1]
    point = FiniteSpace.discrete(["*"])
    g = uf_map(ContinuousMap(sierpinski, point, (0, 0)))
    assert g.assignment == (0,)
    with pytest.raises(UniversalityError, match="Hausdorff"):
        uf_map(ContinuousMap.identity(sierpinski))


def test_uf_map_is_unique_small():
    y = FiniteSpace.discrete(["a", "b"])
    for x in enumerate_topologies(3):
        ufx = build_uf(x)
        pmap = ufx.principal_map()
        for assignment in product(range(2), repeat=3):
            f = ContinuousMap(x, y, assignment)
            if not check_continuous(f):
                continue
            witnesses = [
                cand for cand in product(range(2), repeat=len(ufx))
                if all(cand[pmap.assignment[i]] == assignment[i] for i in range(3))
            ]
            assert witnesses == [uf_map(f).assignment]


def test_criterion_report_examples(sierpinski, discrete3):
    rep = criterion_report(discrete3)
    assert set(rep["cluster_counts"].values()) == {1}
    assert rep["principal_homeomorphism"]
    assert criterion_report(sierpinski)["verdict"].startswith("criterion inapplicable")
    empty = criterion_report(FiniteSpace.discrete([]))
    assert empty["td_compact_hausdorff"] and empty["principal_homeomorphism"]


def test_criterion_partition_topology_is_compact_not_hausdorff():
    # clopens form a basis but the space is not discrete
    rep = criterion_report(FiniteSpace.indiscrete(["a", "b"]))
    assert rep["basis"] and rep["compact"] and not rep["hausdorff"]


@pytest.mark.parametrize("n", range(0, 6))
def test_idempotent_discrete(n):
    assert check_idempotent(FiniteSpace.discrete([str(i) for i in range(n)]))


def test_idempotent_and_density_small(sierpinski):
    assert check_idempotent(sierpinski)
    for x in enumerate_topologies(3):
        assert principal_is_dense(x)
        assert check_idempotent(x)
