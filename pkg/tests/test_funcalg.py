import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from stonefin.funcalg import (
    BerkovichPoint,
    BoundedFunction,
    FunctionError,
    IdealDescriptor,
    IdealError,
    algebraic_norm,
    enumerate_max_ideals,
    ideal_from_uf,
    orthogonal_decomposition_check,
    quotient_norm,
    residue,
    spectrum,
    spectrum_matches_uf,
    sup_norm,
    uf_from_ideal,
    uf_seminorm,
)
from stonefin.topo import FiniteSpace, clopen_points, clopens, enumerate_topologies
from stonefin.ufspace import build_uf, principal
from stonefin.valfield import ONE, ZERO, AbsValue, FiniteField, RationalField, abs_value


def f124(space, field):
    return BoundedFunction.from_values(space, field, [1, 2, 4])


def test_sup_norm_examples(discrete3, q2):
    assert sup_norm(f124(discrete3, q2)) == ONE
    assert sup_norm(BoundedFunction.constant(discrete3, q2, 0)) == ZERO
    assert sup_norm(BoundedFunction.indicator(discrete3, q2, 0b110)) == ONE
    assert sup_norm(BoundedFunction.from_values(FiniteSpace.discrete([]), q2, [])) == ZERO


def test_functions_must_be_locally_constant(sierpinski, q2):
    with pytest.raises(FunctionError):
        BoundedFunction.from_values(sierpinski, q2, [0, 1])


def test_seminorm_examples(discrete3, q2):
    f = f124(discrete3, q2)
    uf = principal(discrete3, "2")
    # literal inf over the 4 clopens containing point 2 of the sup over them
    alg = uf.algebra
    literal = min(
        max(abs_value(f.values[i]) for i in range(3) if clopen_points(alg, a) >> i & 1) for a in uf.members
    )
    assert uf_seminorm(f, uf) == literal == AbsValue.power(2, -1)
    assert uf_seminorm(BoundedFunction.constant(discrete3, q2, 0), uf) == ZERO
    assert uf_seminorm(BoundedFunction.constant(discrete3, q2, 1), uf) == ONE


def test_ideal_from_uf_examples(discrete3, sierpinski, q2):
    m = ideal_from_uf(principal(discrete3, "1"), q2, discrete3)
    assert m.same_ideal(IdealDescriptor.at_point(discrete3, q2, "1"))
    assert BoundedFunction.from_values(discrete3, q2, [0, 5, 7]) in m
    assert BoundedFunction.from_values(discrete3, q2, [1, 0, 0]) not in m
    one = FiniteSpace.discrete(["p"])
    assert ideal_from_uf(principal(one, "p"), q2, one).zero_points == 1
    m = ideal_from_uf(build_uf(sierpinski).ultrafilters[0], q2, sierpinski)
    assert m.zero_points == 0b11
    assert BoundedFunction.constant(sierpinski, q2, 3) not in m


def test_uf_from_ideal_examples(discrete3, sierpinski, q2):
    assert uf_from_ideal(IdealDescriptor.at_point(discrete3, q2, "3")).members == principal(discrete3, "3").members
    for uf in build_uf(discrete3).ultrafilters:
        assert uf_from_ideal(ideal_from_uf(uf, q2, discrete3)).members == uf.members
    zero = IdealDescriptor.of_zero_set(sierpinski, q2, 1)
    assert uf_from_ideal(zero).members == {clopens(sierpinski).top}
    with pytest.raises(IdealError, match="not prime"):
        uf_from_ideal(IdealDescriptor.of_zero_set(discrete3, q2, 0b011))


def brute_quotient(f, m, grid):
    """inf of ||f - g|| over g in m with values from a finite grid."""
    n = len(f.space)
    free = [i for i in range(n) if not m.zero_points >> i & 1]
    best = None
    for choice in product(grid, repeat=len(free)):
        vals = [0] * n
        for i, c in zip(free, choice):
            vals[i] = c
        g = BoundedFunction.from_values(f.space, f.field, vals)
        assert g in m
        d = sup_norm(f - g)
        best = d if best is None or d < best else best
    return best


def test_quotient_norm_examples(discrete3, q2):
    f = f124(discrete3, q2)
    m2 = IdealDescriptor.at_point(discrete3, q2, "2")
    grid = [Fraction(k, 2) for k in range(-4, 10)]
    assert quotient_norm(f, m2) == brute_quotient(f, m2, grid) == AbsValue.power(2, -1)
    g = BoundedFunction.from_values(discrete3, q2, [1, 0, 4])
    assert sup_norm(f - g) == AbsValue.power(2, -1)
    assert quotient_norm(BoundedFunction.from_values(discrete3, q2, [3, 0, 1]), m2) == ZERO
    assert quotient_norm(BoundedFunction.constant(discrete3, q2, 1), m2) == ONE
    assert residue(f, m2) == q2(2)


def test_enumerate_max_ideals_examples(sierpinski, q2):
    assert len(enumerate_max_ideals(FiniteSpace.discrete("abcd"), q2)) == 4
    assert [m.zero_points for m in enumerate_max_ideals(sierpinski, q2)] == [0b11]
    assert enumerate_max_ideals(FiniteSpace.discrete([]), q2) == []


def test_max_ideal_count_is_component_count():
    f2 = FiniteField(2)
    for x in enumerate_topologies(4):
        ideals = enumerate_max_ideals(x, f2)
        assert len(ideals) == len(x.component_masks)
        assert all(m.is_maximal and m.is_proper for m in ideals)


def test_orthogonal_decomposition_examples(discrete3, q2):
    m = IdealDescriptor.at_point(discrete3, q2, "1")
    g = BoundedFunction.from_values(discrete3, q2, [0, 2, "1/3"])
    assert orthogonal_decomposition_check(q2(0), g, m)
    assert orthogonal_decomposition_check(q2(5), BoundedFunction.constant(discrete3, q2, 0), m)
    assert orthogonal_decomposition_check(q2("1/8"), g, m)
    with pytest.raises(IdealError):
        orthogonal_decomposition_check(q2(1), BoundedFunction.constant(discrete3, q2, 1), m)


def test_algebraic_norm_examples(discrete3, q2):
    f = f124(discrete3, q2)
    assert algebraic_norm(f) == sup_norm(f) == ONE
    assert algebraic_norm(BoundedFunction.constant(discrete3, q2, 0)) == ZERO
    assert algebraic_norm(BoundedFunction.constant(discrete3, q2, "1/4")) == AbsValue.power(2, 2)


values = st.fractions(min_value=-50, max_value=50, max_denominator=50)


@settings(max_examples=150)
@given(st.lists(values, min_size=4, max_size=4), st.lists(values, min_size=4, max_size=4), st.sampled_from([2, 3]))
def test_seminorm_is_multiplicative_and_bounded(a, b, p):
    x = FiniteSpace.from_sets("abcd", [[], ["a"], ["b"], ["a", "b"], ["c", "d"], ["a", "c", "d"],
                                       ["b", "c", "d"], ["a", "b", "c", "d"]])
    k = RationalField(p)
    a[3] = a[2]
    b[3] = b[2]
    f = BoundedFunction.from_values(x, k, a)
    g = BoundedFunction.from_values(x, k, b)
    for pt in spectrum(x, k):
        assert pt(f * g) == pt(f) * pt(g)
        assert pt(f) <= sup_norm(f)
        assert pt(f + g) <= max(pt(f), pt(g))


def component_function(x, k, rng):
    pool = [0, 1, 2, 6, Fraction(1, 4)] if isinstance(k, RationalField) else [0, 1]
    comp_vals = [k(rng.choice(pool)) for _ in x.component_masks]
    return BoundedFunction(x, k, tuple(comp_vals[x.component_of(i)] for i in range(len(x))))


def test_berkovich_axioms_and_spectrum():
    rng = random.Random(1)
    for x in enumerate_topologies(3):
        for k in (FiniteField(2), RationalField(2)):
            assert spectrum_matches_uf(x, k)
            samples = [component_function(x, k, rng) for _ in range(4)]
            for pt in spectrum(x, k):
                assert isinstance(pt, BerkovichPoint)
                assert pt.axiom_failures(samples) == []
