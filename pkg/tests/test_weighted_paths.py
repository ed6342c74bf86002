"""Delta combinatorics: blocks, gluing, partitions, labels, depth function."""

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from pathdepth.monomials import Monomial, MonomialIdeal
from pathdepth.weighted_paths import (
    Block,
    DeltaProfile,
    WeightVector,
    abc_partition,
    block_counts,
    delta_set,
    depth_drop_bounds,
    depth_formula,
    extended_blocks,
    gluable,
    in_path_power,
    maximal_blocks,
    mu_labels,
    path_ideal,
    piecewise_depth,
    subpath_ideal,
)


def test_weight_vector_validation():
    WeightVector((1, 1, 2))
    with pytest.raises(ValueError):
        WeightVector((1, 2, 1))
    with pytest.raises(ValueError):
        WeightVector((0, 1))
    assert WeightVector.parse("1,1,2").weights == (1, 1, 2)
    assert WeightVector((1, 2, 3)).strictly_increasing
    assert not WeightVector((1, 1, 1)).strictly_increasing
    # a repeat touching the last edge leaves delta empty, so it still counts
    assert WeightVector((1, 1)).strictly_increasing
    assert WeightVector((2,)).nvars == 2


def test_path_ideal_small():
    w = WeightVector.parse("1,1,2")
    assert path_ideal(w) == MonomialIdeal.parse(4, "x1*x2, x2*x3, x3^2*x4^2")
    assert path_ideal(WeightVector((2,))) == MonomialIdeal.parse(2, "x1^2*x2^2")


def test_subpath_ideal():
    w = WeightVector.parse("1,1,2,2")
    assert subpath_ideal(w, 4, 5) == MonomialIdeal.parse(5, "x4^2*x5^2")
    assert subpath_ideal(w, 2, 2).is_zero
    assert subpath_ideal(w, 5, 2).is_zero
    with pytest.raises(ValueError):
        subpath_ideal(w, 0, 3)


def test_delta_excludes_last_edge_pair():
    # w_(n-1) = w_n must not produce n-1 in delta
    assert delta_set(WeightVector.parse("1,1")) == ()
    assert delta_set(WeightVector.parse("1,1,1")) == (1,)
    assert delta_set(WeightVector.parse("1,2,2,3,3")) == (2,)


def test_blocks_and_gluing():
    blocks = maximal_blocks((1, 3, 4, 6, 7, 9))
    assert [(b.start, b.end) for b in blocks] == [(1, 1), (3, 4), (6, 7), (9, 9)]
    assert [b.type_ for b in blocks] == [1, 2, 2, 1]
    assert gluable(blocks[0], blocks[1])
    assert gluable(blocks[1], blocks[2])
    assert not gluable(Block(1, 3), Block(5, 5))  # type 0 never glues
    assert not gluable(Block(1, 1), Block(4, 4))  # gap 3


def test_extended_blocks_and_counts():
    chains = extended_blocks(maximal_blocks((1, 3, 4, 6, 7, 9)))
    assert len(chains) == 1 and len(chains[0].blocks) == 4
    assert block_counts((1, 3, 4, 6, 7, 9)) == (0, 3, 0, 3)
    assert block_counts((1, 2, 3, 4)) == (1, 0, 1, 2)
    assert block_counts(()) == (0, 0, 0, 0)
    assert block_counts((1, 3, 4, 6, 8, 9, 11, 12, 13, 15)) == (1, 3, 1, 5)


def test_abc_partition_golden():
    delta = (1, 3, 4, 6, 8, 9, 11, 12, 13, 15)
    A, B, C = abc_partition(delta)
    assert A == (15,)
    assert B == (1, 3, 4, 6, 8, 9)
    assert C == (11, 12, 13)
    assert mu_labels(delta) == (15, 9, 8, 6, 4, 3, 1, 13, 12, 11)


def test_abc_partition_more():
    assert abc_partition((1, 3, 4, 5, 7, 9)) == ((1,), (7, 9), (3, 4, 5))
    assert mu_labels((1, 3, 4, 5, 7, 9)) == (1, 9, 7, 5, 4, 3)
    assert abc_partition((1, 2, 3)) == ((), (), (1, 2, 3))
    assert mu_labels((1, 2, 3)) == (3, 2, 1)
    # glue eats the next block's start before the remainder is classified
    assert abc_partition((1, 3, 4, 5, 6)) == ((), (1, 3), (4, 5, 6))


def test_profile_cross_checks():
    prof = DeltaProfile.from_weights(WeightVector.parse("1,1,2,2,2,3,3,3,4,4,5"))
    assert prof.delta == (1, 3, 4, 6, 7, 9)
    assert (prof.a, prof.b, prof.c, prof.k) == (0, 3, 0, 3)
    assert prof.part_b == (1, 3, 4, 6, 7, 9)
    assert prof.mu == (9, 7, 6, 4, 3, 1)
    assert prof.depth_sequence() == (4, 4, 3, 3, 2, 2, 1)
    d = prof.to_dict()
    assert d["a"] == 0 and d["k"] == 3 and d["B"] == [1, 3, 4, 6, 7, 9]


def test_piecewise_depth_golden():
    delta = (1, 3, 4, 6, 8, 9, 11, 12, 13, 15)
    assert piecewise_depth(delta, 1) == 6
    assert piecewise_depth(delta, 8) == 2
    assert piecewise_depth(delta, 11) == 1
    assert piecewise_depth((1, 2, 3, 4), 1) == 3
    assert [piecewise_depth((1, 2, 3, 4), t) for t in range(1, 6)] == [3, 2, 2, 2, 1]


def test_depth_formula_matches_profile():
    w = WeightVector.parse("1,1,1,1,1,1")
    assert [depth_formula(w, t) for t in range(1, 7)] == [3, 2, 2, 2, 1, 1]
    assert depth_formula(WeightVector.parse("1,2,3"), 1) == 1
    assert depth_formula(WeightVector.parse("1,2,3"), 99) == 1


def subsets(universe):
    for r in range(len(universe) + 1):
        yield from itertools.combinations(universe, r)


def test_partition_invariants_exhaustive_small():
    for delta in subsets(range(1, 9)):
        a, b, c, k = block_counts(delta)
        A, B, C = abc_partition(delta)
        assert a + 2 * b + 3 * c == len(delta)
        assert (len(A), len(B), len(C)) == (a, 2 * b, 3 * c)
        assert tuple(sorted(A + B + C)) == tuple(delta)
        assert piecewise_depth(delta, 1) == k + 1
        prev = None
        for t in range(1, len(delta) + 3):
            d = piecewise_depth(delta, t)
            if t >= len(delta) + 1:
                assert d == 1
            if prev is not None:
                assert d <= prev
            prev = d


def test_depth_drop_bounds_small():
    for delta in subsets(range(1, 7)):
        if not delta:
            continue
        for t in range(2, 9):
            first, second, third = depth_drop_bounds(delta, t)
            assert first is True
            if 1 in delta:
                assert second is True and third is True
            else:
                assert second is None and third is None


def test_in_path_power_basics():
    w = WeightVector.parse("1,1,2")
    I = path_ideal(w)
    sq = I * I
    m = Monomial.parse("x1*x2^2*x3", 4)
    assert in_path_power(w, m, 2)
    assert m in sq
    assert not in_path_power(w, Monomial.parse("x1*x2*x3", 4), 2)
    assert in_path_power(w, Monomial.one(4), 0)
    assert not in_path_power(w, Monomial.one(4), 1)


weights_strategy = st.lists(
    st.integers(min_value=1, max_value=3), min_size=1, max_size=6
).map(lambda xs: WeightVector(tuple(sorted(xs))))


@given(weights_strategy, st.integers(min_value=0, max_value=3))
@settings(max_examples=80, deadline=None)
def test_in_path_power_agrees_with_brute(w, t):
    P = path_ideal(w) ** t
    for g in P.gens:
        assert in_path_power(w, g, t)
    probe = Monomial(tuple(1 for _ in range(w.nvars)))
    assert in_path_power(w, probe, t) == (probe in P)


@given(weights_strategy)
@settings(max_examples=100, deadline=None)
def test_first_power_depth_is_k_plus_one(w):
    prof = DeltaProfile.from_weights(w)
    assert depth_formula(w, 1) == prof.k + 1
