"""Witness monomials g_t and rho_t and their closed-form colon ideals."""

import pytest

from pathdepth.monomials import Monomial, MonomialIdeal
from pathdepth.weighted_paths import WeightVector, delta_set, path_ideal
from pathdepth.witnesses import (
    colon_by_g,
    colon_by_rho,
    colon_x2_identity,
    edge_monomial,
    factor_ideals,
    first_power_witness,
    leaf_colon_identity,
    modified_edge_monomial,
    padded_witness,
    witness_product,
    witness_report,
)

TIERED_PATH = WeightVector((1, 1, 2, 2, 2, 2, 4, 4, 6, 6, 6))


def test_modified_edge_monomials():
    w = TIERED_PATH
    assert str(edge_monomial(w, 2)) == "x2*x3"
    # the tail absorbs the strictly increasing run right of the edge
    assert str(modified_edge_monomial(w, 1)) == "x1*x2"
    assert str(modified_edge_monomial(w, 2)) == "x2*x3^2"
    assert str(modified_edge_monomial(w, 8)) == "x8^4*x9^9"
    assert str(modified_edge_monomial(w, 10)) == "x10^6*x11^6"


def test_witness_product_goldens():
    w = TIERED_PATH
    g2, f2 = witness_product(w, 2)
    assert str(g2) == "x2*x3^2" and [f.edges for f in f2] == [(2,)]
    g3, f3 = witness_product(w, 3)
    assert str(g3) == "x2*x3^2*x10^6*x11^6"
    assert [f.edges for f in f3] == [(2,), (10,)]
    g4, f4 = witness_product(w, 4)
    assert str(g4) == "x2*x3^2*x8^4*x9^9*x10^6*x11^6"
    # x8..x11 supports touch, so edges 8 and 10 fuse into one factor
    assert [f.edges for f in f4] == [(2,), (8, 10)]
    with pytest.raises(ValueError):
        witness_product(w, 1)
    with pytest.raises(ValueError):
        witness_product(w, len(delta_set(w)) + 2)


def _single_factor_ideals(weights, t):
    w = WeightVector(weights)
    g, factors = witness_product(w, t)
    assert len(factors) == 1
    return g, factor_ideals(w, factors[0])


def test_factor_ideals_type_one_tail():
    g, fi = _single_factor_ideals((1, 1, 2, 2, 2, 3), 2)
    assert str(g) == "x5^2*x6^4"
    assert fi.even_prefix.is_zero
    assert set(fi.odd_prefix.to_strings()) == {"x5^2"}
    assert set(fi.odd_cover.to_strings()) == {"x5^2", "x7^3"}
    assert set(fi.even_cover.to_strings()) == {"x4^2", "x6"}


def test_factor_ideals_glued_pair():
    g, fi = _single_factor_ideals((1, 1, 1, 1, 3, 3, 3, 4), 3)
    assert str(g) == "x6^3*x7^6*x8^6"
    assert fi.even_prefix.is_zero
    assert set(fi.odd_prefix.to_strings()) == {"x5^3", "x7^3"}
    assert set(fi.odd_cover.to_strings()) == {"x5^3", "x7^3", "x9^4"}
    assert set(fi.even_cover.to_strings()) == {"x6^3", "x8"}


def test_factor_ideals_long_window():
    g, fi = _single_factor_ideals((1, 1, 1, 1, 1, 2, 2, 2, 2, 2, 3), 6)
    assert str(g) == "x5*x6^2*x7^2*x8^4*x9^4*x10^4*x11^4"
    assert set(fi.even_prefix.to_strings()) == {"x4", "x6", "x8^2", "x10^2"}
    assert set(fi.odd_prefix.to_strings()) == {"x5"}
    assert set(fi.odd_cover.to_strings()) == {"x5", "x7^2", "x9^2", "x11"}
    assert set(fi.even_cover.to_strings()) == {"x4", "x6", "x8^2", "x10^2", "x12^3"}
    contrib = fi.contribution
    assert fi.even_prefix <= contrib and (fi.odd_cover & fi.even_cover) <= contrib


def test_padded_witness_small():
    ws = padded_witness(WeightVector((1, 1, 2)), 2)
    assert ws.lam == (1, 2, 4)
    assert ws.eta == {1: 0, 2: 0, 4: 1}
    assert str(ws.rho) == "x2*x3^2*x4"
    assert set(colon_by_rho(WeightVector((1, 1, 2)), 2).to_strings()) == {
        "x2",
        "x1*x4",
        "x3*x4",
    }


def test_padded_witness_open_pair_padding():
    # lambda skips the factor's tail support {6}; pads after the open pair (3, 5)
    w = WeightVector((1, 1, 2, 2, 2, 3))
    ws = padded_witness(w, 2)
    assert ws.lam == (1, 2, 3, 4, 5, 7)
    assert ws.eta == {1: 0, 2: 1, 3: 0, 4: 1, 5: 1, 7: 2}
    assert str(ws.rho) == "x2*x4*x5^3*x6^4*x7^2"


COLON_SWEEP = [
    (1, 1, 1),
    (1, 1, 2),
    (1, 2, 2, 3),
    (1, 1, 2, 2, 2),
    (1, 1, 2, 2, 2, 3),
    (2, 2, 2, 2),
]


@pytest.mark.parametrize("weights", COLON_SWEEP)
def test_colon_closed_forms_match_brute(weights):
    w = WeightVector(weights)
    ideal = path_ideal(w)
    for t in range(2, len(delta_set(w)) + 2):
        power = ideal**t
        g, _ = witness_product(w, t)
        assert colon_by_g(w, t) == power.colon(g)
        wit = padded_witness(w, t)
        assert colon_by_rho(w, t) == power.colon(wit.rho)
        assert wit.rho not in power


@pytest.mark.parametrize("weights", COLON_SWEEP)
def test_colon_by_rho_is_squarefree(weights):
    w = WeightVector(weights)
    for t in range(2, len(delta_set(w)) + 2):
        for gen in colon_by_rho(w, t).gens:
            assert max(gen.exponents) == 1


def test_closed_pair_keeps_variables_out():
    # both B-pairs of these paths close at the tested power: the pair
    # variables x_p, x_(p+2) then multiply rho into the power and must not
    # be offered as colon generators
    for weights, t in (((1, 1, 2, 2, 2), 2), ((1, 1, 2, 2, 2, 3), 3)):
        w = WeightVector(weights)
        power = path_ideal(w) ** t
        wit = padded_witness(w, t)
        assert colon_by_rho(w, t) == power.colon(wit.rho)


def test_skipped_edge_inside_plateau():
    # the factor on edges {4, 6, 7} skips edge 5 although weights 4..7 tie;
    # the raw cover-lcm x4^4*x7^4 would overshoot the true colon
    w = WeightVector((1, 1, 4, 4, 4, 4, 4, 4))
    colon = colon_by_g(w, 5)
    assert Monomial.parse("x4^4*x7^4", w.nvars) not in colon
    g, _ = witness_product(w, 5)
    assert colon == (path_ideal(w) ** 5).colon(g)
    report = witness_report(w, 5)
    assert report["match"] is True


def test_leaf_colon_identity():
    w = WeightVector((1, 1, 2, 2))
    assert leaf_colon_identity(w, 2, edge="first")
    assert leaf_colon_identity(w, 3, edge="first")
    assert leaf_colon_identity(w, 2, edge="last")
    with pytest.raises(ValueError):
        leaf_colon_identity(w, 1)
    with pytest.raises(ValueError):
        leaf_colon_identity(WeightVector((1, 1, 2)), 2, edge="last")
    with pytest.raises(ValueError):
        leaf_colon_identity(w, 2, edge="middle")


def test_colon_x2_identity():
    assert colon_x2_identity(WeightVector((1, 1, 2, 2)), 2)
    assert colon_x2_identity(WeightVector((2, 2, 3)), 3)
    with pytest.raises(ValueError):
        colon_x2_identity(WeightVector((1, 2, 2)), 2)


def test_first_power_witness():
    w = WeightVector((1, 1, 2, 2, 2, 3))
    f, colon = first_power_witness(w)
    assert str(f) == "x6^2*x7^2"
    assert set(colon.to_strings()) == {
        "x1*x2",
        "x2*x3",
        "x3^2*x4^2",
        "x5^2",
        "x6*x7",
    }
    assert path_ideal(w).colon(f) == colon
    with pytest.raises(ValueError):
        first_power_witness(WeightVector((1, 2, 3)))


def test_witness_report_shape():
    report = witness_report(WeightVector((1, 1, 2)), 2)
    assert report["match"] is True
    assert report["rho"] == "x2*x3^2*x4"
    assert set(report["predicted_colon"]) == set(report["brute_colon"])
    assert report["lambda"] == [1, 2, 4]
    assert report["eta"] == {"1": 0, "2": 0, "4": 1}
