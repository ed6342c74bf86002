"""Monomial and monomial-ideal arithmetic.

Everything downstream (witness construction, colon identities, the depth
oracle) leans on these operations, so the laws here are tested both on
hand-picked values and property-style.
"""

import pytest
from hypothesis import given, settings, strategies as st

from pathdepth.monomials import DimensionMismatch, Monomial, MonomialIdeal, minimalize


def M(nvars, text):
    return Monomial.parse(text, nvars)


def test_parse_and_format_roundtrip():
    m = M(4, "x1^2*x3")
    assert m.exponents == (2, 0, 1, 0)
    assert str(m) == "x1^2*x3"
    assert str(Monomial.one(3)) == "1"
    assert M(3, "1").is_one


def test_parse_rejects_bad_input():
    with pytest.raises(ValueError):
        M(2, "x3")
    with pytest.raises(ValueError):
        M(2, "x1^0*x1")  # zero exponent
    with pytest.raises(ValueError):
        M(2, "y1")


def test_basic_ops():
    a = M(3, "x1*x2^2")
    b = M(3, "x2*x3")
    assert str(a * b) == "x1*x2^3*x3"
    assert a.lcm(b).exponents == (1, 2, 1)
    assert a.gcd(b).exponents == (0, 1, 0)
    assert b.divides(a.lcm(b))
    assert not b.divides(a)
    assert (a * b).divide_exact(b) == a
    with pytest.raises(ValueError):
        a.divide_exact(b)
    assert a.support() == (1, 2)
    assert a.degree == 3
    assert a.exponent(2) == 2


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        M(2, "x1") * M(3, "x1")


def test_minimalize_drops_multiples():
    gens = [M(3, "x1*x2"), M(3, "x1^2*x2"), M(3, "x2*x3"), M(3, "x1*x2*x3")]
    kept = minimalize(3, gens)
    assert set(kept.to_strings()) == {"x1*x2", "x2*x3"}


def test_ideal_normalizes_on_construction():
    I = MonomialIdeal.parse(3, "x1^2*x2, x1*x2, x1*x2")
    assert I.num_gens == 1
    assert I.to_strings() == ["x1*x2"]


def test_zero_and_unit():
    Z = MonomialIdeal.zero(3)
    U = MonomialIdeal.unit(3)
    I = MonomialIdeal.parse(3, "x1*x2")
    assert Z.is_zero and not Z.is_unit
    assert U.is_unit and not U.is_zero
    assert (Z + I) == I
    assert (Z * I).is_zero
    assert (U * I) == I
    assert (U & I) == I
    assert M(3, "x2^9") not in Z
    assert Monomial.one(3) in U


def test_membership_and_containment():
    I = MonomialIdeal.parse(3, "x1*x2, x2^3")
    assert M(3, "x1*x2^2") in I
    assert M(3, "x2^2") not in I
    assert MonomialIdeal.parse(3, "x1*x2^3") <= I
    assert not I <= MonomialIdeal.parse(3, "x1*x2^3")


def test_colon_by_monomial():
    I = MonomialIdeal.parse(2, "x1^3, x1*x2^2")
    Q = I.colon(M(2, "x1"))
    assert set(Q.to_strings()) == {"x1^2", "x2^2"}


def test_colon_against_path_square():
    # (I^2 : x2*x3) for the weight-(1,1,2) path picks up one new generator
    I = MonomialIdeal.parse(4, "x1*x2, x2*x3, x3^2*x4^2")
    Q = (I * I).colon(M(4, "x2*x3"))
    expected = I + MonomialIdeal.parse(4, "x1*x3*x4^2")
    assert Q == expected


def test_power():
    I = MonomialIdeal.parse(3, "x1*x2, x2*x3")
    assert (I**0).is_unit
    assert I**1 == I
    sq = I**2
    assert set(sq.to_strings()) == {"x1^2*x2^2", "x1*x2^2*x3", "x2^2*x3^2"}
    assert I**3 == sq * I


def test_intersection():
    A = MonomialIdeal.parse(3, "x1^2, x2")
    B = MonomialIdeal.parse(3, "x1, x3")
    assert (A & B) == MonomialIdeal.parse(3, "x1^2, x1*x2, x2*x3, x1^2*x3")


def test_generator_lcm():
    I = MonomialIdeal.parse(3, "x1*x2, x2^3*x3")
    assert I.generator_lcm().exponents == (1, 3, 1)


def test_huge_exponents_fall_back_cleanly():
    big = 2**70
    I = MonomialIdeal.from_exponents(2, [(big, 0), (0, 1)])
    J = I * I
    assert J.num_gens == 3
    assert Monomial.from_powers(2, {1: 2 * big}) in J


exps = st.lists(st.integers(min_value=0, max_value=5), min_size=3, max_size=3)
mono = exps.map(lambda e: Monomial(tuple(e)))
ideal = st.lists(mono.filter(lambda m: not m.is_one), min_size=1, max_size=6).map(
    lambda ms: MonomialIdeal(3, tuple(ms))
)


@given(ideal, mono)
@settings(max_examples=120, deadline=None)
def test_colon_membership_law(I, f):
    # m lies in (I : f) exactly when m*f lies in I
    Q = I.colon(f)
    for m in Q.gens:
        assert m * f in I
    assert all(g in Q for g in I.gens)


@given(ideal, ideal)
@settings(max_examples=80, deadline=None)
def test_intersection_is_meet(A, B):
    C = A & B
    assert C <= A and C <= B
    for a in A.gens:
        for b in B.gens:
            assert a.lcm(b) in C


@given(ideal)
@settings(max_examples=60, deadline=None)
def test_power_additivity(I):
    assert (I**2) * I == I * (I**2)
    assert I**3 == (I**2) * I


@given(st.lists(mono, min_size=1, max_size=8))
@settings(max_examples=80, deadline=None)
def test_minimalize_idempotent_and_order_free(ms):
    once = minimalize(3, ms)
    assert minimalize(3, once.gens) == once
    assert minimalize(3, list(reversed(ms))) == once
