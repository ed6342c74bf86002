"""Witness monomials and closed-form colon ideals for powers of path edge ideals.

For the edge ideal I of an increasing weighted path, each power I^t admits a
monomial witness whose colon ideal has an explicit closed form from which
depth(S/I^t) can be read off.  The witness is assembled in stages:

  * each edge e_i gets a modified edge monomial: the plain (x_i x_(i+1))^(w_i)
    when the next weight repeats it, otherwise the same times a tail
    x_j^(w_j - 1) over the strictly increasing weight run that follows;
  * the product g_t multiplies the modified monomials selected by the first
    t-1 labels of the mu order on delta;
  * g_t is padded by powers of the variables outside its extended support,
    giving rho_t.

Both colon ideals (I^t : g_t) and (I^t : rho_t) have predicted generator
sets built from small per-factor ideals; every predictor here can be checked
against a brute-force colon, and the check functions return the comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from .monomials import Monomial, MonomialIdeal
from .weighted_paths import (
    WeightVector,
    abc_partition,
    delta_set,
    in_path_power,
    mu_labels,
    path_ideal,
    subpath_ideal,
)

__all__ = [
    "WitnessMismatch",
    "edge_monomial",
    "modified_edge_monomial",
    "Factor",
    "witness_product",
    "FactorIdeals",
    "factor_ideals",
    "colon_by_g",
    "WitnessSet",
    "padded_witness",
    "colon_by_rho",
    "leaf_colon_identity",
    "colon_x2_identity",
    "first_power_witness",
    "witness_report",
]


class WitnessMismatch(RuntimeError):
    """A closed-form colon ideal disagreed with the brute-force computation."""


def edge_monomial(w: WeightVector, i: int) -> Monomial:
    """The generator (x_i x_(i+1))^(w_i) of the path edge ideal."""
    if not 1 <= i <= w.n:
        raise ValueError(f"edge index {i} outside 1..{w.n}")
    wi = w.weights[i - 1]
    return Monomial.from_powers(w.nvars, {i: wi, i + 1: wi})


def modified_edge_monomial(w: WeightVector, i: int) -> Monomial:
    """Edge monomial with a tail over the strictly increasing run after it.

    For w_i = w_(i+1) this is just the edge monomial.  Otherwise multiply by
    x_j^(w_j - 1) for j = i+1 .. l, where l is the last index of the maximal
    run w_i < w_(i+1) < ... < w_l.  Only defined for i <= n-1 since the rule
    looks one weight ahead.
    """
    if not 1 <= i <= w.n - 1:
        raise ValueError(f"modified edge index {i} outside 1..{w.n - 1}")
    ws = w.weights
    if ws[i - 1] == ws[i]:
        return edge_monomial(w, i)
    powers = {i: ws[i - 1], i + 1: ws[i - 1]}
    stop = i + 1
    while stop < w.n and ws[stop] > ws[stop - 1]:
        stop += 1
    for j in range(i + 1, stop + 1):
        powers[j] = powers.get(j, 0) + ws[j - 1] - 1
    return Monomial.from_powers(w.nvars, powers)


@dataclass(frozen=True)
class Factor:
    """Modified edge monomials of g_t whose supports merge into one interval."""

    edges: tuple[int, ...]
    monomial: Monomial
    plain: Monomial
    tail_support: tuple[int, ...]

    @property
    def support(self) -> tuple[int, ...]:
        return self.monomial.support()


def _product(nvars: int, monomials) -> Monomial:
    return reduce(lambda a, b: a * b, monomials, Monomial.one(nvars))


def _build_factor(w: WeightVector, edges: tuple[int, ...]) -> Factor:
    mono = _product(w.nvars, (modified_edge_monomial(w, i) for i in edges))
    plain = _product(w.nvars, (edge_monomial(w, i) for i in edges))
    tail = mono.divide_exact(plain)
    return Factor(edges=edges, monomial=mono, plain=plain, tail_support=tail.support())


def witness_product(w: WeightVector, t: int) -> tuple[Monomial, tuple[Factor, ...]]:
    """The monomial g_t together with its factors grouped by support interval.

    g_t multiplies the modified edge monomials at positions mu_1+1 .. mu_(t-1)+1;
    it is defined for 2 <= t <= |delta| + 1.
    """
    delta = delta_set(w)
    if not 2 <= t <= len(delta) + 1:
        raise ValueError(f"t={t} outside 2..{len(delta) + 1} for delta {delta}")
    labels = mu_labels(delta)
    edge_idx = sorted(labels[j] + 1 for j in range(t - 1))
    product = _product(w.nvars, (modified_edge_monomial(w, i) for i in edge_idx))
    supp = set(product.support())
    factors = []
    run: list[int] = []
    for v in sorted(supp) + [max(supp) + 2]:
        if run and v != run[-1] + 1:
            members = tuple(i for i in edge_idx if i in set(run))
            factors.append(_build_factor(w, members))
            run = []
        run.append(v)
    return product, tuple(factors)


def _var_ideal(nvars: int, powers: dict[int, int]) -> MonomialIdeal:
    gens = tuple(Monomial.from_powers(nvars, {j: e}) for j, e in powers.items())
    return MonomialIdeal(nvars, gens)


@dataclass(frozen=True)
class FactorIdeals:
    """The four variable-power ideals attached to one factor of g_t.

    Over the window [min support - 1, max support + 1] each position j gets
    the exponent 1 if j is in the factor's tail support, the last weight if
    j is the extra variable x_(n+1), and w_j otherwise.  The cover ideals
    take all odd (resp. even) window positions; the prefix ideals stop just
    below the largest odd (resp. even) tail position.  The colon
    contribution of the factor is even_prefix + odd_prefix +
    (odd_cover meet even_cover); the squarefree variants replace every
    exponent by 1 and enter the rho colon.
    """

    odd_cover: MonomialIdeal
    even_cover: MonomialIdeal
    even_prefix: MonomialIdeal
    odd_prefix: MonomialIdeal
    odd_cover_sq: MonomialIdeal
    even_cover_sq: MonomialIdeal
    even_prefix_sq: MonomialIdeal
    odd_prefix_sq: MonomialIdeal

    @property
    def contribution(self) -> MonomialIdeal:
        return self.even_prefix + self.odd_prefix + (self.odd_cover & self.even_cover)

    @property
    def contribution_sq(self) -> MonomialIdeal:
        return (
            self.even_prefix_sq
            + self.odd_prefix_sq
            + (self.odd_cover_sq & self.even_cover_sq)
        )


def factor_ideals(w: WeightVector, factor: Factor) -> FactorIdeals:
    """Build the cover and prefix ideals for one factor of g_t."""
    nvars = w.nvars
    supp = factor.support
    lo, hi = supp[0] - 1, supp[-1] + 1
    if lo < 1 or hi > nvars:
        raise RuntimeError(f"factor window [{lo}, {hi}] leaves the ring")
    tail = set(factor.tail_support)

    def window_exp(j: int) -> int:
        if j in tail:
            return 1
        if j == nvars:
            return w.weights[-1]
        return w.weights[j - 1]

    top_odd = max((j for j in tail if j % 2 == 1), default=1)
    top_even = max((j for j in tail if j % 2 == 0), default=0)
    odd_window = {j: window_exp(j) for j in range(lo, hi + 1) if j % 2 == 1}
    even_window = {j: window_exp(j) for j in range(lo, hi + 1) if j % 2 == 0}
    even_pref = {j: window_exp(j) for j in range(lo, top_odd) if j % 2 == 0}
    odd_pref = {j: window_exp(j) for j in range(lo, top_even) if j % 2 == 1}
    return FactorIdeals(
        odd_cover=_var_ideal(nvars, odd_window),
        even_cover=_var_ideal(nvars, even_window),
        even_prefix=_var_ideal(nvars, even_pref),
        odd_prefix=_var_ideal(nvars, odd_pref),
        odd_cover_sq=_var_ideal(nvars, {j: 1 for j in odd_window}),
        even_cover_sq=_var_ideal(nvars, {j: 1 for j in even_window}),
        even_prefix_sq=_var_ideal(nvars, {j: 1 for j in even_pref}),
        odd_prefix_sq=_var_ideal(nvars, {j: 1 for j in odd_pref}),
    )


def _admitted(
    w: WeightVector, base: Monomial, t: int, candidates: Iterable[Monomial]
) -> list[Monomial]:
    # each candidate c enters the colon iff c*base lands in the t-th power;
    # the cover/prefix ideals can overshoot when a factor's edge set skips
    # an edge inside a constant-weight stretch, so every candidate is
    # checked individually
    return [c for c in candidates if in_path_power(w, c * base, t)]


def colon_by_g(w: WeightVector, t: int) -> MonomialIdeal:
    """Predicted (I^t : g_t): the edge ideal plus each factor's contribution.

    Per factor the candidates are the two prefix ideals' generators and all
    pairwise lcms between the odd and even covers, admitted only when they
    multiply g_t back into I^t.
    """
    g, factors = witness_product(w, t)
    kept: list[Monomial] = []
    for f in factors:
        fi = factor_ideals(w, f)
        cands = list(fi.even_prefix.gens) + list(fi.odd_prefix.gens)
        cands += [
            u.lcm(v) for u in fi.odd_cover.gens for v in fi.even_cover.gens
        ]
        kept += _admitted(w, g, t, cands)
    return path_ideal(w) + MonomialIdeal(w.nvars, tuple(kept))


@dataclass
class WitnessSet:
    """g_t, its factors, and the padding data that turns it into rho_t."""

    weights: WeightVector
    t: int
    g: Monomial
    factors: tuple[Factor, ...]
    lam: tuple[int, ...]
    eta: dict[int, int]
    rho: Monomial


def _pair_data(
    w: WeightVector, g: Monomial
) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
    """Consecutive pairs of the class B labels, and those still "open".

    B is listed ascending as b_1 < b_2 < ...; the pairs are (b_1, b_2),
    (b_3, b_4), ....  A pair is open while the modified edge monomial of its
    larger label (shifted to an edge index) does not divide g.
    """
    _, part_b, _ = abc_partition(delta_set(w))
    pairs = [(part_b[j], part_b[j + 1]) for j in range(0, len(part_b), 2)]
    open_pairs = [
        (p, q) for p, q in pairs if not modified_edge_monomial(w, q + 1).divides(g)
    ]
    return pairs, open_pairs


def padded_witness(w: WeightVector, t: int) -> WitnessSet:
    """rho_t: g_t times x_j^(eta_j) over positions j outside g_t's extended support.

    The extended support collects the tail supports of all factors.  The
    padding exponent is w_n - 1 at the last variable, w_(j-1) at the position
    right after an open pair's first label, w_(j-2) - 1 two positions after
    it, and w_j - 1 everywhere else.
    """
    g, factors = witness_product(w, t)
    n, ws = w.n, w.weights
    _, open_pairs = _pair_data(w, g)
    after_one = {p + 1 for p, _ in open_pairs}
    after_two = {p + 2 for p, _ in open_pairs}
    extended = set()
    for f in factors:
        extended.update(f.tail_support)
    lam = tuple(j for j in range(1, w.nvars + 1) if j not in extended)
    eta: dict[int, int] = {}
    for j in lam:
        if j == n + 1:
            eta[j] = ws[n - 1] - 1
        elif j in after_one:
            eta[j] = ws[j - 2]
        elif j in after_two:
            eta[j] = ws[j - 3] - 1
        else:
            eta[j] = ws[j - 1] - 1
    rho = g * Monomial.from_powers(w.nvars, eta)
    return WitnessSet(
        weights=w, t=t, g=g, factors=factors, lam=lam, eta=eta, rho=rho
    )


def colon_by_rho(w: WeightVector, t: int) -> MonomialIdeal:
    """Predicted (I^t : rho_t), a squarefree-flavored ideal.

    It adds up the unit-weight path ideal, the variables x_p and x_(p+2) for
    every open pair (p, q), the variables at strict weight ascents, and each
    factor's squarefree contribution.  All variable and pair candidates pass
    through the same membership filter as colon_by_g, which settles the
    near-pair and skipped-edge cases uniformly instead of by case analysis.
    """
    ws_set = padded_witness(w, t)
    g, factors = ws_set.g, ws_set.factors
    rho = ws_set.rho
    nvars, n, ws = w.nvars, w.n, w.weights
    _, open_pairs = _pair_data(w, g)
    unit_path = MonomialIdeal(
        nvars,
        tuple(Monomial.from_powers(nvars, {j: 1, j + 1: 1}) for j in range(1, n + 1)),
    )
    single_vars = {v for p, _ in open_pairs for v in (p, p + 2)}
    single_vars |= {j for j in range(1, n) if ws[j - 1] < ws[j]}
    cands = [Monomial.from_powers(nvars, {v: 1}) for v in sorted(single_vars)]
    for f in factors:
        fi = factor_ideals(w, f)
        cands += list(fi.even_prefix_sq.gens) + list(fi.odd_prefix_sq.gens)
        cands += [
            u.lcm(v)
            for u in fi.odd_cover_sq.gens
            for v in fi.even_cover_sq.gens
        ]
    return unit_path + MonomialIdeal(
        nvars, tuple(_admitted(w, rho, t, cands))
    )


def leaf_colon_identity(w: WeightVector, t: int, edge: str = "first") -> bool:
    """Check (I^t : f) = I^(t-1) for a leaf edge f of minimal local weight.

    The first edge always qualifies; the last edge qualifies when its weight
    matches the previous one (always for a single-edge path).
    """
    if t < 2:
        raise ValueError("leaf colon identity needs t >= 2")
    if edge == "first":
        i = 1
    elif edge == "last":
        if w.n >= 2 and w.weights[-1] != w.weights[-2]:
            raise ValueError("last edge only qualifies when w_(n-1) = w_n")
        i = w.n
    else:
        raise ValueError(f"edge must be 'first' or 'last', got {edge!r}")
    ideal = path_ideal(w)
    return (ideal**t).colon(edge_monomial(w, i)) == ideal ** (t - 1)


def colon_x2_identity(w: WeightVector, t: int) -> bool:
    """Check (I^t : x_2^(w_1)) = (x_1^(w_1), x_3^(w_1)) I^(t-1) + J^t.

    Needs w_1 = w_2; J is the edge ideal of the subpath on x_4..x_(n+1).
    """
    if w.n < 2 or w.weights[0] != w.weights[1]:
        raise ValueError("identity needs n >= 2 and w_1 = w_2")
    if t < 1:
        raise ValueError("power t must be positive")
    w1 = w.weights[0]
    ideal = path_ideal(w)
    left = (ideal**t).colon(Monomial.from_powers(w.nvars, {2: w1}))
    bracket = _var_ideal(w.nvars, {1: w1}) + _var_ideal(w.nvars, {3: w1})
    right = bracket * ideal ** (t - 1) + subpath_ideal(w, 4, w.nvars) ** t
    return left == right


def first_power_witness(w: WeightVector) -> tuple[Monomial, MonomialIdeal]:
    """Witness for the first power: f with (I : f) in closed form.

    With m = max(delta), f multiplies x_(n+1)^(w_n - 1) by x_k^(w_(k-1)) for
    k = m+2 .. n.  The colon is the edge ideal of the subpath x_1..x_m plus a
    chain of variable powers whose exponents are weight differences; the
    final generator degenerates to x_(n+1) when w_(n-1) = w_n.  The closed
    form is checked against the brute-force colon before returning.
    """
    delta = delta_set(w)
    if not delta:
        raise ValueError("needs a nonempty delta set")
    m, n, nvars, ws = max(delta), w.n, w.nvars, w.weights
    powers = {nvars: ws[n - 1] - 1}
    for k in range(m + 2, n + 1):
        powers[k] = powers.get(k, 0) + ws[k - 2]
    f = Monomial.from_powers(nvars, powers)
    gens = [Monomial.from_powers(nvars, {m + 1: ws[m]})]
    for k in range(m + 2, n):
        step = ws[k - 1] - ws[k - 2]
        if step <= 0:
            raise RuntimeError(f"weights must rise strictly above {m + 1}")
        gens.append(Monomial.from_powers(nvars, {k: step}))
    gens.append(
        Monomial.from_powers(nvars, {n: ws[n - 1] - ws[n - 2], n + 1: 1})
    )
    closed = subpath_ideal(w, 1, m) + MonomialIdeal(nvars, tuple(gens))
    brute = path_ideal(w).colon(f)
    if brute != closed:
        raise WitnessMismatch(
            f"first power witness failed for {w}: predicted {closed}, got {brute}"
        )
    return f, closed


def witness_report(w: WeightVector, t: int, power: MonomialIdeal | None = None) -> dict:
    """Full witness data for (w, t) with the predicted and brute-force colons."""
    wit = padded_witness(w, t)
    if power is None:
        power = path_ideal(w) ** t
    predicted = colon_by_rho(w, t)
    brute = power.colon(wit.rho)
    return {
        "g": str(wit.g),
        "factors": [
            {"edges": list(f.edges), "monomial": str(f.monomial)} for f in wit.factors
        ],
        "lambda": list(wit.lam),
        "eta": {str(j): e for j, e in sorted(wit.eta.items())},
        "rho": str(wit.rho),
        "predicted_colon": predicted.to_strings(),
        "brute_colon": brute.to_strings(),
        "match": predicted == brute and wit.rho not in power,
    }
