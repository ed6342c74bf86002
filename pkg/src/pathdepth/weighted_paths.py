"""Increasing weighted paths and the combinatorics behind their depth function.

A weighted path on vertices x1..x(n+1) has edges e_i = x_i x_(i+1) carrying
positive nondecreasing integer weights w_1 <= ... <= w_n, and its edge ideal
is generated by (x_i x_(i+1))^(w_i).  The depth of every power of that ideal
is governed by the set

    delta = { i in [n-2] : w_i = w_(i+1) },

the positions (away from the last edge pair) where consecutive weights agree.
This module extracts delta, decomposes it into maximal runs of consecutive
integers, classifies the runs by length mod 3, chains together nearby runs
(two runs can be glued when the gap between them is exactly 2 and neither has
length divisible by 3), and from that bookkeeping produces:

  * the counts (a, b, c) with a + 2b + 3c = |delta| and their sum k,
  * the piecewise depth value d(delta, t) for every power t,
  * a partition of delta into classes A, B, C with |A| = a, |B| = 2b,
    |C| = 3c, and the label order mu used to build witness monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .monomials import Monomial, MonomialIdeal

__all__ = [
    "WeightVector",
    "path_ideal",
    "subpath_ideal",
    "in_path_power",
    "delta_set",
    "Block",
    "maximal_blocks",
    "gluable",
    "ExtendedBlock",
    "extended_blocks",
    "block_counts",
    "piecewise_depth",
    "depth_formula",
    "abc_partition",
    "mu_labels",
    "DeltaProfile",
    "depth_drop_bounds",
]


@dataclass(frozen=True)
class WeightVector:
    """Nondecreasing positive integer weights, one per path edge."""

    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        ws = tuple(int(x) for x in self.weights)
        if any(x < 1 for x in ws):
            raise ValueError(f"weights must be positive, got {ws}")
        if any(ws[i] > ws[i + 1] for i in range(len(ws) - 1)):
            raise ValueError(f"weights must be nondecreasing, got {ws}")
        object.__setattr__(self, "weights", ws)

    @classmethod
    def parse(cls, text: str) -> "WeightVector":
        """Parse a comma-separated weight list such as "1,1,2,2"."""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        if not parts:
            raise ValueError("empty weight list")
        return cls(tuple(int(p) for p in parts))

    @property
    def n(self) -> int:
        """Number of edges."""
        return len(self.weights)

    @property
    def nvars(self) -> int:
        """Number of vertices, hence of ring variables."""
        return len(self.weights) + 1

    @property
    def strictly_increasing(self) -> bool:
        """True when no two consecutive weights agree below position n-1.

        Useful as an experiment filter: these are exactly the paths whose
        delta set is empty, so every power has depth 1.
        """
        return not delta_set(self)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.weights)


def path_ideal(w: WeightVector) -> MonomialIdeal:
    """Edge ideal of the weighted path, in n+1 variables."""
    gens = [
        Monomial.from_powers(w.nvars, {i: w.weights[i - 1], i + 1: w.weights[i - 1]})
        for i in range(1, w.n + 1)
    ]
    return MonomialIdeal(w.nvars, tuple(gens))


def subpath_ideal(w: WeightVector, i: int, j: int) -> MonomialIdeal:
    """Edge ideal of the vertex-interval subpath x_i..x_j, in the same ring.

    An empty interval (i > j) gives the zero ideal.
    """
    if i > j:
        return MonomialIdeal.zero(w.nvars)
    if i < 1 or j > w.nvars:
        raise ValueError(f"subpath [{i}, {j}] out of range for {w.nvars} vertices")
    gens = [
        Monomial.from_powers(w.nvars, {k: w.weights[k - 1], k + 1: w.weights[k - 1]})
        for k in range(i, j)
    ]
    return MonomialIdeal(w.nvars, tuple(gens))


def in_path_power(w: WeightVector, m: Monomial, t: int) -> bool:
    """Exact test for m being a member of the t-th power of the path ideal.

    m lies in I(P_w)^t exactly when some multiset of t edge monomials
    divides it.  Along a path that is a one-dimensional feasibility
    question: pick a multiplicity for every edge so that each vertex's
    exponent budget covers its two incident edges and the multiplicities
    total at least t.  A small DP over edges settles it without forming
    any ideal power.
    """
    if m.nvars != w.nvars:
        raise ValueError(f"monomial has {m.nvars} variables, path has {w.nvars}")
    if t <= 0:
        return True
    e, ws, n = m.exponents, w.weights, w.n
    # multiplicities above t never help a >= t comparison
    best = {v: v for v in range(min(t, e[0] // ws[0]) + 1)}
    for j in range(2, n + 1):
        wprev, wcur, budget = ws[j - 2], ws[j - 1], e[j - 1]
        nxt: dict[int, int] = {}
        for v, tiles in best.items():
            room = budget - wprev * v
            if room < 0:
                continue
            for u in range(min(t, room // wcur) + 1):
                if nxt.get(u, -1) < tiles + u:
                    nxt[u] = tiles + u
        best = nxt
        if not best:
            return False
    return any(
        tiles >= t for v, tiles in best.items() if ws[n - 1] * v <= e[n]
    )


def delta_set(w: WeightVector) -> tuple[int, ...]:
    """Positions i <= n-2 where w_i equals w_(i+1)."""
    ws = w.weights
    return tuple(i for i in range(1, len(ws) - 1) if ws[i - 1] == ws[i])


@dataclass(frozen=True)
class Block:
    """Maximal run of consecutive integers inside a delta set (ends inclusive)."""

    start: int
    end: int

    @property
    def size(self) -> int:
        return self.end - self.start + 1

    @property
    def type_(self) -> int:
        """Run length mod 3; type 0 runs never take part in gluing."""
        return self.size % 3

    def elements(self) -> tuple[int, ...]:
        return tuple(range(self.start, self.end + 1))


def _as_sorted_set(indices: Iterable[int]) -> tuple[int, ...]:
    out = tuple(sorted(set(int(i) for i in indices)))
    if out and out[0] < 1:
        raise ValueError(f"delta indices must be positive, got {out}")
    return out


def maximal_blocks(indices: Iterable[int]) -> tuple[Block, ...]:
    """Decompose a set of positive integers into maximal consecutive runs."""
    idx = _as_sorted_set(indices)
    blocks: list[Block] = []
    for i in idx:
        if blocks and i == blocks[-1].end + 1:
            blocks[-1] = Block(blocks[-1].start, i)
        else:
            blocks.append(Block(i, i))
    return tuple(blocks)


def gluable(left: Block, right: Block) -> bool:
    """Whether two adjacent runs chain: gap exactly 2, neither of type 0."""
    return left.type_ != 0 and right.type_ != 0 and right.start - left.end == 2


@dataclass(frozen=True)
class ExtendedBlock:
    """Maximal chain of pairwise-glued runs (a type 0 run always stands alone)."""

    blocks: tuple[Block, ...]

    @property
    def type1_count(self) -> int:
        return sum(1 for b in self.blocks if b.type_ == 1)

    @property
    def type2_count(self) -> int:
        return sum(1 for b in self.blocks if b.type_ == 2)

    @property
    def parity(self) -> int:
        """Leftover type 1 run after pairing them up inside the chain."""
        return self.type1_count % 2


def extended_blocks(blocks: Sequence[Block]) -> tuple[ExtendedBlock, ...]:
    """Group runs into maximal chains under the gluing relation."""
    groups: list[ExtendedBlock] = []
    chain: list[Block] = []
    for b in blocks:
        if b.type_ == 0:
            if chain:
                groups.append(ExtendedBlock(tuple(chain)))
                chain = []
            groups.append(ExtendedBlock((b,)))
        elif chain and gluable(chain[-1], b):
            chain.append(b)
        else:
            if chain:
                groups.append(ExtendedBlock(tuple(chain)))
            chain = [b]
    if chain:
        groups.append(ExtendedBlock(tuple(chain)))
    return tuple(groups)


def block_counts(indices: Iterable[int]) -> tuple[int, int, int, int]:
    """Counts (a, b, c, k) with a + 2b + 3c = |delta| and k = a + b + c.

    a counts unpaired type 1 runs per chain, b counts type 2 runs plus pairs
    of type 1 runs, and c absorbs the rest in triples.
    """
    idx = _as_sorted_set(indices)
    groups = extended_blocks(maximal_blocks(idx))
    a = sum(g.parity for g in groups)
    b = sum(g.type2_count + (g.type1_count - g.parity) // 2 for g in groups)
    rest = len(idx) - a - 2 * b
    if rest < 0 or rest % 3:
        raise RuntimeError(f"block counts failed for {idx}: a={a}, b={b}")
    c = rest // 3
    return a, b, c, a + b + c


def piecewise_depth(indices: Iterable[int], t: int) -> int:
    """The four-branch depth value d(delta, t) for the t-th power.

    Starts at k+1 for t = 1, steps down by 1, then by 1 every 2, then by 1
    every 3, and settles at 1 from t = |delta| + 1 on.  The empty set gives 1
    for every t.
    """
    if t < 1:
        raise ValueError("power t must be positive")
    idx = _as_sorted_set(indices)
    a, b, _, k = block_counts(idx)
    if t > len(idx):
        return 1
    if t <= a:
        return k - t + 2
    if t <= a + 2 * b:
        return k + 1 - (t + a - 1) // 2
    return k + 1 - (t + 2 * a + b - 1) // 3


def depth_formula(w: WeightVector, t: int) -> int:
    """Depth of S/I^t for the path edge ideal, straight from the weights.

    Covers the degenerate cases for free: n <= 2 and strictly increasing
    weights both yield an empty delta set, hence depth 1 for every power.
    """
    return piecewise_depth(delta_set(w), t)


def _partition_rec(indices: frozenset[int]) -> tuple[set[int], set[int]]:
    blocks = maximal_blocks(indices)
    if not blocks:
        return set(), set()
    head = blocks[0]
    rest = {i for b in blocks[1:] for i in b.elements()}
    if head.type_ in (0, 2):
        part_a, part_b = _partition_rec(frozenset(rest))
        if head.type_ == 2:
            part_b |= {head.end - 1, head.end}
        return part_a, part_b
    if len(blocks) == 1 or not gluable(head, blocks[1]):
        part_a, part_b = _partition_rec(frozenset(rest))
        part_a.add(head.end)
        return part_a, part_b
    glue_point = blocks[1].start
    part_a, part_b = _partition_rec(frozenset(rest - {glue_point}))
    part_b |= {head.end, glue_point}
    return part_a, part_b


def abc_partition(
    indices: Iterable[int],
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """Split delta into classes (A, B, C) of sizes (a, 2b, 3c).

    Processing runs left to right: a type 2 run donates its last two
    elements to B, a type 1 run donates its last element to A unless it glues
    onto the next run, in which case its last element and the next run's
    first element go to B and that first element is deleted before recursing.
    Whatever lands in neither class is C.
    """
    idx = _as_sorted_set(indices)
    part_a, part_b = _partition_rec(frozenset(idx))
    part_c = set(idx) - part_a - part_b
    return tuple(sorted(part_a)), tuple(sorted(part_b)), tuple(sorted(part_c))


def mu_labels(indices: Iterable[int]) -> tuple[int, ...]:
    """Label order mu: A descending, then B descending, then C descending."""
    part_a, part_b, part_c = abc_partition(indices)
    return tuple(reversed(part_a)) + tuple(reversed(part_b)) + tuple(reversed(part_c))


@dataclass(frozen=True)
class DeltaProfile:
    """Everything the depth formula extracts from one delta set."""

    delta: tuple[int, ...]
    blocks: tuple[Block, ...]
    extended: tuple[ExtendedBlock, ...]
    a: int
    b: int
    c: int
    k: int
    part_a: tuple[int, ...]
    part_b: tuple[int, ...]
    part_c: tuple[int, ...]
    mu: tuple[int, ...]

    @classmethod
    def from_delta(cls, indices: Iterable[int]) -> "DeltaProfile":
        idx = _as_sorted_set(indices)
        blocks = maximal_blocks(idx)
        a, b, c, k = block_counts(idx)
        part_a, part_b, part_c = abc_partition(idx)
        # the partition sizes are determined independently of the counts;
        # they must agree or the decomposition is wrong
        if (len(part_a), len(part_b), len(part_c)) != (a, 2 * b, 3 * c):
            raise RuntimeError(
                f"partition sizes {len(part_a)}/{len(part_b)}/{len(part_c)} "
                f"disagree with counts a={a}, b={b}, c={c} for {idx}"
            )
        return cls(
            delta=idx,
            blocks=blocks,
            extended=extended_blocks(blocks),
            a=a,
            b=b,
            c=c,
            k=k,
            part_a=part_a,
            part_b=part_b,
            part_c=part_c,
            mu=mu_labels(idx),
        )

    @classmethod
    def from_weights(cls, w: WeightVector) -> "DeltaProfile":
        return cls.from_delta(delta_set(w))

    def depth_sequence(self) -> tuple[int, ...]:
        """d(delta, t) for t = 1 .. |delta| + 1; the value stays 1 afterwards."""
        return tuple(piecewise_depth(self.delta, t) for t in range(1, len(self.delta) + 2))

    def to_dict(self) -> dict:
        return {
            "delta": list(self.delta),
            "blocks": [
                {"start": b.start, "end": b.end, "type": b.type_} for b in self.blocks
            ],
            "extended": [
                {
                    "blocks": [[b.start, b.end] for b in g.blocks],
                    "type1": g.type1_count,
                    "type2": g.type2_count,
                    "parity": g.parity,
                }
                for g in self.extended
            ],
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "k": self.k,
            "A": list(self.part_a),
            "B": list(self.part_b),
            "C": list(self.part_c),
            "mu": list(self.mu),
        }


def depth_drop_bounds(
    indices: Iterable[int], t: int
) -> tuple[bool | None, bool | None, bool | None]:
    """Three testable inequalities comparing d on delta against trimmed sets.

    With m = min(delta):
      first:  d(delta, t) <= min(d(delta - {m}, t-1), d(delta - {m}, t) + 1),
              checked for t >= 2 only since d is undefined at t = 0;
      second: d(delta, t) <= d(delta restricted to >= 3, t) + 1, and
      third:  d(delta, t) <= d(delta restricted to >= 4, t) + 1,
              both checked only when 1 is in delta.
    Entries are None where the precondition fails.
    """
    idx = _as_sorted_set(indices)
    if not idx:
        raise ValueError("delta must be nonempty")
    if t < 1:
        raise ValueError("power t must be positive")
    val = piecewise_depth(idx, t)
    first: bool | None = None
    if t >= 2:
        trimmed = idx[1:]
        first = val <= min(
            piecewise_depth(trimmed, t - 1), piecewise_depth(trimmed, t) + 1
        )
    second: bool | None = None
    third: bool | None = None
    if 1 in idx:
        second = val <= piecewise_depth([i for i in idx if i >= 3], t) + 1
        third = val <= piecewise_depth([i for i in idx if i >= 4], t) + 1
    return first, second, third
