"""Exact depth of S/I for an arbitrary monomial ideal, from first principles.

depth(S/I) = nvars - pd(S/I), and the projective dimension is the largest
homological index carrying a nonzero multigraded Betti number.  Betti numbers
are read off one multidegree at a time from the matching strand of the Koszul
complex on all variables: in homological degree i the strand has one basis
element per i-subset T of the support of the multidegree a such that
x^(a - e_T) lies outside I, with the usual signed boundary map.  Nonzero
strands only occur at least common multiples of generator subsets, so the
candidate multidegrees form the lcm closure of the generators.

Two observations keep this fast.  A subset T indexes a valid basis element
exactly when T meets the critical set {j : g_j = a_j} of every generator g
dividing x^a, so the strand is determined by that family of critical sets up
to renaming variables; homology is memoised on the renamed family.  And when
the critical family splits into groups on disjoint variables, the strand is
the tensor product of the group subcomplexes, so its homology is the
convolution of the group homologies.  Ranks are computed exactly over the
rationals by fraction-free elimination on Python integers; a word-sized
prime field backend is available as a faster spot-check.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .monomials import Monomial, MonomialIdeal

__all__ = [
    "BudgetExceeded",
    "InvalidIdeal",
    "DepthReport",
    "lcm_closure",
    "koszul_homology_dims",
    "depth_oracle",
    "DEFAULT_DEGREE_BUDGET",
    "DEFAULT_BASIS_BUDGET",
]

DEFAULT_DEGREE_BUDGET = 2_000_000
DEFAULT_BASIS_BUDGET = 10_000_000
_PRIME = 2_147_483_647
_INT64_SAFE = 2**62


class BudgetExceeded(RuntimeError):
    """A closure or strand enumeration outgrew its configured budget."""


class InvalidIdeal(ValueError):
    """The zero and unit ideals are excluded from depth reports."""


@dataclass
class DepthReport:
    """Result of one oracle run, JSON-friendly via to_dict."""

    nvars: int
    num_gens: int
    depth: int
    pd: int
    betti_support: tuple[tuple[int, int], ...]
    degrees_examined: int
    basis_elements: int
    elapsed_ms: float
    backend: str
    weights: tuple[int, ...] | None = None
    t: int | None = None

    def to_dict(self, include_timing: bool = True) -> dict:
        out = {
            "n_vars": self.nvars,
            "num_gens": self.num_gens,
            "depth": self.depth,
            "pd": self.pd,
            "betti_support": [list(p) for p in self.betti_support],
            "degrees_examined": self.degrees_examined,
            "backend": self.backend,
        }
        if include_timing:
            out["elapsed_ms"] = self.elapsed_ms
        if self.weights is not None:
            out["weights"] = list(self.weights)
        if self.t is not None:
            out["t"] = self.t
        return out


def _rank_exact(rows: list[list[int]]) -> int:
    """Rank over the rationals by fraction-free (Bareiss) elimination."""
    m = len(rows)
    if m == 0 or not rows[0]:
        return 0
    a = [row[:] for row in rows]
    ncols = len(a[0])
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        lead = a[r][c]
        for i in range(r + 1, m):
            # every row below is rescaled, even with a zero leading entry,
            # to keep the entries equal to minors and the division exact
            coef = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c + 1, ncols):
                row_i[j] = (lead * row_i[j] - coef * row_r[j]) // prev
            row_i[c] = 0
        prev = lead
        r += 1
        if r == m:
            break
    return r


def _rank_modp(rows: list[list[int]], p: int = _PRIME) -> int:
    """Rank over the prime field F_p by straightforward elimination."""
    m = len(rows)
    if m == 0 or not rows[0]:
        return 0
    a = [[x % p for x in row] for row in rows]
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, m) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], p - 2, p)
        row_r = a[r]
        for i in range(r + 1, m):
            coef = a[i][c]
            if coef:
                mult = coef * inv % p
                row_i = a[i]
                for j in range(c, ncols):
                    row_i[j] = (row_i[j] - mult * row_r[j]) % p
        r += 1
        if r == m:
            break
    return r


# homology of one mask-family subcomplex, keyed by the renamed family and the
# rank backend; values are (homology dims, number of valid subsets)
_COMPLEX_CACHE: dict[tuple[int, tuple[int, ...], str], tuple[tuple[int, ...], int]] = {}


def _mask_complex_homology(
    k: int, masks: tuple[int, ...], backend: str
) -> tuple[tuple[int, ...], int]:
    """Homology dims of the subcomplex of the k-Koszul complex on subsets
    hitting every mask, plus the number of such subsets."""
    key = (k, masks, backend)
    hit = _COMPLEX_CACHE.get(key)
    if hit is not None:
        return hit
    rank = _rank_exact if backend == "exact" else _rank_modp
    by_size: list[list[int]] = [[] for _ in range(k + 1)]
    for subset in range(1 << k):
        for mask in masks:
            if not subset & mask:
                break
        else:
            by_size[subset.bit_count()].append(subset)
    counts = [len(s) for s in by_size]
    ranks = [0] * (k + 2)
    for i in range(1, k + 1):
        cols = by_size[i]
        below = by_size[i - 1]
        if not cols or not below:
            continue
        row_pos = {s: r for r, s in enumerate(below)}
        mat = [[0] * len(cols) for _ in below]
        for ci, subset in enumerate(cols):
            sign = 1
            rem = subset
            while rem:
                bit = rem & -rem
                target = subset ^ bit
                row = row_pos.get(target)
                if row is not None:
                    mat[row][ci] = sign
                sign = -sign
                rem ^= bit
        ranks[i] = rank(mat)
    dims = tuple(counts[i] - ranks[i] - ranks[i + 1] for i in range(k + 1))
    result = (dims, sum(counts))
    _COMPLEX_CACHE[key] = result
    return result


def _minimal_masks(masks: Iterable[int]) -> list[int]:
    """Drop masks that contain another mask; hitting constraints are kept."""
    ordered = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in ordered:
        if not any(m & keep == keep for keep in kept):
            kept.append(m)
    return kept


def _strand_homology(
    support_mask: int, masks: set[int], backend: str
) -> tuple[tuple[int, ...] | None, int]:
    """Homology dims of one multidegree strand, or None when it is exact.

    Returns (dims indexed by homological degree, basis elements counted),
    where dims is None for the two cheap exact cases: a generator whose
    critical set is empty, or a support variable in no critical set.
    """
    if 0 in masks:
        return None, 0
    union = 0
    for m in masks:
        union |= m
    if union != support_mask:
        return None, 0
    minimal = _minimal_masks(masks)
    # split the mask family into groups on disjoint variables
    verts = [j for j in range(support_mask.bit_length()) if support_mask >> j & 1]
    parent = {v: v for v in verts}

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for m in minimal:
        bits = [j for j in verts if m >> j & 1]
        for other in bits[1:]:
            ra, rb = find(bits[0]), find(other)
            if ra != rb:
                parent[rb] = ra
    comp_verts: dict[int, list[int]] = {}
    for v in verts:
        comp_verts.setdefault(find(v), []).append(v)
    comp_masks: dict[int, list[int]] = {root: [] for root in comp_verts}
    for m in minimal:
        low = m & -m
        comp_masks[find(low.bit_length() - 1)].append(m)
    total = (1,)
    basis = 0
    for root, vs in sorted(comp_verts.items()):
        vs.sort()
        pos = {v: i for i, v in enumerate(vs)}
        local = tuple(
            sorted(sum(1 << pos[j] for j in vs if m >> j & 1) for m in comp_masks[root])
        )
        dims, cnt = _mask_complex_homology(len(vs), local, backend)
        basis += cnt
        if not any(dims):
            return None, basis
        new = [0] * (len(total) + len(dims) - 1)
        for i, x in enumerate(total):
            if x:
                for j, y in enumerate(dims):
                    if y:
                        new[i + j] += x * y
        total = tuple(new)
    return total, basis


def lcm_closure(ideal: MonomialIdeal, budget: int = DEFAULT_DEGREE_BUDGET) -> list[tuple[int, ...]]:
    """All joins of generator subsets plus the zero degree, sorted.

    These are the only multidegrees where a strand of the Koszul complex can
    carry homology.  Raises BudgetExceeded when the closure would outgrow
    the budget.
    """
    if ideal.is_zero or ideal.is_unit:
        raise InvalidIdeal("lcm closure needs a nonzero proper monomial ideal")
    nvars = ideal.nvars
    gens = [g.exponents for g in ideal.gens]
    if all(e < _INT64_SAFE for g in gens for e in g):
        # joins never exceed the per-variable maxima, so when every closure
        # point packs into one int64 the dedupe can run on scalar keys
        bits = max(1, max(e for g in gens for e in g).bit_length())
        if nvars * bits <= 62:
            return _lcm_closure_packed(nvars, gens, budget, bits)
        return _lcm_closure_np(nvars, gens, budget)
    return _lcm_closure_py(nvars, gens, budget)


def _lcm_closure_packed(
    nvars: int, gens: list[tuple[int, ...]], budget: int, bits: int
) -> list[tuple[int, ...]]:
    gmat = np.asarray(gens, dtype=np.int64)
    shifts = np.arange(nvars, dtype=np.int64) * bits
    weights = np.int64(1) << shifts
    mask = np.int64((1 << bits) - 1)
    seen = np.zeros(1, dtype=np.int64)
    frontier_keys = np.unique(gmat @ weights)
    step = max(1, 4_000_000 // max(1, len(gens) * nvars))
    while frontier_keys.size:
        seen = np.union1d(seen, frontier_keys)
        if seen.size > budget:
            raise BudgetExceeded(f"lcm closure exceeded {budget} multidegrees")
        frontier = (frontier_keys[:, None] >> shifts[None, :]) & mask
        parts = []
        for lo in range(0, len(frontier), step):
            blk = frontier[lo : lo + step]
            cand = np.maximum(blk[:, None, :], gmat[None, :, :])
            parts.append(cand.reshape(-1, nvars) @ weights)
        keys = np.unique(np.concatenate(parts))
        pos = np.clip(np.searchsorted(seen, keys), 0, seen.size - 1)
        frontier_keys = keys[seen[pos] != keys]
    rows = (seen[:, None] >> shifts[None, :]) & mask
    return sorted(tuple(r) for r in rows.tolist())


def _lcm_closure_np(
    nvars: int, gens: list[tuple[int, ...]], budget: int
) -> list[tuple[int, ...]]:
    gmat = np.asarray(gens, dtype=np.int64)
    seen: set[bytes] = {np.zeros(nvars, dtype=np.int64).tobytes()}
    rows: list[np.ndarray] = [np.zeros((1, nvars), dtype=np.int64)]
    frontier = np.unique(gmat, axis=0)
    step = max(1, 2_000_000 // (len(gmat) * nvars))
    while len(frontier):
        fresh = [r for r in frontier if r.tobytes() not in seen]
        if not fresh:
            break
        frontier = np.asarray(fresh, dtype=np.int64)
        for r in frontier:
            seen.add(r.tobytes())
        if len(seen) > budget:
            raise BudgetExceeded(
                f"lcm closure exceeded {budget} multidegrees"
            )
        rows.append(frontier)
        nxt: set[bytes] = set()
        chunks: list[np.ndarray] = []
        for lo in range(0, len(frontier), step):
            blk = frontier[lo : lo + step]
            cand = np.maximum(blk[:, None, :], gmat[None, :, :]).reshape(-1, nvars)
            cand = np.unique(cand, axis=0)
            keep = [r for r in cand if r.tobytes() not in seen and r.tobytes() not in nxt]
            for r in keep:
                nxt.add(r.tobytes())
            if keep:
                chunks.append(np.asarray(keep, dtype=np.int64))
        frontier = (
            np.unique(np.vstack(chunks), axis=0)
            if chunks
            else np.zeros((0, nvars), dtype=np.int64)
        )
    out = np.vstack(rows)
    return sorted(tuple(r) for r in out.tolist())


def _lcm_closure_py(
    nvars: int, gens: list[tuple[int, ...]], budget: int
) -> list[tuple[int, ...]]:
    zero = (0,) * nvars
    seen: set[tuple[int, ...]] = {zero}
    frontier = {tuple(g) for g in gens}
    while frontier:
        frontier -= seen
        seen |= frontier
        if len(seen) > budget:
            raise BudgetExceeded(f"lcm closure exceeded {budget} multidegrees")
        nxt = set()
        for v in frontier:
            for g in gens:
                j = tuple(max(a, b) for a, b in zip(v, g))
                if j not in seen:
                    nxt.add(j)
        frontier = nxt
    return sorted(seen)


def _critical_masks(
    degree: tuple[int, ...], gens: list[tuple[int, ...]]
) -> tuple[int, set[int]] | None:
    """Support mask and critical-set masks of the generators dividing x^degree.

    Returns None when no generator divides, which happens only at degree 0
    here; that strand contributes the single Betti number at index 0.
    """
    masks: set[int] = set()
    found = False
    for g in gens:
        if all(a <= b for a, b in zip(g, degree)):
            found = True
            mask = 0
            for j, (a, b) in enumerate(zip(g, degree)):
                if b > 0 and a == b:
                    mask |= 1 << j
            masks.add(mask)
    if not found:
        return None
    support = 0
    for j, b in enumerate(degree):
        if b > 0:
            support |= 1 << j
    return support, masks


def koszul_homology_dims(
    ideal: MonomialIdeal, degree: Iterable[int], backend: str = "exact"
) -> list[int]:
    """Dimensions of the Koszul strand homology of S/I at one multidegree.

    Entry i is the Betti number of S/I in homological degree i and the given
    multidegree; the list has nvars + 1 entries.
    """
    a = tuple(int(x) for x in degree)
    if len(a) != ideal.nvars:
        raise ValueError(f"degree length {len(a)} does not match {ideal.nvars}")
    if any(x < 0 for x in a):
        raise ValueError("multidegrees are nonnegative")
    out = [0] * (ideal.nvars + 1)
    gens = [g.exponents for g in ideal.gens]
    info = _critical_masks(a, gens)
    if info is None:
        if not any(a):
            out[0] = 1
        return out
    support, masks = info
    dims, _ = _strand_homology(support, masks, backend)
    if dims:
        for i, d in enumerate(dims):
            out[i] = d
    return out


def depth_oracle(
    ideal: MonomialIdeal,
    backend: str = "exact",
    degree_budget: int = DEFAULT_DEGREE_BUDGET,
    basis_budget: int = DEFAULT_BASIS_BUDGET,
    weights: tuple[int, ...] | None = None,
    t: int | None = None,
) -> DepthReport:
    """Depth of S/I by scanning Koszul strand homology over the lcm closure."""
    if backend not in ("exact", "modp"):
        raise ValueError(f"unknown backend {backend!r}")
    if ideal.is_zero or ideal.is_unit:
        raise InvalidIdeal("depth oracle needs a nonzero proper monomial ideal")
    started = time.perf_counter()
    closure = lcm_closure(ideal, degree_budget)
    nvars = ideal.nvars
    gens = [g.exponents for g in ideal.gens]
    betti: Counter[int] = Counter()
    pd = 0
    basis_used = 0
    numpy_ok = nvars <= 62 and all(
        e < _INT64_SAFE for row in closure for e in row
    )
    if numpy_ok:
        # strands with the same support and critical-mask family have the
        # same homology, so group them by that signature and compute once
        sig_cache: dict[
            tuple[int, tuple[int, ...]], tuple[tuple[int, ...] | None, int]
        ] = {}
        amat = np.asarray(closure, dtype=np.int64)
        gmat = np.asarray(gens, dtype=np.int64)
        pow2 = 1 << np.arange(nvars, dtype=np.int64)
        chunk = max(1, 4_000_000 // max(1, len(gens) * nvars))
        for lo in range(0, len(amat), chunk):
            blk = amat[lo : lo + chunk]
            le = (gmat[None, :, :] <= blk[:, None, :]).all(-1)
            eq = (gmat[None, :, :] == blk[:, None, :]) & (blk[:, None, :] > 0)
            eq_masks = eq.astype(np.int64) @ pow2
            sup_masks = (blk > 0).astype(np.int64) @ pow2
            strand_idx, gen_idx = np.nonzero(le)
            masks_flat = eq_masks[strand_idx, gen_idx]
            order = np.lexsort((masks_flat, strand_idx))
            strand_idx, masks_flat = strand_idx[order], masks_flat[order]
            if len(strand_idx):
                keep = np.ones(len(strand_idx), dtype=bool)
                keep[1:] = (strand_idx[1:] != strand_idx[:-1]) | (
                    masks_flat[1:] != masks_flat[:-1]
                )
                strand_idx, masks_flat = strand_idx[keep], masks_flat[keep]
                starts = np.flatnonzero(
                    np.r_[True, strand_idx[1:] != strand_idx[:-1]]
                )
                ends = np.r_[starts[1:], len(strand_idx)]
            else:
                starts = ends = np.zeros(0, dtype=np.int64)
            covered = np.zeros(len(blk), dtype=bool)
            for a, b in zip(starts, ends):
                row = int(strand_idx[a])
                covered[row] = True
                sig = (int(sup_masks[row]), tuple(masks_flat[a:b].tolist()))
                res = sig_cache.get(sig)
                if res is None:
                    res = _strand_homology(sig[0], set(sig[1]), backend)
                    sig_cache[sig] = res
                dims, cnt = res
                basis_used += cnt
                if basis_used > basis_budget:
                    raise BudgetExceeded(
                        f"strand basis exceeded {basis_budget} elements"
                    )
                if dims:
                    for i, d in enumerate(dims):
                        if d > 0:
                            betti[i] += 1
                            if i > pd:
                                pd = i
            # rows with no dividing generator: only the zero degree
            for _ in np.flatnonzero(~covered):
                betti[0] += 1
                basis_used += 1
    else:
        for a in closure:
            info = _critical_masks(a, gens)
            if info is None:
                betti[0] += 1
                basis_used += 1
                continue
            support, masks = info
            dims, cnt = _strand_homology(support, masks, backend)
            basis_used += cnt
            if basis_used > basis_budget:
                raise BudgetExceeded(f"strand basis exceeded {basis_budget} elements")
            if dims:
                for i, d in enumerate(dims):
                    if d > 0:
                        betti[i] += 1
                        if i > pd:
                            pd = i
    elapsed = (time.perf_counter() - started) * 1000.0
    return DepthReport(
        nvars=nvars,
        num_gens=ideal.num_gens,
        depth=nvars - pd,
        pd=pd,
        betti_support=tuple(sorted(betti.items())),
        degrees_examined=len(closure),
        basis_elements=basis_used,
        elapsed_ms=elapsed,
        backend=backend,
        weights=weights,
        t=t,
    )
