"""Exact arithmetic for monomials and monomial ideals in a fixed polynomial ring.

A monomial is an exponent vector over variables x1..xN.  A monomial ideal is
kept in canonical form: the unique minimal generating set, sorted
lexicographically by exponent vector.  Exponents are plain Python integers,
so nothing here overflows; the heavy set operations drop into numpy when the
exponents fit in 64-bit words and fall back to pure Python otherwise.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

__all__ = [
    "DimensionMismatch",
    "Monomial",
    "MonomialIdeal",
    "minimalize",
]

# exponents below this bound stay exact in int64 arrays, including pair sums
_INT64_SAFE = 2**62
_FACTOR_RE = re.compile(r"x(\d+)(?:\^(\d+))?$")


class DimensionMismatch(ValueError):
    """Operands live in polynomial rings with different variable counts."""


def _check_same_ring(a: "Monomial", b: "Monomial") -> None:
    if len(a.exponents) != len(b.exponents):
        raise DimensionMismatch(
            f"monomials in {len(a.exponents)} and {len(b.exponents)} variables"
        )


@dataclass(frozen=True)
class Monomial:
    """Exponent vector; position j holds the exponent of x_(j+1)."""

    exponents: tuple[int, ...]

    def __post_init__(self) -> None:
        exps = tuple(int(e) for e in self.exponents)
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def one(cls, nvars: int) -> "Monomial":
        return cls((0,) * nvars)

    @classmethod
    def from_powers(cls, nvars: int, powers: Mapping[int, int]) -> "Monomial":
        """Build from a mapping of 1-based variable index to exponent."""
        exps = [0] * nvars
        for var, exp in powers.items():
            if not 1 <= var <= nvars:
                raise ValueError(f"variable x{var} outside x1..x{nvars}")
            exps[var - 1] += exp
        return cls(tuple(exps))

    @classmethod
    def parse(cls, text: str, nvars: int) -> "Monomial":
        """Parse the textual form, e.g. "x1^2*x3"; "1" is the identity."""
        text = text.strip()
        if text == "1":
            return cls.one(nvars)
        powers: dict[int, int] = {}
        for part in text.split("*"):
            hit = _FACTOR_RE.match(part.strip())
            if hit is None:
                raise ValueError(f"cannot parse monomial factor {part!r}")
            var = int(hit.group(1))
            exp = int(hit.group(2) or 1)
            if exp < 1:
                raise ValueError(f"exponent must be positive in {part!r}")
            powers[var] = powers.get(var, 0) + exp
        return cls.from_powers(nvars, powers)

    @property
    def nvars(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_one(self) -> bool:
        return all(e == 0 for e in self.exponents)

    def exponent(self, var: int) -> int:
        """Exponent of the 1-based variable x_var."""
        return self.exponents[var - 1]

    def support(self) -> tuple[int, ...]:
        """Sorted 1-based indices of the variables that appear."""
        return tuple(j + 1 for j, e in enumerate(self.exponents) if e > 0)

    def divides(self, other: "Monomial") -> bool:
        _check_same_ring(self, other)
        return all(a <= b for a, b in zip(self.exponents, other.exponents))

    def lcm(self, other: "Monomial") -> "Monomial":
        _check_same_ring(self, other)
        return Monomial(tuple(max(a, b) for a, b in zip(self.exponents, other.exponents)))

    def gcd(self, other: "Monomial") -> "Monomial":
        _check_same_ring(self, other)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_same_ring(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def divide_exact(self, other: "Monomial") -> "Monomial":
        """Quotient self/other; raises if other does not divide self."""
        _check_same_ring(self, other)
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def as_json(self) -> list[int]:
        return list(self.exponents)

    def __str__(self) -> str:
        parts = []
        for j, e in enumerate(self.exponents):
            if e == 1:
                parts.append(f"x{j + 1}")
            elif e > 1:
                parts.append(f"x{j + 1}^{e}")
        return "*".join(parts) if parts else "1"


def _numpy_safe(rows: list[tuple[int, ...]]) -> bool:
    return all(e < _INT64_SAFE for row in rows for e in row)


def _minimal_rows_py(rows: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    ordered = sorted(rows, key=lambda r: (sum(r), r))
    kept: list[tuple[int, ...]] = []
    for row in ordered:
        if not any(all(k <= r for k, r in zip(old, row)) for old in kept):
            kept.append(row)
    return sorted(kept)


def _minimal_rows_np(rows: list[tuple[int, ...]]) -> list[tuple[int, ...]]:
    # distinct monomials of equal degree never divide one another, so only
    # strictly smaller degrees need checking against each degree slab
    arr = np.asarray(rows, dtype=np.int64)
    deg = arr.sum(axis=1)
    order = np.argsort(deg, kind="stable")
    arr, deg = arr[order], deg[order]
    kept: np.ndarray | None = None
    start = 0
    while start < len(arr):
        stop = start
        while stop < len(arr) and deg[stop] == deg[start]:
            stop += 1
        grp = arr[start:stop]
        if kept is not None:
            flags = np.ones(len(grp), dtype=bool)
            for lo in range(0, len(grp), 256):
                blk = grp[lo : lo + 256]
                dominated = (kept[None, :, :] <= blk[:, None, :]).all(-1).any(-1)
                flags[lo : lo + 256] = ~dominated
            grp = grp[flags]
        if len(grp):
            kept = grp if kept is None else np.vstack([kept, grp])
        start = stop
    if kept is None:
        return []
    return sorted(tuple(row) for row in kept.tolist())


def _minimal_rows(rows: Iterable[tuple[int, ...]]) -> list[tuple[int, ...]]:
    uniq = sorted(set(rows))
    if len(uniq) <= 1:
        return uniq
    if _numpy_safe(uniq):
        return _minimal_rows_np(uniq)
    return _minimal_rows_py(uniq)


def _pairwise_rows(
    left: list[tuple[int, ...]], right: list[tuple[int, ...]], op: str
) -> list[tuple[int, ...]]:
    """All componentwise sums ("add") or maxima ("max") of pairs, deduplicated."""
    if not left or not right:
        return []
    if _numpy_safe(left) and _numpy_safe(right):
        a = np.asarray(left, dtype=np.int64)
        b = np.asarray(right, dtype=np.int64)
        out: set[tuple[int, ...]] = set()
        step = max(1, 4_000_000 // (len(b) * a.shape[1]))
        for lo in range(0, len(a), step):
            blk = a[lo : lo + step]
            if op == "add":
                cand = blk[:, None, :] + b[None, :, :]
            else:
                cand = np.maximum(blk[:, None, :], b[None, :, :])
            cand = cand.reshape(-1, a.shape[1])
            out.update(tuple(row) for row in np.unique(cand, axis=0).tolist())
        return sorted(out)
    combine = (
        (lambda u, v: tuple(x + y for x, y in zip(u, v)))
        if op == "add"
        else (lambda u, v: tuple(max(x, y) for x, y in zip(u, v)))
    )
    return sorted({combine(u, v) for u in left for v in right})


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal, normalized to its unique minimal generating set.

    The zero ideal has no generators; the unit ideal is generated by 1.
    """

    nvars: int
    gens: tuple[Monomial, ...] = ()

    def __post_init__(self) -> None:
        for g in self.gens:
            if g.nvars != self.nvars:
                raise DimensionMismatch(
                    f"generator {g} does not live in {self.nvars} variables"
                )
        rows = _minimal_rows(g.exponents for g in self.gens)
        object.__setattr__(self, "gens", tuple(Monomial(r) for r in rows))

    @classmethod
    def zero(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, ())

    @classmethod
    def unit(cls, nvars: int) -> "MonomialIdeal":
        return cls(nvars, (Monomial.one(nvars),))

    @classmethod
    def from_exponents(
        cls, nvars: int, rows: Iterable[Iterable[int]]
    ) -> "MonomialIdeal":
        return cls(nvars, tuple(Monomial(tuple(r)) for r in rows))

    @classmethod
    def parse(cls, nvars: int, text: str) -> "MonomialIdeal":
        """Parse a comma-separated generator list, e.g. "x1*x2, x2^2"."""
        text = text.strip()
        if not text or text == "0":
            return cls.zero(nvars)
        gens = tuple(Monomial.parse(part, nvars) for part in text.split(","))
        return cls(nvars, gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return len(self.gens) == 1 and self.gens[0].is_one

    @property
    def num_gens(self) -> int:
        return len(self.gens)

    def __contains__(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.gens)

    def issubset(self, other: "MonomialIdeal") -> bool:
        return all(g in other for g in self.gens)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return self.issubset(other)

    def colon(self, f: Monomial) -> "MonomialIdeal":
        """Colon ideal (self : f), all monomials m with m*f in self."""
        if f.nvars != self.nvars:
            raise DimensionMismatch(f"{f} does not live in {self.nvars} variables")
        rows = [
            tuple(max(a - b, 0) for a, b in zip(g.exponents, f.exponents))
            for g in self.gens
        ]
        return MonomialIdeal.from_exponents(self.nvars, rows)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_ring(other)
        return MonomialIdeal(self.nvars, self.gens + other.gens)

    def __mul__(self, other: "MonomialIdeal | Monomial") -> "MonomialIdeal":
        if isinstance(other, Monomial):
            other = MonomialIdeal(self.nvars, (other,))
        self._check_ring(other)
        rows = _pairwise_rows(
            [g.exponents for g in self.gens],
            [g.exponents for g in other.gens],
            "add",
        )
        return MonomialIdeal.from_exponents(self.nvars, rows)

    __rmul__ = __mul__

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._check_ring(other)
        rows = _pairwise_rows(
            [g.exponents for g in self.gens],
            [g.exponents for g in other.gens],
            "max",
        )
        return MonomialIdeal.from_exponents(self.nvars, rows)

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return self.intersect(other)

    def __pow__(self, t: int) -> "MonomialIdeal":
        if t < 0:
            raise ValueError("ideal power requires a nonnegative exponent")
        if t == 0:
            return MonomialIdeal.unit(self.nvars)
        out = self
        for _ in range(t - 1):
            out = out * self
        return out

    def generator_lcm(self) -> Monomial:
        if self.is_zero:
            raise ValueError("the zero ideal has no generator lcm")
        out = self.gens[0]
        for g in self.gens[1:]:
            out = out.lcm(g)
        return out

    def to_strings(self) -> list[str]:
        return [str(g) for g in self.gens]

    def as_json(self) -> list[list[int]]:
        return [g.as_json() for g in self.gens]

    def __str__(self) -> str:
        return "(" + (", ".join(self.to_strings()) if self.gens else "0") + ")"

    def _check_ring(self, other: "MonomialIdeal") -> None:
        if other.nvars != self.nvars:
            raise DimensionMismatch(
                f"ideals in {self.nvars} and {other.nvars} variables"
            )


def minimalize(nvars: int, monomials: Iterable[Monomial]) -> MonomialIdeal:
    """Minimal generating set of the ideal generated by the given monomials."""
    return MonomialIdeal(nvars, tuple(monomials))
