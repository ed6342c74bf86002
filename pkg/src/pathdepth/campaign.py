"""Seeded verification campaigns comparing the depth formula with the oracle.

A campaign enumerates or samples weight vectors, evaluates the closed-form
depth for a range of powers, optionally confirms each value with the Koszul
homology oracle, and checks the witness and colon identities where their
preconditions hold.  Records are emitted as JSON lines (one per weight
vector and power) after a config echo line, together with a one-row CSV
summary.  All sampling is driven by a single seeded generator and timing
fields are off by default, so a (config, seed) pair reproduces its report
byte for byte.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass
from itertools import combinations_with_replacement
from typing import Iterator

from .monomials import MonomialIdeal
from .oracle import (
    BudgetExceeded,
    DEFAULT_BASIS_BUDGET,
    DEFAULT_DEGREE_BUDGET,
    depth_oracle,
)
from .weighted_paths import WeightVector, delta_set, depth_formula, path_ideal
from .witnesses import (
    WitnessMismatch,
    colon_by_g,
    colon_by_rho,
    colon_x2_identity,
    first_power_witness,
    leaf_colon_identity,
    padded_witness,
)

__all__ = [
    "CampaignConfig",
    "CampaignResult",
    "sample_weights",
    "enumerate_weights",
    "run_campaign",
]

_MODES = ("formula", "oracle", "witness", "colon-check", "verify")


@dataclass
class CampaignConfig:
    """Everything that determines a campaign, and hence its report."""

    mode: str = "verify"
    n_min: int = 3
    n_max: int = 6
    w_max: int = 3
    t_max: int | None = None
    samples: int | None = None
    exhaustive: bool = False
    seed: int = 0
    degree_budget: int = DEFAULT_DEGREE_BUDGET
    basis_budget: int = DEFAULT_BASIS_BUDGET
    oracle_max_vars: int = 9
    backend: str = "exact"
    out: str | None = None
    include_timings: bool = False
    corrupt_formula: bool = False

    def __post_init__(self) -> None:
        if self.mode not in _MODES:
            raise ValueError(f"mode must be one of {_MODES}, got {self.mode!r}")
        if self.n_min < 1 or self.n_max < self.n_min:
            raise ValueError("need 1 <= n_min <= n_max")
        if self.w_max < 1:
            raise ValueError("w_max must be positive")
        if not self.exhaustive and self.samples is None:
            self.samples = 100

    def to_dict(self) -> dict:
        out = asdict(self)
        out.pop("out")
        return out


@dataclass
class CampaignResult:
    config: CampaignConfig
    records: list[dict]
    instances: int
    matches: int
    mismatches: int
    skips: int
    exit_status: int

    def summary_row(self) -> dict:
        return {
            "instances": self.instances,
            "records": len(self.records),
            "matches": self.matches,
            "mismatches": self.mismatches,
            "skips": self.skips,
            "exit_status": self.exit_status,
        }


def _bounded_geometric(rng: random.Random, lo: int, hi: int) -> int:
    """Geometric-like value in [lo, hi]: halving mass on each step up."""
    value = lo
    while value < hi and rng.random() < 0.5:
        value += 1
    return value


def sample_weights(
    rng: random.Random, n_min: int, n_max: int, w_max: int
) -> WeightVector:
    """One random nondecreasing weight vector.

    The edge count is uniform, the first weight and every increment are
    bounded geometric, so repeated weights (nonempty delta sets) are common.
    """
    n = rng.randint(n_min, n_max)
    current = _bounded_geometric(rng, 1, w_max)
    weights = [current]
    for _ in range(n - 1):
        current = _bounded_geometric(rng, current, w_max)
        weights.append(current)
    return WeightVector(tuple(weights))


def enumerate_weights(n_min: int, n_max: int, w_max: int) -> Iterator[WeightVector]:
    """All nondecreasing weight vectors, ordered by length then entries."""
    for n in range(n_min, n_max + 1):
        for combo in combinations_with_replacement(range(1, w_max + 1), n):
            yield WeightVector(combo)


def _instances(cfg: CampaignConfig) -> list[WeightVector]:
    if cfg.exhaustive:
        return list(enumerate_weights(cfg.n_min, cfg.n_max, cfg.w_max))
    rng = random.Random(cfg.seed)
    return [
        sample_weights(rng, cfg.n_min, cfg.n_max, cfg.w_max)
        for _ in range(cfg.samples or 0)
    ]


class _PowerCache:
    """Powers of one path ideal, computed incrementally on demand."""

    def __init__(self, ideal: MonomialIdeal):
        self._powers = [MonomialIdeal.unit(ideal.nvars), ideal]

    def get(self, t: int) -> MonomialIdeal:
        while len(self._powers) <= t:
            self._powers.append(self._powers[-1] * self._powers[1])
        return self._powers[t]


def _check_one(
    cfg: CampaignConfig, seq: int, w: WeightVector, t: int, powers: _PowerCache
) -> dict:
    started = time.perf_counter()
    delta = delta_set(w)
    record: dict = {
        "seq": seq,
        "weights": str(w),
        "n": w.n,
        "delta": list(delta),
        "t": t,
        "skips": [],
        "mismatch": False,
    }
    formula = depth_formula(w, t)
    if cfg.corrupt_formula:
        formula += 1
    record["formula"] = formula

    want_oracle = cfg.mode in ("oracle", "verify")
    want_witness = cfg.mode in ("witness", "verify")
    want_colon = cfg.mode in ("colon-check", "verify")

    if want_oracle:
        if w.nvars > cfg.oracle_max_vars:
            record["oracle"] = None
            record["skips"].append("oracle_size")
        else:
            try:
                report = depth_oracle(
                    powers.get(t),
                    backend=cfg.backend,
                    degree_budget=cfg.degree_budget,
                    basis_budget=cfg.basis_budget,
                )
                record["oracle"] = report.depth
                if report.depth != formula:
                    record["mismatch"] = True
            except BudgetExceeded as exc:
                record["oracle"] = None
                record["skips"].append(f"oracle_budget: {exc}")

    if want_witness and 2 <= t <= len(delta) + 1:
        power = powers.get(t)
        wit = padded_witness(w, t)
        ok_g = colon_by_g(w, t) == power.colon(wit.g)
        ok_rho = colon_by_rho(w, t) == power.colon(wit.rho)
        ok_out = wit.rho not in power
        record["colon_g"] = ok_g
        record["colon_rho"] = ok_rho
        record["rho_outside_power"] = ok_out
        if not (ok_g and ok_rho and ok_out):
            record["mismatch"] = True

    if want_colon:
        if t >= 2:
            ok = leaf_colon_identity(w, t, "first")
            record["leaf_first"] = ok
            record["mismatch"] |= not ok
            if w.n == 1 or w.weights[-1] == w.weights[-2]:
                ok = leaf_colon_identity(w, t, "last")
                record["leaf_last"] = ok
                record["mismatch"] |= not ok
        if w.n >= 2 and w.weights[0] == w.weights[1]:
            ok = colon_x2_identity(w, t)
            record["colon_x2"] = ok
            record["mismatch"] |= not ok
        if t == 1 and delta:
            try:
                first_power_witness(w)
                record["first_power_witness"] = True
            except WitnessMismatch:
                record["first_power_witness"] = False
                record["mismatch"] = True

    if cfg.include_timings:
        record["elapsed_ms"] = round((time.perf_counter() - started) * 1000.0, 3)
    return record


def run_campaign(cfg: CampaignConfig) -> CampaignResult:
    """Run every check of the configured mode over the instance stream."""
    weight_vectors = _instances(cfg)
    records: list[dict] = []
    mismatches = 0
    matches = 0
    skips = 0
    seq = 0
    for w in weight_vectors:
        delta = delta_set(w)
        t_cap = len(delta) + 2
        if cfg.t_max is not None:
            t_cap = min(t_cap, cfg.t_max)
        powers = _PowerCache(path_ideal(w))
        for t in range(1, t_cap + 1):
            record = _check_one(cfg, seq, w, t, powers)
            records.append(record)
            seq += 1
            if record["mismatch"]:
                mismatches += 1
            else:
                matches += 1
            skips += len(record["skips"])
    result = CampaignResult(
        config=cfg,
        records=records,
        instances=len(weight_vectors),
        matches=matches,
        mismatches=mismatches,
        skips=skips,
        exit_status=0 if mismatches == 0 else 1,
    )
    if cfg.out:
        write_report(result, cfg.out)
    return result


def render_jsonl(result: CampaignResult) -> str:
    """Config echo line followed by one JSON line per record."""
    lines = [json.dumps({"config": result.config.to_dict()}, sort_keys=True)]
    for record in result.records:
        lines.append(json.dumps(record, sort_keys=True))
    return "\n".join(lines) + "\n"


def render_summary_csv(result: CampaignResult) -> str:
    row = result.summary_row()
    keys = list(row)
    return ",".join(keys) + "\n" + ",".join(str(row[k]) for k in keys) + "\n"


def write_report(result: CampaignResult, out_path: str) -> None:
    """Write records to out_path and the summary next to it (.summary.csv)."""
    with open(out_path, "w", encoding="utf-8") as fh:
        fh.write(render_jsonl(result))
    summary_path = out_path + ".summary.csv"
    with open(summary_path, "w", encoding="utf-8") as fh:
        fh.write(render_summary_csv(result))
