"""Command line front end.

Subcommands:
  table        delta profile and the depth sequence for one weight vector
  formula      closed-form depth values for chosen powers
  oracle       independent Koszul-homology depth of I^t, compared to the formula
  witness      witness monomial rho_t and its colon ideal, predicted vs brute force
  colon-check  the remaining colon identities (leaf edges, x2 powers, first power)
  verify       a full campaign over many weight vectors, with JSONL/CSV reports

Exit codes: 0 success, 1 a mathematical comparison failed, 2 bad usage.
The PATHDEPTH_SEED environment variable overrides --seed when set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .campaign import CampaignConfig, render_summary_csv, run_campaign
from .oracle import BudgetExceeded, DEFAULT_BASIS_BUDGET, DEFAULT_DEGREE_BUDGET, depth_oracle
from .weighted_paths import (
    DeltaProfile,
    WeightVector,
    delta_set,
    depth_formula,
    path_ideal,
)
from .witnesses import (
    WitnessMismatch,
    colon_by_g,
    colon_x2_identity,
    first_power_witness,
    leaf_colon_identity,
    padded_witness,
    witness_report,
)

_SEED_ENV = "PATHDEPTH_SEED"


def _add_weights(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--weights", required=True, help="comma-separated edge weights, e.g. 1,1,2,2"
    )


def _parse_weights(text: str) -> WeightVector:
    try:
        return WeightVector.parse(text)
    except ValueError as exc:
        raise SystemExit(f"error: {exc}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathdepth",
        description="Depth of powers of edge ideals of increasing weighted paths.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_table = sub.add_parser("table", help="delta profile and depth sequence")
    _add_weights(p_table)
    p_table.add_argument("--format", choices=("text", "json"), default="text")

    p_formula = sub.add_parser("formula", help="closed-form depth values")
    _add_weights(p_formula)
    p_formula.add_argument("--t", type=int, help="single power")
    p_formula.add_argument("--t-max", type=int, help="powers 1..t_max")
    p_formula.add_argument("--format", choices=("text", "json"), default="text")

    p_oracle = sub.add_parser("oracle", help="Koszul-homology depth of one power")
    _add_weights(p_oracle)
    p_oracle.add_argument("--t", type=int, default=1)
    p_oracle.add_argument("--backend", choices=("exact", "modp"), default="exact")
    p_oracle.add_argument("--budget-degrees", type=int, default=DEFAULT_DEGREE_BUDGET)
    p_oracle.add_argument("--budget-basis", type=int, default=DEFAULT_BASIS_BUDGET)

    p_witness = sub.add_parser("witness", help="witness monomial and its colon ideal")
    _add_weights(p_witness)
    p_witness.add_argument("--t", type=int, required=True)

    p_colon = sub.add_parser("colon-check", help="leaf, x2 and first-power identities")
    _add_weights(p_colon)
    p_colon.add_argument("--t-max", type=int, help="check powers up to this bound")

    p_verify = sub.add_parser("verify", help="campaign over many weight vectors")
    p_verify.add_argument(
        "--mode",
        choices=("formula", "oracle", "witness", "colon-check", "verify"),
        default="verify",
    )
    p_verify.add_argument("--n-min", type=int, default=3)
    p_verify.add_argument("--n-max", type=int, default=6)
    p_verify.add_argument("--w-max", type=int, default=3)
    p_verify.add_argument("--t-max", type=int)
    p_verify.add_argument("--samples", type=int)
    p_verify.add_argument("--exhaustive", action="store_true")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--budget-degrees", type=int, default=DEFAULT_DEGREE_BUDGET)
    p_verify.add_argument("--budget-basis", type=int, default=DEFAULT_BASIS_BUDGET)
    p_verify.add_argument("--oracle-max-vars", type=int, default=9)
    p_verify.add_argument("--backend", choices=("exact", "modp"), default="exact")
    p_verify.add_argument("--out", help="write JSONL records here (+ .summary.csv)")
    p_verify.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p_verify.add_argument("--timings", action="store_true")
    p_verify.add_argument("--corrupt-formula", action="store_true", help=argparse.SUPPRESS)
    return parser


def _cmd_table(args: argparse.Namespace) -> int:
    w = _parse_weights(args.weights)
    profile = DeltaProfile.from_weights(w)
    depths = profile.depth_sequence()
    if args.format == "json":
        payload = profile.to_dict()
        payload["weights"] = str(w)
        payload["depths"] = list(depths)
        print(json.dumps(payload, sort_keys=True))
        return 0
    print(f"weights: {w}")
    print(f"n = {w.n} edges, {w.nvars} variables")
    print(f"delta: {{{', '.join(str(i) for i in profile.delta)}}}")
    blocks = " ".join(
        f"[{b.start}..{b.end}]:type{b.type_}" for b in profile.blocks
    )
    print(f"blocks: {blocks if blocks else '(none)'}")
    for g in profile.extended:
        run = " + ".join(f"[{b.start}..{b.end}]" for b in g.blocks)
        print(
            f"  chain {run} (type1 = {g.type1_count}, type2 = {g.type2_count},"
            f" parity = {g.parity})"
        )
    print(f"a = {profile.a}, b = {profile.b}, c = {profile.c}, k = {profile.k}")
    print(f"A = {set(profile.part_a) or '{}'}")
    print(f"B = {set(profile.part_b) or '{}'}")
    print(f"C = {set(profile.part_c) or '{}'}")
    print(f"mu = ({', '.join(str(i) for i in profile.mu)})")
    seq = " ".join(f"t={t}:{d}" for t, d in enumerate(depths, start=1))
    print(f"depth sequence: {seq}")
    print(f"depth = 1 for all t >= {len(profile.delta) + 1}")
    return 0


def _cmd_formula(args: argparse.Namespace) -> int:
    w = _parse_weights(args.weights)
    if args.t is not None and args.t_max is not None:
        print("error: --t and --t-max are mutually exclusive", file=sys.stderr)
        return 2
    if args.t is not None:
        powers = [args.t]
    else:
        t_max = args.t_max if args.t_max is not None else len(delta_set(w)) + 1
        powers = list(range(1, t_max + 1))
    values = {t: depth_formula(w, t) for t in powers}
    if args.format == "json":
        print(json.dumps({"weights": str(w), "depths": values}, sort_keys=True))
    else:
        for t in powers:
            print(f"t={t} depth={values[t]}")
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    w = _parse_weights(args.weights)
    if args.t < 1:
        print("error: --t must be positive", file=sys.stderr)
        return 2
    ideal = path_ideal(w) ** args.t
    try:
        report = depth_oracle(
            ideal,
            backend=args.backend,
            degree_budget=args.budget_degrees,
            basis_budget=args.budget_basis,
            weights=w.weights,
            t=args.t,
        )
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    payload = report.to_dict()
    payload["formula"] = depth_formula(w, args.t)
    payload["match"] = payload["formula"] == report.depth
    print(json.dumps(payload, sort_keys=True))
    return 0 if payload["match"] else 1


def _cmd_witness(args: argparse.Namespace) -> int:
    w = _parse_weights(args.weights)
    delta = delta_set(w)
    if args.t == 1:
        print(
            "error: t=1 is covered by the first-power witness; run colon-check",
            file=sys.stderr,
        )
        return 2
    if not 2 <= args.t <= len(delta) + 1:
        print(
            f"error: t must lie in 2..{len(delta) + 1} for delta {set(delta) or '{}'}",
            file=sys.stderr,
        )
        return 2
    report = witness_report(w, args.t)
    print(json.dumps(report, sort_keys=True))
    return 0 if report["match"] else 1


def _cmd_colon_check(args: argparse.Namespace) -> int:
    w = _parse_weights(args.weights)
    delta = delta_set(w)
    t_cap = args.t_max if args.t_max is not None else len(delta) + 2
    checks: dict[str, bool] = {}
    for t in range(2, t_cap + 1):
        checks[f"leaf_first_t{t}"] = leaf_colon_identity(w, t, "first")
        if w.n == 1 or w.weights[-1] == w.weights[-2]:
            checks[f"leaf_last_t{t}"] = leaf_colon_identity(w, t, "last")
    if w.n >= 2 and w.weights[0] == w.weights[1]:
        for t in range(1, t_cap + 1):
            checks[f"colon_x2_t{t}"] = colon_x2_identity(w, t)
    if delta:
        try:
            f, colon = first_power_witness(w)
            checks["first_power_witness"] = True
            extra = {"witness": str(f), "colon": colon.to_strings()}
        except WitnessMismatch:
            checks["first_power_witness"] = False
            extra = {}
        ideal = path_ideal(w)
        for t in range(2, min(t_cap, len(delta) + 1) + 1):
            wit = padded_witness(w, t)
            power = ideal**t
            checks[f"colon_g_t{t}"] = colon_by_g(w, t) == power.colon(wit.g)
    else:
        extra = {}
    payload = {"weights": str(w), "checks": checks, **extra}
    payload["all_hold"] = all(checks.values()) if checks else True
    print(json.dumps(payload, sort_keys=True))
    return 0 if payload["all_hold"] else 1


def _cmd_verify(args: argparse.Namespace) -> int:
    seed = args.seed
    env_seed = os.environ.get(_SEED_ENV)
    if env_seed:
        try:
            seed = int(env_seed)
        except ValueError:
            print(f"error: {_SEED_ENV}={env_seed!r} is not an integer", file=sys.stderr)
            return 2
    try:
        cfg = CampaignConfig(
            mode=args.mode,
            n_min=args.n_min,
            n_max=args.n_max,
            w_max=args.w_max,
            t_max=args.t_max,
            samples=args.samples,
            exhaustive=args.exhaustive,
            seed=seed,
            degree_budget=args.budget_degrees,
            basis_budget=args.budget_basis,
            oracle_max_vars=args.oracle_max_vars,
            backend=args.backend,
            out=args.out,
            include_timings=args.timings,
            corrupt_formula=args.corrupt_formula,
        )
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    result = run_campaign(cfg)
    row = result.summary_row()
    if args.format == "json":
        print(json.dumps(row, sort_keys=True))
    elif args.format == "csv":
        print(render_summary_csv(result), end="")
    else:
        print(
            f"instances={row['instances']} records={row['records']}"
            f" matches={row['matches']} mismatches={row['mismatches']}"
            f" skips={row['skips']}"
        )
        if cfg.out:
            print(f"records written to {cfg.out}")
    return result.exit_status


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "table": _cmd_table,
        "formula": _cmd_formula,
        "oracle": _cmd_oracle,
        "witness": _cmd_witness,
        "colon-check": _cmd_colon_check,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(exc.code, file=sys.stderr)
            return 2
        raise
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
