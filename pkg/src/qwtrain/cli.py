"""Command-line interface.

Subcommands cover the reproduction experiments: the line and lattice
walks, the complete-graph search trajectory, the measurement tables, and
the end-to-end training procedure.  Every command logs its effective
configuration and is deterministic for a fixed seed.

Exit codes: 0 success, 1 runtime failure (including schedule exhaustion),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from . import lackadaisical as lack
from . import search_space, trainer, walk_core
from ._backend import BACKEND

#: Measurement-table cells: square window extent -> marked counts to evaluate.
TABLE_CELLS = {
    512: (52, 5202, 19591),
    1024: (52, 5202, 118649),
    2048: (52, 5202, 485095),
}

#: Count-table axes of the pinned-fixture scan.
COUNT_DPS = (0.05, 0.005, 0.0005)
COUNT_EXTENTS = (512, 1024, 2048)


class UsageError(Exception):
    pass


def _log_config(command: str, effective: dict) -> None:
    print(json.dumps({"command": command, "backend": BACKEND, **effective}))


def _merge_config(args: argparse.Namespace, spec: dict) -> dict:
    """Resolve each option as CLI flag > config file > built-in default.

    `spec` maps option name -> (default, required); a None default with
    required=True means the option must come from the flag or the file.
    """
    file_values = {}
    if getattr(args, "config", None):
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                file_values = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config file {args.config}: {exc}")
        if not isinstance(file_values, dict):
            raise UsageError("config file must hold a JSON object")
        unknown = set(file_values) - set(spec)
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
    effective = {}
    for name, (default, required) in spec.items():
        value = getattr(args, name, None)
        if value is None:
            value = file_values.get(name, default)
        if value is None and required:
            raise UsageError(f"missing required option --{name.replace('_', '-')}")
        effective[name] = value
    return effective


def _as_schedule(value, kind) -> tuple:
    if isinstance(value, (int, float)):
        value = [value]
    return tuple(kind(v) for v in value)


def cmd_walk1d(args) -> int:
    cfg = _merge_config(args, {"steps": (None, True), "out": (None, True)})
    if cfg["steps"] < 0:
        raise ValueError("steps must be non-negative")
    _log_config("walk1d", cfg)
    state = walk_core.evolve(walk_core.symmetric_initial_1d(), cfg["steps"])
    walk_core.write_distribution_csv(walk_core.distribution(state), cfg["out"])
    print(f"wrote {cfg['out']}")
    return 0


def cmd_walk2d(args) -> int:
    cfg = _merge_config(args, {"steps": (None, True), "out": (None, True)})
    if cfg["steps"] < 0:
        raise ValueError("steps must be non-negative")
    _log_config("walk2d", cfg)
    state = walk_core.evolve(walk_core.symmetric_initial_2d(), cfg["steps"])
    walk_core.write_distribution_csv(walk_core.distribution(state), cfg["out"])
    print(f"wrote {cfg['out']}")
    return 0


def cmd_complete_walk(args) -> int:
    cfg = _merge_config(
        args,
        {
            "n": (None, True),
            "k": (None, True),
            "l": (1, False),
            "tmax": (None, True),
            "out": (None, True),
        },
    )
    _log_config("complete-walk", cfg)
    params = lack.GraphParams(n=cfg["n"], k=cfg["k"], loops=cfg["l"])
    if cfg["tmax"] < 0:
        raise ValueError("tmax must be non-negative")
    rows = lack.success_trajectory(params, cfg["tmax"])
    lack.write_trajectory_csv(rows, cfg["out"])
    t_opt = lack.optimal_steps(params)
    state = lack.evolve_reduced(lack.initial_reduced_state(params), t_opt)
    probs = state.probabilities()
    print(f"optimal steps: {t_opt}")
    print(
        "probabilities at that step: "
        + ", ".join(f"p_{c}={p:.6f}" for c, p in zip(lack.CLASSES, probs))
    )
    print(f"success probability: {lack.success_probability(state):.6f}")
    print(f"wrote {cfg['out']}")
    return 0


def cmd_tables(args) -> int:
    cfg = _merge_config(
        args,
        {
            "out_dir": (None, True),
            "seed": (trainer.DEFAULT_SEED, False),
            "margin": (0.5, False),
        },
    )
    _log_config("tables", cfg)
    os.makedirs(cfg["out_dir"], exist_ok=True)
    for extent, ks in TABLE_CELLS.items():
        path = os.path.join(cfg["out_dir"], f"measurements_{extent}.csv")
        with open(path, "w", encoding="utf-8") as fh:
            fh.write("n,k,steps,p_aa,p_ab,p_ba,p_bb,p_success\n")
            for k in ks:
                params = lack.GraphParams(n=extent * extent, k=k)
                t_opt = lack.optimal_steps(params)
                state = lack.evolve_reduced(lack.initial_reduced_state(params), t_opt)
                p = state.probabilities()
                fh.write(
                    f"{params.n},{k},{t_opt},"
                    f"{p[0]:.17g},{p[1]:.17g},{p[2]:.17g},{p[3]:.17g},"
                    f"{p[0] + p[1]:.17g}\n"
                )
        print(f"wrote {path}")
    from .mlp import generate_fixed_weights

    fixed = generate_fixed_weights(cfg["seed"])
    rows = search_space.solution_count_table(
        COUNT_EXTENTS, COUNT_DPS, fixed, cfg["margin"]
    )
    counts_path = os.path.join(cfg["out_dir"], "solution_counts.csv")
    search_space.write_counts_csv(rows, counts_path)
    print(f"wrote {counts_path}")
    return 0


def cmd_train(args) -> int:
    cfg = _merge_config(
        args,
        {
            "seed": (trainer.DEFAULT_SEED, False),
            "dp": ([0.05], False),
            "window": ([512], False),
            "margin": (0.5, False),
            "runs": (1, False),
            "out": (None, True),
        },
    )
    _log_config("train", cfg)
    config = trainer.TrainingConfig(
        seed=cfg["seed"],
        dp_schedule=_as_schedule(cfg["dp"], float),
        window_schedule=_as_schedule(cfg["window"], int),
        margin=cfg["margin"],
    )
    runs = cfg["runs"]
    if runs < 1:
        raise ValueError("runs must be at least 1")
    summary = trainer.run_batch(config, runs)
    base = cfg["out"]
    json_path = f"{base}.json"
    csv_path = f"{base}.csv"
    if runs == 1:
        trainer.write_run_json(summary.runs[0], json_path)
    else:
        rate = summary.success_rate
        half_width = 1.96 * math.sqrt(max(rate * (1.0 - rate), 0.0) / runs)
        payload = {
            "seed": config.seed,
            "runs": runs,
            "k": summary.runs[0].k,
            "steps": summary.runs[0].steps,
            "success_rate": rate,
            "success_ci95": [max(rate - half_width, 0.0), min(rate + half_width, 1.0)],
            "class_frequencies": summary.class_frequencies(),
        }
        with open(json_path, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
        print(
            f"success rate: {rate:.4f} "
            f"(95% CI [{payload['success_ci95'][0]:.4f}, {payload['success_ci95'][1]:.4f}])"
        )
    trainer.write_batch_csv(summary, csv_path)
    print(f"wrote {json_path} and {csv_path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qwtrain",
        description="Complete-graph walk search for the output weights of a small XOR network.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("walk1d", help="line-walk probability distribution CSV")
    p.add_argument("--steps", type=int, help="number of walk steps")
    p.add_argument("--out", help="output CSV path")
    p.add_argument("--config", help="JSON config file (flags take precedence)")
    p.set_defaults(func=cmd_walk1d)

    p = sub.add_parser("walk2d", help="lattice-walk probability distribution CSV")
    p.add_argument("--steps", type=int, help="number of walk steps")
    p.add_argument("--out", help="output CSV path")
    p.add_argument("--config", help="JSON config file (flags take precedence)")
    p.set_defaults(func=cmd_walk2d)

    p = sub.add_parser(
        "complete-walk", help="complete-graph search trajectory CSV + peak summary"
    )
    p.add_argument("--n", type=int, help="vertex count")
    p.add_argument("--k", type=int, help="marked vertex count")
    p.add_argument("--l", type=int, help="self-loops per vertex (must be 1)")
    p.add_argument("--tmax", type=int, help="last step of the trajectory")
    p.add_argument("--out", help="output CSV path")
    p.add_argument("--config", help="JSON config file (flags take precedence)")
    p.set_defaults(func=cmd_complete_walk)

    p = sub.add_parser(
        "tables", help="measurement tables for all window/count cells + solution counts"
    )
    p.add_argument("--out-dir", dest="out_dir", help="output directory")
    p.add_argument("--seed", type=int, help="fixed-weight seed for the count table")
    p.add_argument("--margin", type=float, help="solution margin")
    p.add_argument("--config", help="JSON config file (flags take precedence)")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("train", help="run the training procedure")
    p.add_argument("--seed", type=int, help="master seed")
    p.add_argument("--dp", type=float, action="append", help="grid scale (repeatable)")
    p.add_argument(
        "--window", type=int, action="append", help="square window extent (repeatable)"
    )
    p.add_argument("--margin", type=float, help="solution margin in (0, 0.5]")
    p.add_argument("--runs", type=int, help="number of measurement runs")
    p.add_argument("--out", help="output base path (writes <out>.json and <out>.csv)")
    p.add_argument("--config", help="JSON config file (flags take precedence)")
    p.set_defaults(func=cmd_train)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
