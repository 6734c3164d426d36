"""Command line interface.

Subcommands: ``gen`` writes a planted dataset, ``train`` runs one algorithm
on a dataset file and prints a run record as JSON, ``sweep`` executes a JSON
sweep spec into a CSV, ``fit`` fits a log-log exponent to sweep output, and
``verify`` runs the built-in property suites. Exit codes: 0 success,
2 invalid arguments, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from .core import TrainingSet
from .datagen import generate_margin_dataset, save_dataset
from .sweep import (
    ALGORITHM_TAGS,
    SweepSpec,
    fit_exponent,
    read_records_csv,
    run_algorithm,
    run_sweep,
    write_records_csv,
)
from .verify import run_suites

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VERIFY_FAILED = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qperceptron",
        description="Quantum-search perceptron trainers, baselines, and sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a planted margin dataset (CSV + sidecar JSON)")
    gen.add_argument("--n", type=int, required=True, help="number of examples")
    gen.add_argument("--dim", type=int, required=True, help="feature dimension (>= 2)")
    gen.add_argument("--gamma", type=float, required=True, help="planted margin in (0, 1)")
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--out", type=Path, required=True, help="output CSV path")

    train = sub.add_parser("train", help="run one training algorithm on a dataset file")
    train.add_argument("--algo", required=True, choices=sorted(ALGORITHM_TAGS))
    train.add_argument("--data", type=Path, required=True, help="dataset CSV or JSON")
    train.add_argument("--epsilon", type=float, default=0.1)
    train.add_argument("--gamma", type=float, required=True)
    train.add_argument("--c", type=float, default=1.5)
    train.add_argument("--seed", type=int, default=0)
    train.add_argument("--k-override", type=int, default=None)

    sweep = sub.add_parser("sweep", help="run a sweep spec (JSON) into a CSV of records")
    sweep.add_argument("--spec", type=Path, required=True)
    sweep.add_argument("--out", type=Path, required=True)

    fit = sub.add_parser("fit", help="log-log exponent fit over sweep records")
    fit.add_argument("--in", dest="in_path", type=Path, required=True)
    fit.add_argument("--x", required=True, help="record field for the x axis (e.g. n)")
    fit.add_argument("--y", required=True, help="record field for the y axis (e.g. q_queries)")

    sub.add_parser("verify", help="run the built-in property suites")
    return parser


def _load_training_set(path: Path) -> TrainingSet:
    if path.suffix.lower() == ".json":
        return TrainingSet.from_json(path)
    return TrainingSet.from_csv(path)


def _cmd_gen(args) -> int:
    dataset = generate_margin_dataset(args.n, args.dim, args.gamma, args.seed)
    sidecar = save_dataset(dataset, args.out)
    print(f"wrote {args.out} and {sidecar}")
    return EXIT_OK


def _cmd_train(args) -> int:
    data = _load_training_set(args.data)
    start = time.perf_counter()
    report = run_algorithm(
        args.algo,
        data,
        epsilon=args.epsilon,
        gamma=args.gamma,
        c=args.c,
        seed=args.seed,
        k_override=args.k_override,
    )
    wall_ms = (time.perf_counter() - start) * 1e3
    record = {
        "algo": args.algo,
        "n": data.n,
        "dim": data.dim,
        "gamma": args.gamma,
        "epsilon": args.epsilon,
        "c": args.c,
        "seed": args.seed,
        "updates": report.updates_made,
        "converged": report.converged,
        "q_queries": report.ledger.quantum_oracle_queries,
        "c_queries": report.ledger.classical_oracle_queries,
        "g_queries": report.ledger.composite_oracle_queries,
        "wall_ms": round(wall_ms, 3),
    }
    print(json.dumps(record))
    return EXIT_OK


def _cmd_sweep(args) -> int:
    spec = SweepSpec.from_json(args.spec)
    records = run_sweep(spec)
    write_records_csv(records, args.out)
    print(f"wrote {len(records)} records to {args.out}")
    return EXIT_OK


def _cmd_fit(args) -> int:
    records = read_records_csv(args.in_path)
    fit = fit_exponent(records, args.x, args.y)
    print(
        json.dumps(
            {"slope": fit.slope, "intercept": fit.intercept, "r_squared": fit.r_squared}
        )
    )
    return EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "gen":
            return _cmd_gen(args)
        if args.command == "train":
            return _cmd_train(args)
        if args.command == "sweep":
            return _cmd_sweep(args)
        if args.command == "fit":
            return _cmd_fit(args)
        if args.command == "verify":
            return EXIT_OK if run_suites() else EXIT_VERIFY_FAILED
    except (ValueError, OSError, KeyError, AttributeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    raise AssertionError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())
