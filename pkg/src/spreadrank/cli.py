"""Command-line interface.

Subcommands:

* ``stats``: N, M, mean degree, mean distance, clustering of a dataset.
* ``rank``: ranking CSV of one method on one dataset.
* ``ground-truth``: simulate (and cache) per-node spreading influence.
* ``evaluate``: the full benchmark tree over one or more datasets.

Every flag can also be given in a ``key=value`` config file passed with
``--config``; command-line flags override file values. The ``SPREADRANK_OUT``
environment variable supplies a default output directory. Exit codes:
0 success, 1 usage problem, 2 data problem.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys

from .bench import (
    METHOD_NAMES,
    BenchmarkSpec,
    DatasetError,
    run_evaluate,
    run_ground_truth,
    run_rank,
    run_stats,
)
from .graph import ParseError

__all__ = ["main", "build_parser"]

ENV_OUT = "SPREADRANK_OUT"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="spreadrank",
        description="Rank influential spreaders and benchmark rankings "
                    "against simulated spreading.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, *, multi_dataset=False):
        if multi_dataset:
            p.add_argument("--dataset", action="append", metavar="PATH",
                           help="edge-list file (repeatable)")
        else:
            p.add_argument("--dataset", metavar="PATH", help="edge-list file")
        p.add_argument("--config", metavar="FILE",
                       help="key=value file mirroring the flags")
        p.add_argument("--out", metavar="DIR",
                       help=f"output directory (default: ${ENV_OUT})")

    p = sub.add_parser("stats", parents=[], help="network summary statistics")
    add_common(p)

    p = sub.add_parser("rank", help="ranking CSV of one method")
    add_common(p)
    p.add_argument("--method", choices=METHOD_NAMES, help="ranking method")
    p.add_argument("--radius", type=int, help="gravity neighborhood radius")
    p.add_argument("--iterations", type=int, help="propagation depth")
    p.add_argument("--details", action="store_true",
                   help="HGC only: include gravity/propagation parts")

    p = sub.add_parser("ground-truth", help="simulate per-node influence")
    add_common(p)
    p.add_argument("--beta", help="infection probability or 'auto'")
    p.add_argument("--runs", type=int, help="Monte-Carlo runs per node")
    p.add_argument("--seed", type=int, help="master random seed")
    p.add_argument("--threads", type=int, help="worker processes")

    p = sub.add_parser("evaluate", help="full benchmark over datasets")
    add_common(p, multi_dataset=True)
    p.add_argument("--method", action="append", choices=METHOD_NAMES,
                   help="method to evaluate (repeatable; default: all)")
    p.add_argument("--radius", type=int, help="gravity neighborhood radius")
    p.add_argument("--iterations", type=int, help="propagation depth")
    p.add_argument("--beta", help="infection probability or 'auto'")
    p.add_argument("--runs", type=int, help="Monte-Carlo runs per node")
    p.add_argument("--seed", type=int, help="master random seed")
    p.add_argument("--k-list", dest="k_list", metavar="A:B:STEP",
                   help="top-k sweep, inclusive (default 10:100:10)")
    p.add_argument("--threads", type=int, help="worker processes")

    return parser


def _load_config(path: str) -> dict[str, str]:
    try:
        text = open(path).read()
    except OSError as exc:
        raise UsageError(f"cannot read config file: {exc}") from None
    values: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, eq, value = line.partition("=")
        if not eq:
            raise UsageError(f"{path}:{lineno}: expected key=value, got {raw!r}")
        values[key.strip().replace("-", "_")] = value.strip()
    return values


def _pick(args, config: dict[str, str], key: str, default=None):
    value = getattr(args, key, None)
    if value is not None and value is not False:
        return value
    if key in config:
        return config[key]
    return default


def _to_int(value, key: str, minimum: int) -> int:
    try:
        out = int(value)
    except (TypeError, ValueError):
        raise UsageError(f"{key} must be an integer, got {value!r}") from None
    if out < minimum:
        raise UsageError(f"{key} must be >= {minimum}, got {out}")
    return out


def _parse_beta(value) -> float | None:
    if value is None or value == "auto":
        return None
    try:
        beta = float(value)
    except ValueError:
        raise UsageError(f"beta must be a number or 'auto', got {value!r}") from None
    if not 0.0 <= beta <= 1.0:
        raise UsageError(f"beta must be in [0, 1], got {beta}")
    return beta


def _parse_k_list(value) -> tuple[int, ...]:
    if value is None:
        return tuple(range(10, 101, 10))
    parts = str(value).split(":")
    if len(parts) != 3:
        raise UsageError(f"k-list must be A:B:STEP, got {value!r}")
    try:
        a, b, step = (int(p) for p in parts)
    except ValueError:
        raise UsageError(f"k-list must be three integers, got {value!r}") from None
    if a < 1 or b < a or step < 1:
        raise UsageError(f"k-list needs 1 <= A <= B and STEP >= 1, got {value!r}")
    return tuple(range(a, b + 1, step))


def _parse_datasets(args, config) -> list[str]:
    value = getattr(args, "dataset", None)
    if value:
        return value if isinstance(value, list) else [value]
    if "dataset" in config:
        return config["dataset"].replace(",", " ").split()
    raise UsageError("--dataset is required")


def _resolve_out(args, config, required: bool) -> str | None:
    out = _pick(args, config, "out", os.environ.get(ENV_OUT))
    if out is None and required:
        raise UsageError(f"--out is required (or set ${ENV_OUT})")
    return out


def _parse_methods(args, config) -> tuple[str, ...]:
    value = getattr(args, "method", None)
    if not value:
        value = config.get("method")
        if value is not None:
            value = value.replace(",", " ").split()
    if not value:
        return METHOD_NAMES
    if isinstance(value, str):
        value = [value]
    for m in value:
        if m not in METHOD_NAMES:
            raise UsageError(
                f"unknown method {m!r}; valid: {', '.join(METHOD_NAMES)}"
            )
    return tuple(value)


def main(argv=None) -> int:
    logging.basicConfig(stream=sys.stderr, level=logging.INFO,
                        format="%(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        config = _load_config(args.config) if args.config else {}
        return _dispatch(args, config)
    except UsageError as exc:
        print(f"spreadrank: error: {exc}", file=sys.stderr)
        return 1
    except (ParseError, DatasetError) as exc:
        print(f"spreadrank: data error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"spreadrank: data error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args, config: dict[str, str]) -> int:
    command = args.command
    if command == "stats":
        dataset = _parse_datasets(args, config)[0]
        out = _resolve_out(args, config, required=False)
        sys.stdout.write(run_stats(dataset, out))
        return 0

    if command == "rank":
        dataset = _parse_datasets(args, config)[0]
        method = _parse_methods(args, config)
        if len(method) != 1:
            raise UsageError("rank needs exactly one --method")
        out = _resolve_out(args, config, required=False)
        details = bool(_pick(args, config, "details", False))
        if isinstance(details, str):
            details = details.lower() in ("1", "true", "yes")
        radius = _to_int(_pick(args, config, "radius", 2), "radius", 1)
        horizon = _to_int(_pick(args, config, "iterations", 2), "iterations", 0)
        try:
            text = run_rank(dataset, method[0], radius=radius, horizon=horizon,
                            details=details, out_dir=out)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        sys.stdout.write(text)
        return 0

    if command == "ground-truth":
        dataset = _parse_datasets(args, config)[0]
        out = _resolve_out(args, config, required=True)
        beta = _parse_beta(_pick(args, config, "beta"))
        runs = _pick(args, config, "runs")
        runs = None if runs is None else _to_int(runs, "runs", 1)
        seed = _to_int(_pick(args, config, "seed", 0), "seed", 0)
        threads = _to_int(_pick(args, config, "threads", 1), "threads", 1)
        sys.stdout.write(
            run_ground_truth(dataset, beta, runs, seed, threads, out)
        )
        return 0

    if command == "evaluate":
        datasets = _parse_datasets(args, config)
        out = _resolve_out(args, config, required=True)
        try:
            spec = BenchmarkSpec(
                datasets=tuple(datasets),
                methods=_parse_methods(args, config),
                radius=_to_int(_pick(args, config, "radius", 2), "radius", 1),
                horizon=_to_int(_pick(args, config, "iterations", 2),
                                "iterations", 0),
                beta=_parse_beta(_pick(args, config, "beta")),
                runs=(lambda r: None if r is None else _to_int(r, "runs", 1))(
                    _pick(args, config, "runs")
                ),
                master_seed=_to_int(_pick(args, config, "seed", 0), "seed", 0),
                k_list=_parse_k_list(_pick(args, config, "k_list")),
                workers=_to_int(_pick(args, config, "threads", 1), "threads", 1),
            )
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        summary = run_evaluate(spec, out)
        for name, info in summary["datasets"].items():
            taus = " ".join(
                f"{m}={v:.4f}" for m, v in info["kendall"].items()
            )
            print(f"{name}: beta={info['beta']:.6g} runs={info['runs']} {taus}")
        print(f"outputs written to {out}")
        return 0

    raise UsageError(f"unknown command {command!r}")


if __name__ == "__main__":
    sys.exit(main())
