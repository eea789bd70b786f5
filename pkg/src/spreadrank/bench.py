"""Batch harness: compute rankings, simulate ground truth, emit report trees.

Given dataset edge lists and a method list, ``run_evaluate`` produces one
directory per dataset (rankings, ground truth, per-method reports, Jaccard
curves, top-10 spreading trajectories) plus cross-dataset Kendall and
monotonicity tables and a provenance manifest. Ground-truth simulations are
cached under ``cache/`` keyed by (dataset checksum, beta, runs, master
seed); reruns with the same key reuse the cache, which also keeps rerun
output byte-identical.
"""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass, field
from datetime import datetime, timezone
from pathlib import Path

import numpy as np

from . import __version__
from .centrality import (
    betweenness_centrality,
    closeness_centrality,
    degree_centrality,
    k_shell,
    local_gravity_model,
    restricted_degree_propagation,
)
from .cycles import cycle_ratio
from .graph import Graph, ParseError, graph_stats, load_edge_list, stats_csv
from .hgc import HgcConfig, hgc_components, hgc_csv
from .metrics import evaluate_method
from .ranking import ScoreMap, ranking_csv
from .sir import (
    SirConfig,
    SirSummary,
    epidemic_threshold,
    influence_csv,
    spreading_influence,
    top_k_trajectory,
)

__all__ = [
    "METHOD_NAMES",
    "BenchmarkSpec",
    "RunManifest",
    "DatasetError",
    "compute_scores",
    "dataset_checksum",
    "default_runs",
    "ground_truth",
    "run_stats",
    "run_rank",
    "run_ground_truth",
    "run_evaluate",
]

log = logging.getLogger(__name__)

METHOD_NAMES = ("DC", "BC", "CC", "KS", "CR", "LGM", "RDP", "HGC")

DEFAULT_K_LIST = tuple(range(10, 101, 10))


class DatasetError(Exception):
    """One or more datasets could not be processed; message lists them all."""


@dataclass(frozen=True)
class BenchmarkSpec:
    """Everything that determines a benchmark run's outputs."""

    datasets: tuple[str, ...]
    methods: tuple[str, ...] = METHOD_NAMES
    radius: int = 2
    horizon: int = 2
    beta: float | None = None
    runs: int | None = None
    master_seed: int = 0
    k_list: tuple[int, ...] = DEFAULT_K_LIST
    workers: int = 1

    def __post_init__(self):
        if not self.datasets:
            raise ValueError("at least one dataset is required")
        unknown = [m for m in self.methods if m not in METHOD_NAMES]
        if unknown:
            raise ValueError(
                f"unknown method(s) {unknown}; valid: {', '.join(METHOD_NAMES)}"
            )
        if any(k < 1 for k in self.k_list):
            raise ValueError("k values must be positive")
        if any(b <= a for a, b in zip(self.k_list, self.k_list[1:])):
            raise ValueError("k_list must be strictly increasing")

    def hgc_config(self) -> HgcConfig:
        return HgcConfig(radius=self.radius, horizon=self.horizon)


def compute_scores(g: Graph, method: str, radius: int = 2, horizon: int = 2,
                   cycle_scores: np.ndarray | None = None) -> ScoreMap:
    """Dispatch a method identifier to its implementation.

    ``cycle_scores`` (the cycle-ratio vector) can be passed in so CR and HGC
    share one cycle enumeration.
    """
    if method == "DC":
        return degree_centrality(g)
    if method == "BC":
        return betweenness_centrality(g)
    if method == "CC":
        return closeness_centrality(g)
    if method == "KS":
        return k_shell(g)
    if method == "CR":
        if cycle_scores is not None:
            return ScoreMap("CR", cycle_scores)
        return cycle_ratio(g)
    if method == "LGM":
        return local_gravity_model(g, radius=radius)
    if method == "RDP":
        return restricted_degree_propagation(g, horizon=horizon)
    if method == "HGC":
        cfg = HgcConfig(radius=radius, horizon=horizon)
        return hgc_components(g, cfg, cycle_scores=cycle_scores).hgc
    raise ValueError(f"unknown method {method!r}; valid: {', '.join(METHOD_NAMES)}")


def dataset_checksum(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def default_runs(n_nodes: int) -> int:
    """Desk-scale default: 1000 runs up to 2500 nodes, 100 beyond."""
    return 1000 if n_nodes <= 2500 else 100


def spec_fingerprint(spec: BenchmarkSpec, checksums: dict[str, str]) -> str:
    payload = {
        "checksums": dict(sorted(checksums.items())),
        "methods": list(spec.methods),
        "radius": spec.radius,
        "horizon": spec.horizon,
        "beta": repr(spec.beta),
        "runs": spec.runs,
        "master_seed": spec.master_seed,
        "k_list": list(spec.k_list),
    }
    blob = json.dumps(payload, sort_keys=True).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


@dataclass(frozen=True)
class RunManifest:
    """Provenance record written next to a benchmark output tree."""

    fingerprint: str
    datasets: dict
    methods: tuple[str, ...]
    master_seed: int
    package_version: str = __version__
    created_utc: str = field(
        default_factory=lambda: datetime.now(timezone.utc).isoformat()
    )

    def to_json(self) -> str:
        payload = {
            "fingerprint": self.fingerprint,
            "datasets": self.datasets,
            "methods": list(self.methods),
            "master_seed": self.master_seed,
            "package_version": self.package_version,
            "created_utc": self.created_utc,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="\n") as fh:
        fh.write(text)


def _cache_key(checksum: str, beta: float, runs: int, master_seed: int) -> str:
    blob = f"{checksum}|{beta!r}|{runs}|{master_seed}".encode()
    return hashlib.sha256(blob).hexdigest()[:16]


def ground_truth(g: Graph, beta: float, runs: int, master_seed: int,
                 workers: int = 1, cache_dir: Path | None = None,
                 checksum: str | None = None) -> tuple[SirSummary, bool]:
    """Simulated per-node influence, cached on disk when possible.

    Returns (summary, cache_hit). Caching needs both ``cache_dir`` and the
    dataset ``checksum``; without them the simulation always runs.
    """
    cache_path = None
    if cache_dir is not None and checksum is not None:
        key = _cache_key(checksum, beta, runs, master_seed)
        cache_path = Path(cache_dir) / f"sir-{key}.csv"
        if cache_path.exists():
            influence = _read_influence(cache_path, g)
            summary = SirSummary(influence=influence, beta=beta, runs=runs,
                                 master_seed=master_seed)
            return summary, True
    config = SirConfig(beta=beta, runs=runs, master_seed=master_seed)
    summary = spreading_influence(g, config, workers=workers)
    if cache_path is not None:
        _write(cache_path, influence_csv(g, summary))
    return summary, False


def _read_influence(path: Path, g: Graph) -> np.ndarray:
    lines = path.read_text().splitlines()
    if not lines or lines[0] != "node_label,influence":
        raise DatasetError(f"corrupt ground-truth cache {path}")
    values = np.empty(g.n_nodes)
    if len(lines) - 1 != g.n_nodes:
        raise DatasetError(f"ground-truth cache {path} does not match dataset")
    for i, line in enumerate(lines[1:]):
        label, _, raw = line.partition(",")
        if label != g.label_of(i):
            raise DatasetError(f"ground-truth cache {path} does not match dataset")
        values[i] = float(raw)
    return values


def run_stats(dataset: str, out_dir: Path | None = None) -> str:
    """Stats CSV for one dataset; also written to ``<out>/<name>-stats.csv``."""
    g, name, _ = _load(dataset)
    text = stats_csv(graph_stats(g, name))
    if out_dir is not None:
        _write(Path(out_dir) / f"{name}-stats.csv", text)
    return text


def run_rank(dataset: str, method: str, radius: int = 2, horizon: int = 2,
             details: bool = False, out_dir: Path | None = None) -> str:
    """Ranking CSV for one method on one dataset.

    With ``details`` (HGC only) the export carries the gravity and
    propagation parts and the mixing factor alongside the fused score.
    """
    g, name, _ = _load(dataset)
    if details:
        if method != "HGC":
            raise ValueError("--details is only available for method HGC")
        comps = hgc_components(g, HgcConfig(radius=radius, horizon=horizon))
        text = hgc_csv(g, comps)
        suffix = f"{name}-HGC-details.csv"
    else:
        sm = compute_scores(g, method, radius=radius, horizon=horizon)
        text = ranking_csv(g, sm)
        suffix = f"{name}-{method}.csv"
    if out_dir is not None:
        _write(Path(out_dir) / suffix, text)
    return text


def run_ground_truth(dataset: str, beta: float | None, runs: int | None,
                     master_seed: int, workers: int,
                     out_dir: Path) -> str:
    """Simulate (or reuse cached) ground truth; returns a status line."""
    g, name, checksum = _load(dataset)
    beta_used = _resolve_beta(g, beta)
    runs_used = runs if runs is not None else default_runs(g.n_nodes)
    out_dir = Path(out_dir)
    summary, hit = ground_truth(
        g, beta_used, runs_used, master_seed,
        workers=workers, cache_dir=out_dir / "cache", checksum=checksum,
    )
    _write(out_dir / f"{name}-influence.csv", influence_csv(g, summary))
    return (
        f"{name}: beta={beta_used!r} runs={runs_used} seed={master_seed} "
        f"{'cache hit' if hit else 'simulated'}\n"
    )


def _resolve_beta(g: Graph, beta: float | None) -> float:
    if beta is not None:
        return beta
    try:
        return epidemic_threshold(g)
    except ValueError as exc:
        raise DatasetError(str(exc)) from None


def _load(dataset: str) -> tuple[Graph, str, str]:
    path = Path(dataset)
    g = load_edge_list(path)
    return g, path.stem, dataset_checksum(path)


def run_evaluate(spec: BenchmarkSpec, out_dir) -> dict:
    """Full benchmark: per-dataset reports plus cross-dataset tables.

    Missing or malformed datasets are all collected and reported together
    in one DatasetError. Returns a summary dict (per dataset: beta, runs,
    per-method Kendall) for programmatic use.
    """
    out_dir = Path(out_dir)
    loaded = []
    failures = []
    for ds in spec.datasets:
        try:
            g, name, checksum = _load(ds)
            beta_used = _resolve_beta(g, spec.beta)
            loaded.append((ds, g, name, checksum, beta_used))
        except (ParseError, DatasetError, OSError) as exc:
            failures.append(f"{ds}: {exc}")
    if failures:
        raise DatasetError(
            "could not process %d dataset(s):\n  %s"
            % (len(failures), "\n  ".join(failures))
        )

    checksums = {name: chk for _, _, name, chk, _ in loaded}
    fingerprint = spec_fingerprint(spec, checksums)
    kendall_rows = []
    mono_rows = []
    manifest_datasets = {}
    summary_out: dict = {"fingerprint": fingerprint, "datasets": {}}

    for ds, g, name, checksum, beta_used in loaded:
        runs_used = spec.runs if spec.runs is not None else default_runs(g.n_nodes)
        ds_dir = out_dir / f"{name}-{fingerprint}"
        log.info("evaluating %s (N=%d, M=%d, beta=%.6g, runs=%d)",
                 name, g.n_nodes, g.n_edges, beta_used, runs_used)

        summary, _ = ground_truth(
            g, beta_used, runs_used, spec.master_seed,
            workers=spec.workers, cache_dir=out_dir / "cache", checksum=checksum,
        )
        _write(ds_dir / "ground_truth.csv", influence_csv(g, summary))
        gt_scores = ScoreMap("SIR", summary.influence)

        k_list = [k for k in spec.k_list if k <= g.n_nodes]
        if len(k_list) < len(spec.k_list):
            log.warning("%s: dropped k values above N=%d", name, g.n_nodes)

        cycle_scores = None
        if "CR" in spec.methods or "HGC" in spec.methods:
            cycle_scores = cycle_ratio(g).scores

        kendall_row = {}
        mono_row = {}
        jaccard_by_method = {}
        traj_by_method = {}
        for method in spec.methods:
            sm = compute_scores(g, method, radius=spec.radius,
                                horizon=spec.horizon, cycle_scores=cycle_scores)
            _write(ds_dir / "rankings" / f"{method}.csv", ranking_csv(g, sm))
            report = evaluate_method(sm, gt_scores, k_list)
            _write(ds_dir / "reports" / f"{method}.json", report.to_json())
            kendall_row[method] = report.kendall
            mono_row[method] = report.monotonicity
            jaccard_by_method[method] = report.jaccard

            top = sm.ranking()[: min(10, g.n_nodes)]
            config = SirConfig(beta=beta_used, runs=runs_used,
                               master_seed=spec.master_seed)
            traj_by_method[method] = top_k_trajectory(g, top, config).f_of_t

        _write(ds_dir / "jaccard.csv",
               _jaccard_table(spec.methods, k_list, jaccard_by_method))
        _write(ds_dir / "trajectories.csv",
               _trajectory_table(spec.methods, traj_by_method))
        kendall_rows.append((name, kendall_row))
        mono_rows.append((name, mono_row))
        manifest_datasets[name] = {
            "path": str(ds),
            "checksum": checksum,
            "n_nodes": g.n_nodes,
            "n_edges": g.n_edges,
            "beta": beta_used,
            "runs": runs_used,
        }
        summary_out["datasets"][name] = {
            "beta": beta_used,
            "runs": runs_used,
            "kendall": dict(kendall_row),
        }

    _write(out_dir / "kendall_table.csv",
           _method_table(spec.methods, kendall_rows))
    _write(out_dir / "monotonicity_table.csv",
           _method_table(spec.methods, mono_rows))
    manifest = RunManifest(
        fingerprint=fingerprint,
        datasets=manifest_datasets,
        methods=spec.methods,
        master_seed=spec.master_seed,
    )
    _write(out_dir / "manifest.json", manifest.to_json())
    return summary_out


def _method_table(methods, rows) -> str:
    lines = ["network," + ",".join(methods)]
    for name, row in rows:
        lines.append(name + "," + ",".join(repr(row[m]) for m in methods))
    return "\n".join(lines) + "\n"


def _jaccard_table(methods, k_list, jaccard_by_method) -> str:
    lines = ["k," + ",".join(methods)]
    for k in k_list:
        vals = ",".join(repr(jaccard_by_method[m][k]) for m in methods)
        lines.append(f"{k},{vals}")
    return "\n".join(lines) + "\n"


def _trajectory_table(methods, traj_by_method) -> str:
    length = max(t.size for t in traj_by_method.values())
    padded = {
        m: np.concatenate([t, np.full(length - t.size, t[-1])])
        for m, t in traj_by_method.items()
    }
    lines = ["t," + ",".join(methods)]
    for t in range(length):
        vals = ",".join(repr(float(padded[m][t])) for m in methods)
        lines.append(f"{t},{vals}")
    return "\n".join(lines) + "\n"
