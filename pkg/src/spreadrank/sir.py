"""Monte-Carlo SIR spreading on a graph, used as ranking ground truth.

Synchronous discrete time. At every step each currently infectious node
makes one independent Bernoulli(beta) attempt per susceptible neighbor,
then recovers; a node stays infectious for exactly one step, and nodes
infected during a step only start transmitting at the next step. The
tracked trajectory F(t) counts infected-plus-recovered nodes after t steps,
so it is nondecreasing and its last value is the outbreak's final size.

Randomness is fully determined by (master_seed, run_index): every run draws
from its own generator seeded with
``SeedSequence(entropy=master_seed, spawn_key=(run_index,))``, so runs can
be executed in any order or in parallel without changing results.
``spreading_influence`` uses run_index = node_id * runs + run_number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "SirConfig",
    "SirTrajectory",
    "MeanTrajectory",
    "SirSummary",
    "epidemic_threshold",
    "simulate_once",
    "spreading_influence",
    "top_k_trajectory",
    "influence_csv",
    "trajectory_csv",
]


@dataclass(frozen=True)
class SirConfig:
    """Simulation parameters.

    ``recovery_rate`` is part of the model statement but only the value 1.0
    (recover after exactly one infectious step) is supported.
    """

    beta: float
    runs: int = 1000
    master_seed: int = 0
    recovery_rate: float = 1.0
    max_steps: int | None = None

    def __post_init__(self):
        if not (0.0 <= self.beta <= 1.0) or not math.isfinite(self.beta):
            raise ValueError(f"beta must be in [0, 1], got {self.beta}")
        if self.runs < 1:
            raise ValueError("runs must be at least 1")
        if self.recovery_rate != 1.0:
            raise ValueError("only recovery_rate = 1.0 is supported")
        if self.master_seed < 0:
            raise ValueError("master_seed must be nonnegative")
        if self.max_steps is not None and self.max_steps < 0:
            raise ValueError("max_steps must be nonnegative")


@dataclass(frozen=True)
class SirTrajectory:
    """Cumulative infected-plus-recovered counts of one run, F(0), F(1), ..."""

    f_of_t: tuple[int, ...]

    @property
    def final_size(self) -> int:
        return self.f_of_t[-1]


@dataclass(frozen=True)
class MeanTrajectory:
    """Elementwise mean of run trajectories, shorter runs padded with their
    final value."""

    f_of_t: np.ndarray
    runs: int


@dataclass(frozen=True, eq=False)
class SirSummary:
    """Mean outbreak size per seed node."""

    influence: np.ndarray
    beta: float
    runs: int
    master_seed: int


def epidemic_threshold(g) -> float:
    """Heterogeneous mean-field threshold <k> / (<k^2> - <k>).

    Raises ValueError when the denominator is not positive (for example a
    graph of isolated edges), in which case a beta must be chosen by hand.
    """
    deg = g.degrees.astype(np.float64)
    k1 = float(deg.mean())
    k2 = float((deg ** 2).mean())
    denom = k2 - k1
    if denom <= 0.0:
        raise ValueError(
            "epidemic threshold undefined: <k^2> equals <k>; pick beta explicitly"
        )
    return k1 / denom


def _rng_for(master_seed: int, run_index: int) -> np.random.Generator:
    seq = np.random.SeedSequence(entropy=master_seed, spawn_key=(run_index,))
    return np.random.default_rng(seq)


def _gather(indptr: np.ndarray, indices: np.ndarray, nodes: np.ndarray) -> np.ndarray:
    starts = indptr[nodes]
    counts = indptr[nodes + 1] - starts
    total = int(counts.sum())
    if total == 0:
        return np.empty(0, dtype=indices.dtype)
    shift = np.concatenate(([0], np.cumsum(counts)[:-1]))
    pos = np.arange(total) + np.repeat(starts - shift, counts)
    return indices[pos]


def _check_seeds(g, seeds) -> np.ndarray:
    arr = np.unique(np.asarray(list(seeds), dtype=np.int64))
    if arr.size == 0:
        raise ValueError("seed set must not be empty")
    if arr[0] < 0 or arr[-1] >= g.n_nodes:
        raise ValueError("seed ids out of range")
    return arr


def simulate_once(g, seeds, config: SirConfig, run_index: int) -> SirTrajectory:
    """One SIR run from the given seed set; see the module docstring for the
    dynamics and the randomness contract."""
    seed_ids = _check_seeds(g, seeds)
    rng = _rng_for(config.master_seed, run_index)
    status = np.zeros(g.n_nodes, dtype=np.int8)  # 0 susceptible, 1 infectious, 2 removed
    status[seed_ids] = 1
    frontier = seed_ids
    total = int(seed_ids.size)
    trajectory = [total]
    indptr, indices = g.indptr, g.indices
    steps = 0
    while frontier.size and (config.max_steps is None or steps < config.max_steps):
        targets = _gather(indptr, indices, frontier)
        if targets.size:
            draws = rng.random(targets.size)
            hits = targets[(status[targets] == 0) & (draws < config.beta)]
            fresh = np.unique(hits)
        else:
            fresh = np.empty(0, dtype=np.int64)
        status[frontier] = 2
        status[fresh] = 1
        total += int(fresh.size)
        trajectory.append(total)
        frontier = fresh
        steps += 1
    return SirTrajectory(tuple(trajectory))


def _influence_block(g, config: SirConfig, lo: int, hi: int) -> np.ndarray:
    out = np.empty(hi - lo)
    for i in range(lo, hi):
        acc = 0
        base = i * config.runs
        for r in range(config.runs):
            acc += simulate_once(g, (i,), config, base + r).final_size
        out[i - lo] = acc / config.runs
    return out


def spreading_influence(g, config: SirConfig, workers: int = 1) -> SirSummary:
    """Mean outbreak size seeding each node alone, over ``config.runs`` runs.

    ``workers`` > 1 spreads the per-node loops over a process pool; results
    are identical to the sequential path because every run seeds its own
    generator.
    """
    n = g.n_nodes
    if workers <= 1 or n < 2:
        influence = _influence_block(g, config, 0, n)
    else:
        import multiprocessing as mp
        from concurrent.futures import ProcessPoolExecutor

        workers = min(workers, n)
        bounds = np.linspace(0, n, workers + 1).astype(int)
        ctx = mp.get_context("fork")
        with ProcessPoolExecutor(max_workers=workers, mp_context=ctx) as pool:
            parts = list(
                pool.map(
                    _influence_block_args,
                    [(g, config, int(lo), int(hi))
                     for lo, hi in zip(bounds[:-1], bounds[1:])],
                )
            )
        influence = np.concatenate(parts)
    return SirSummary(influence=influence, beta=config.beta,
                      runs=config.runs, master_seed=config.master_seed)


def _influence_block_args(args):
    return _influence_block(*args)


def top_k_trajectory(g, seeds, config: SirConfig) -> MeanTrajectory:
    """Mean F(t) over runs seeding the whole ``seeds`` set at once.

    Uses run_index = run number. Shorter runs are padded with their final
    value so the mean is defined at every step.
    """
    trajectories = [
        simulate_once(g, seeds, config, r).f_of_t for r in range(config.runs)
    ]
    length = max(len(t) for t in trajectories)
    padded = np.array(
        [t + (t[-1],) * (length - len(t)) for t in trajectories],
        dtype=np.float64,
    )
    return MeanTrajectory(f_of_t=padded.mean(axis=0), runs=config.runs)


def influence_csv(g, summary: SirSummary) -> str:
    """CSV export ``node_label,influence`` in internal id order."""
    lines = ["node_label,influence"]
    for i in range(summary.influence.size):
        lines.append(f"{g.label_of(i)},{float(summary.influence[i])!r}")
    return "\n".join(lines) + "\n"


def trajectory_csv(mt: MeanTrajectory) -> str:
    """CSV export ``t,F_mean``."""
    lines = ["t,F_mean"]
    for t, v in enumerate(mt.f_of_t):
        lines.append(f"{t},{float(v)!r}")
    return "\n".join(lines) + "\n"
