"""Hybrid spreader score: damped gravity over effective distances plus
cycle-seeded propagation.

The gravity part (GM) sums ``k_i * k_j / ed(j|i)^2`` over a truncated
neighborhood of i, damped by ``exp(-c_i)`` where ``c_i`` is Burt's network
constraint (structural-hole coefficient) of i. The propagation part (RCP)
seeds every node with its cycle-ratio score and diffuses along adjacency
with 1/l^2 damping for ``horizon`` rounds. The hybrid score is
``HGC = GM + gamma * RCP`` with the balancing factor
``gamma = mean(GM) / mean(RCP)`` (0 when there are no cycles, so the score
degrades to plain GM on trees).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ranking import ScoreMap

__all__ = [
    "HgcConfig",
    "HgcComponents",
    "constraint_coefficients",
    "gm_scores",
    "rcp_scores",
    "balancing_factor",
    "hgc_components",
    "hgc_scores",
    "hgc_csv",
]

_TRUNCATIONS = ("hops", "distance-units")


@dataclass(frozen=True)
class HgcConfig:
    """Knobs of the hybrid score.

    radius
        Neighborhood horizon of the gravity sum. With ``truncation="hops"``
        it counts topological hops; with ``"distance-units"`` it bounds the
        effective distance itself.
    horizon
        Number of propagation rounds for the cycle part.
    include_seed_term
        Keep the l = 0 seed term in the propagation sum (the default).
    """

    radius: int = 2
    horizon: int = 2
    truncation: str = "hops"
    include_seed_term: bool = True

    def __post_init__(self):
        if self.radius < 1:
            raise ValueError("radius must be at least 1")
        if self.horizon < 0:
            raise ValueError("horizon must be nonnegative")
        if self.truncation not in _TRUNCATIONS:
            raise ValueError(f"truncation must be one of {_TRUNCATIONS}")


def constraint_coefficients(g) -> np.ndarray:
    """Burt's network constraint c_i per node (unweighted graph).

    c_i = sum over neighbors j of (p_ij + sum_q p_iq * p_qj)^2 with
    p_uv = 1/degree(u) for adjacent u, v and q ranging over common
    neighbors of i and j. Isolated nodes get 0; a degree-1 node scores 1.
    """
    n = g.n_nodes
    deg = g.degrees.astype(np.float64)
    inv_k = np.zeros(n)
    np.divide(1.0, deg, out=inv_k, where=deg > 0)
    c = np.zeros(n)
    for i in range(n):
        row = g.neighbors(i)
        if row.size == 0:
            continue
        acc = 0.0
        for j in row:
            common = np.intersect1d(row, g.neighbors(int(j)), assume_unique=True)
            acc += (1.0 + inv_k[common].sum()) ** 2
        c[i] = acc * inv_k[i] ** 2
    return c


def gm_scores(g, config: HgcConfig = HgcConfig(),
              constraint: np.ndarray | None = None) -> ScoreMap:
    """Constraint-damped gravity score over the truncated neighborhood.

    GM(i) = exp(-c_i) * k_i * sum_j k_j / ed(j|i)^2, where j ranges over
    the nodes within ``config.radius`` of i (excluding i) and ed is the
    minimum effective distance from i to j over all paths in the graph.
    """
    from scipy.sparse.csgraph import dijkstra

    from .effective_distance import weight_transform

    n = g.n_nodes
    deg = g.degrees.astype(np.float64)
    if constraint is None:
        constraint = constraint_coefficients(g)
    damp = np.exp(-np.asarray(constraint, dtype=np.float64))
    scores = np.zeros(n)
    if g.n_edges == 0:
        return ScoreMap("GM", scores)

    weights = weight_transform(g)
    adjacency = g.csr_adjacency()
    chunk = max(1, min(n, 2 ** 22 // max(n, 1)))
    for lo in range(0, n, chunk):
        idx = np.arange(lo, min(lo + chunk, n))
        ed = dijkstra(weights, indices=idx)
        if config.truncation == "hops":
            hops = dijkstra(adjacency, unweighted=True, indices=idx,
                            limit=config.radius)
            mask = (hops > 0) & np.isfinite(hops)
        else:
            mask = (ed > 0) & (ed <= config.radius)
        with np.errstate(divide="ignore", invalid="ignore"):
            terms = np.where(mask, deg[None, :] / np.square(ed), 0.0)
        scores[idx] = damp[idx] * deg[idx] * terms.sum(axis=1)
    return ScoreMap("GM", scores)


def rcp_scores(g, config: HgcConfig = HgcConfig(),
               seeds: np.ndarray | None = None) -> ScoreMap:
    """Cycle-seeded propagation score.

    Seeds default to the cycle-ratio scores. Each round divides the
    adjacency-summed previous round by l^2; the result is the sum of all
    rounds (including the seed itself unless the config says otherwise).
    """
    from .cycles import cycle_ratio

    if seeds is None:
        seeds = cycle_ratio(g).scores
    current = np.asarray(seeds, dtype=np.float64).copy()
    if current.shape != (g.n_nodes,):
        raise ValueError("seed vector length must match the node count")
    adj = g.csr_adjacency()
    total = current.copy() if config.include_seed_term else np.zeros(g.n_nodes)
    for level in range(1, config.horizon + 1):
        current = adj.dot(current) / level ** 2
        total += current
    return ScoreMap("RCP", total)


def balancing_factor(gm: ScoreMap, rcp: ScoreMap) -> float:
    """mean(GM) / mean(RCP); defined as 0 when the propagation mean is 0."""
    mean_rcp = float(rcp.scores.mean())
    if mean_rcp == 0.0:
        return 0.0
    return float(gm.scores.mean()) / mean_rcp


@dataclass(frozen=True)
class HgcComponents:
    """The hybrid score together with its two parts and their mixing factor."""

    gm: ScoreMap
    rcp: ScoreMap
    gamma: float
    hgc: ScoreMap


def hgc_components(g, config: HgcConfig = HgcConfig(),
                   cycle_scores: np.ndarray | None = None) -> HgcComponents:
    """Compute GM, RCP, gamma and the fused HGC score in one pass.

    ``cycle_scores`` lets a caller that already holds the cycle-ratio
    vector skip recomputing the cycle structure.
    """
    gm = gm_scores(g, config)
    rcp = rcp_scores(g, config, seeds=cycle_scores)
    gamma = balancing_factor(gm, rcp)
    fused = ScoreMap("HGC", gm.scores + gamma * rcp.scores)
    return HgcComponents(gm=gm, rcp=rcp, gamma=gamma, hgc=fused)


def hgc_scores(g, config: HgcConfig = HgcConfig()) -> ScoreMap:
    """The fused score only; see :func:`hgc_components` for the parts."""
    return hgc_components(g, config).hgc


def hgc_csv(g, comps: HgcComponents) -> str:
    """CSV export ``node_label,gm,rcp,gamma,hgc,rank`` in HGC ranking order."""
    lines = ["node_label,gm,rcp,gamma,hgc,rank"]
    for rank, i in enumerate(comps.hgc.ranking(), start=1):
        i = int(i)
        lines.append(
            f"{g.label_of(i)},{float(comps.gm.scores[i])!r},"
            f"{float(comps.rcp.scores[i])!r},"
            f"{float(comps.gamma)!r},{float(comps.hgc.scores[i])!r},{rank}"
        )
    return "\n".join(lines) + "\n"
