"""Baseline node-ranking methods.

Seven classic spreader-ranking scores over an undirected simple graph:

* ``degree_centrality`` (DC): the raw degree.
* ``betweenness_centrality`` (BC): fraction of shortest paths through a
  node, accumulated over single-source shortest-path DAGs and normalized
  by 2 / ((N - 1)(N - 2)).
* ``closeness_centrality`` (CC): component-scaled closeness,
  (reach / (N - 1)) * (reach / sum of distances).
* ``k_shell`` (KS): iterative peeling index.
* ``local_gravity_model`` (LGM): k_i * k_j / d(i, j)^2 summed over the hop
  ball 0 < d <= radius.
* ``restricted_degree_propagation`` (RDP): degree seeds diffused along
  adjacency with 1/l^2 damping, summed over propagation depths 0..horizon.

The cycle-ratio score (CR) lives in :mod:`spreadrank.cycles` next to the
cycle machinery it is built on.
"""

from __future__ import annotations

import math
from collections import deque

import numpy as np

from .ranking import ScoreMap

__all__ = [
    "degree_centrality",
    "betweenness_centrality",
    "closeness_centrality",
    "k_shell",
    "local_gravity_model",
    "restricted_degree_propagation",
]


def degree_centrality(g) -> ScoreMap:
    """Degree of every node."""
    return ScoreMap("DC", g.degrees.astype(np.float64))


def betweenness_centrality(g) -> ScoreMap:
    """Shortest-path betweenness, normalized by 2 / ((N - 1)(N - 2)).

    Brandes' accumulation: one BFS per source builds the shortest-path DAG
    (path counts sigma and predecessor lists), then dependencies are summed
    walking the BFS stack backwards. Graphs with fewer than 3 nodes have no
    interior pairs and score 0 everywhere.
    """
    n = g.n_nodes
    bc = np.zeros(n)
    if n < 3:
        return ScoreMap("BC", bc)
    adj = [g.neighbors(u) for u in range(n)]
    for s in range(n):
        sigma = np.zeros(n)
        sigma[s] = 1.0
        dist = np.full(n, -1, dtype=np.int64)
        dist[s] = 0
        preds: list[list[int]] = [[] for _ in range(n)]
        stack: list[int] = []
        queue = deque([s])
        while queue:
            u = queue.popleft()
            stack.append(u)
            du = dist[u]
            for v in adj[u]:
                v = int(v)
                if dist[v] < 0:
                    dist[v] = du + 1
                    queue.append(v)
                if dist[v] == du + 1:
                    sigma[v] += sigma[u]
                    preds[v].append(u)
        delta = np.zeros(n)
        for w in reversed(stack):
            coeff = (1.0 + delta[w]) / sigma[w]
            for u in preds[w]:
                delta[u] += sigma[u] * coeff
            if w != s:
                bc[w] += delta[w]
    # each unordered pair was accumulated from both endpoints
    bc *= 1.0 / ((n - 1) * (n - 2))
    return ScoreMap("BC", bc)


def closeness_centrality(g) -> ScoreMap:
    """Component-scaled closeness.

    With ``r`` nodes reachable from i (excluding i) at total distance ``s``,
    the score is (r / (N - 1)) * (r / s); nodes reaching nothing score 0.
    The first factor keeps scores comparable across components of different
    sizes in disconnected graphs.
    """
    from .graph import _bfs_levels

    n = g.n_nodes
    cc = np.zeros(n)
    if n < 2:
        return ScoreMap("CC", cc)
    for i in range(n):
        d = _bfs_levels(g, i)
        reach = d > 0
        r = int(reach.sum())
        if r == 0:
            continue
        s = int(d[reach].sum())
        cc[i] = (r / (n - 1)) * (r / s)
    return ScoreMap("CC", cc)


def k_shell(g) -> ScoreMap:
    """Peeling index: repeatedly delete nodes of current degree <= k.

    Deleted nodes get shell index k; k starts at 1 and increases whenever no
    remaining node qualifies. Every node therefore gets a positive integer
    shell (isolated nodes fall in shell 1).
    """
    n = g.n_nodes
    deg = g.degrees.astype(np.int64).copy()
    adj = [g.neighbors(u) for u in range(n)]
    shell = np.zeros(n, dtype=np.int64)
    alive = np.ones(n, dtype=bool)
    remaining = n
    k = 1
    while remaining > 0:
        queue = deque(np.flatnonzero(alive & (deg <= k)))
        if not queue:
            k += 1
            continue
        while queue:
            u = int(queue.popleft())
            if not alive[u]:
                continue
            alive[u] = False
            shell[u] = k
            remaining -= 1
            for v in adj[u]:
                v = int(v)
                if alive[v]:
                    deg[v] -= 1
                    if deg[v] <= k:
                        queue.append(v)
    return ScoreMap("KS", shell.astype(np.float64))


def local_gravity_model(g, radius: float = 2) -> ScoreMap:
    """Gravity-style score over the hop ball: k_i * k_j / d^2 for 0 < d <= radius.

    ``radius`` may be ``math.inf`` to sum over every reachable node.
    """
    if radius < 1:
        raise ValueError("radius must be at least 1")
    from .graph import _bfs_levels, hop_distances_from

    n = g.n_nodes
    deg = g.degrees.astype(np.float64)
    scores = np.zeros(n)
    unbounded = math.isinf(radius)
    for i in range(n):
        if unbounded:
            d = _bfs_levels(g, i).astype(np.float64)
            mask = d > 0
            scores[i] = deg[i] * float((deg[mask] / d[mask] ** 2).sum())
        else:
            hops = hop_distances_from(g, i, max_hops=int(radius))
            scores[i] = deg[i] * sum(
                deg[j] / d ** 2 for j, d in hops.items() if d > 0
            )
    return ScoreMap("LGM", scores)


def restricted_degree_propagation(g, horizon: int = 2) -> ScoreMap:
    """Degrees diffused along edges with 1/l^2 damping, summed over l = 0..horizon."""
    if horizon < 0:
        raise ValueError("horizon must be nonnegative")
    adj = g.csr_adjacency()
    current = g.degrees.astype(np.float64)
    total = current.copy()
    for level in range(1, horizon + 1):
        current = adj.dot(current) / level ** 2
        total += current
    return ScoreMap("RDP", total)
