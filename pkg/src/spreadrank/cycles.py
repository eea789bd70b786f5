"""Shortest-cycle structure and the cycle-ratio score.

For every node the graph holds cycles through it; the shortest ones (that
node's girth) are its "associated" cycles. The network's cycle set is the
union of all associated cycles over all nodes, deduplicated by node set.
From it the cycle-number matrix counts, for each pair (i, j), how many
stored cycles contain both nodes; the cycle ratio of i is then
``sum_j c_ij / c_jj`` over all j sharing a cycle with i (the j = i term
included), or 0 for nodes on no cycle.

Enumeration is exact. Triangles are collected globally in one pass (every
node on a triangle has girth 3). Each remaining node v gets a BFS that
pairs internally-disjoint shortest paths: any shortest cycle through v
splits into two such paths joined by a closing edge (odd length) or a
closing node (even length), because on a shortest cycle through v every
member's graph distance from v equals its distance along the cycle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ranking import ScoreMap

__all__ = [
    "CycleSet",
    "CycleNumberMatrix",
    "enumerate_shortest_cycles",
    "cycle_number_matrix",
    "cycle_ratio",
    "cycles_text",
    "matrix_csv",
]


@dataclass(frozen=True)
class CycleSet:
    """Union of per-node shortest cycles, stored as node-id sets.

    ``girth`` maps each node that lies on at least one cycle to the length
    of its shortest cycle; nodes on no cycle are absent.
    """

    n_nodes: int
    cycles: tuple[frozenset[int], ...]
    girth: dict[int, int]


@dataclass(frozen=True, eq=False)
class CycleNumberMatrix:
    """Symmetric pair counts over a cycle set (scipy CSR, int64)."""

    n_nodes: int
    counts: object

    def count(self, i: int, j: int) -> int:
        return int(self.counts[i, j])

    def diagonal(self) -> np.ndarray:
        return np.asarray(self.counts.diagonal()).ravel().astype(np.int64)


def _all_triangles(g) -> list[tuple[int, int, int]]:
    """Every triangle exactly once, via degree-ordered edge orientation."""
    n = g.n_nodes
    deg = g.degrees
    order = np.lexsort((np.arange(n), deg))
    rank = np.empty(n, dtype=np.int64)
    rank[order] = np.arange(n)
    higher = []
    for u in range(n):
        nbrs = g.neighbors(u)
        higher.append(nbrs[rank[nbrs] > rank[u]])
    triangles = []
    for u in range(n):
        for v in higher[u]:
            v = int(v)
            common = np.intersect1d(higher[u], higher[v], assume_unique=True)
            for w in common:
                triangles.append((u, v, int(w)))
    return triangles


def _min_cycles_through(v: int, adj: list, adj_sets: list[set[int]]):
    """All shortest cycles through ``v``: (girth, set of frozensets).

    Returns (None, empty set) when no cycle passes through v. BFS levels
    are grown one at a time; at depth m the candidate closures are a node
    at level m with two level-(m-1) predecessors (cycle length 2m) or an
    edge inside level m (length 2m + 1). A candidate only counts if the two
    shortest paths back to v share no node besides v.
    """
    dist = {v: 0}
    preds: dict[int, list[int]] = {v: []}
    frontier = [v]
    paths_cache: dict[int, list[frozenset[int]]] = {v: [frozenset((v,))]}

    def all_paths(x: int) -> list[frozenset[int]]:
        # every shortest v->x path as its node set (levels force the order)
        cached = paths_cache.get(x)
        if cached is None:
            cached = [
                base | {x} for p in preds[x] for base in all_paths(p)
            ]
            paths_cache[x] = cached
        return cached

    m = 0
    while frontier:
        m += 1
        nxt: list[int] = []
        for u in frontier:
            for w in adj[u]:
                w = int(w)
                if w not in dist:
                    dist[w] = m
                    preds[w] = [u]
                    nxt.append(w)
                elif dist[w] == m:
                    preds[w].append(u)
        found: set[frozenset[int]] = set()
        # even closures: length 2m through a level-m node with two parents
        if m >= 2:
            for w in nxt:
                ps = preds[w]
                for ai in range(len(ps)):
                    for bi in range(ai + 1, len(ps)):
                        for pa in all_paths(ps[ai]):
                            for pb in all_paths(ps[bi]):
                                if len(pa & pb) == 1:
                                    found.add(pa | pb | {w})
        if found:
            return 2 * m, found
        # odd closures: length 2m + 1 through an edge inside level m
        level_m = [u for u in nxt]
        in_level = set(level_m)
        for a in level_m:
            for b in adj_sets[a] & in_level:
                if b <= a:
                    continue
                for pa in all_paths(a):
                    for pb in all_paths(b):
                        if len(pa & pb) == 1:
                            found.add(pa | pb)
        if found:
            return 2 * m + 1, found
        frontier = nxt
    return None, set()


def enumerate_shortest_cycles(g) -> CycleSet:
    """Per-node shortest cycles for every node, deduplicated network-wide."""
    n = g.n_nodes
    deg = g.degrees
    cycles: set[frozenset[int]] = set()
    girth: dict[int, int] = {}

    for tri in _all_triangles(g):
        cycles.add(frozenset(tri))
        for u in tri:
            girth[u] = 3

    adj = None
    adj_sets = None
    for v in range(n):
        if v in girth or deg[v] < 2:
            continue
        if adj is None:
            adj = [g.neighbors(u) for u in range(n)]
            adj_sets = g.adjacency_sets()
        length, found = _min_cycles_through(v, adj, adj_sets)
        if length is not None:
            girth[v] = length
            cycles.update(found)

    ordered = tuple(sorted(cycles, key=lambda c: (len(c), sorted(c))))
    return CycleSet(n_nodes=n, cycles=ordered, girth=girth)


def cycle_number_matrix(cs: CycleSet) -> CycleNumberMatrix:
    """Pair counts c_ij = number of stored cycles containing both i and j."""
    from scipy.sparse import coo_matrix

    by_len: dict[int, list[list[int]]] = {}
    for cyc in cs.cycles:
        by_len.setdefault(len(cyc), []).append(sorted(cyc))
    rows = []
    cols = []
    for k, items in by_len.items():
        arr = np.asarray(items, dtype=np.int64)
        rows.append(np.repeat(arr, k, axis=1).ravel())
        cols.append(np.tile(arr, (1, k)).ravel())
    if rows:
        r = np.concatenate(rows)
        c = np.concatenate(cols)
    else:
        r = c = np.empty(0, dtype=np.int64)
    counts = coo_matrix(
        (np.ones(r.size, dtype=np.int64), (r, c)),
        shape=(cs.n_nodes, cs.n_nodes),
    ).tocsr()
    counts.sum_duplicates()
    return CycleNumberMatrix(n_nodes=cs.n_nodes, counts=counts)


def _ratio_scores(matrix: CycleNumberMatrix) -> np.ndarray:
    from scipy.sparse import diags

    diag = matrix.diagonal().astype(np.float64)
    inv = np.zeros_like(diag)
    np.divide(1.0, diag, out=inv, where=diag > 0)
    weighted = matrix.counts.astype(np.float64) @ diags(inv)
    return np.asarray(weighted.sum(axis=1)).ravel()


def cycle_ratio(g) -> ScoreMap:
    """Cycle-ratio score: sum over cycle-sharing nodes j of c_ij / c_jj.

    Nodes on no cycle score 0, so trees are all zero.
    """
    cs = enumerate_shortest_cycles(g)
    return cycle_ratio_from(cycle_number_matrix(cs))


def cycle_ratio_from(matrix: CycleNumberMatrix) -> ScoreMap:
    """Cycle-ratio score from a prebuilt cycle-number matrix."""
    return ScoreMap("CR", _ratio_scores(matrix))


def cycles_text(g, cs: CycleSet) -> str:
    """One stored cycle per line as comma-separated node labels (label order)."""
    lines = []
    for cyc in cs.cycles:
        lines.append(",".join(sorted(g.label_of(i) for i in cyc)))
    return "\n".join(lines) + ("\n" if lines else "")


def matrix_csv(g, matrix: CycleNumberMatrix) -> str:
    """Nonzero pair counts as ``i,j,count`` rows (upper triangle, by id)."""
    coo = matrix.counts.tocoo()
    rows = ["i,j,count"]
    entries = sorted(
        (int(i), int(j), int(v))
        for i, j, v in zip(coo.row, coo.col, coo.data)
        if i <= j
    )
    for i, j, v in entries:
        rows.append(f"{g.label_of(i)},{g.label_of(j)},{v}")
    return "\n".join(rows) + "\n"
