"""Undirected simple-graph container and basic statistics.

Nodes carry external string labels but are addressed internally by dense
integer ids assigned in first-seen order of the input edge list. Adjacency
is stored CSR-style (``indptr``/``indices``) with each neighbor row sorted,
which keeps the hot loops (BFS, spreading simulation, per-edge set
intersections) friendly to numpy.

Design choices
--------------
* Parsing collapses duplicate edges and drops self-loops; both events are
  counted on the returned :class:`Graph` and logged, never silently ignored.
* ``graph_stats`` reports the mean shortest-path length over ordered
  reachable pairs (i != j) and the mean local clustering coefficient with
  degree < 2 nodes contributing 0.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Graph",
    "GraphStats",
    "ParseError",
    "parse_edge_list",
    "load_edge_list",
    "hop_distances_from",
    "graph_stats",
    "stats_csv",
]

log = logging.getLogger(__name__)


class ParseError(ValueError):
    """Malformed edge-list input. ``line_number`` is 1-based, 0 for whole-file problems."""

    def __init__(self, message: str, line_number: int = 0):
        super().__init__(message)
        self.line_number = line_number


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable undirected simple graph with dense integer node ids."""

    labels: tuple[str, ...]
    indptr: np.ndarray
    indices: np.ndarray
    self_loops_dropped: int = 0
    duplicates_collapsed: int = 0

    @property
    def n_nodes(self) -> int:
        return len(self.labels)

    @property
    def n_edges(self) -> int:
        return self.indices.size // 2

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self.indptr)

    def degree(self, i: int) -> int:
        """Number of neighbors of node ``i``."""
        self._check_node(i)
        return int(self.indptr[i + 1] - self.indptr[i])

    def neighbors(self, i: int) -> np.ndarray:
        """Sorted neighbor ids of node ``i`` (a read-only view)."""
        self._check_node(i)
        return self.indices[self.indptr[i]:self.indptr[i + 1]]

    def has_edge(self, i: int, j: int) -> bool:
        self._check_node(i)
        self._check_node(j)
        row = self.indices[self.indptr[i]:self.indptr[i + 1]]
        k = np.searchsorted(row, j)
        return k < row.size and row[k] == j

    def edges(self):
        """Yield each undirected edge once as an (u, v) pair with u < v."""
        for u in range(self.n_nodes):
            for v in self.neighbors(u):
                if u < v:
                    yield u, int(v)

    def label_of(self, i: int) -> str:
        self._check_node(i)
        return self.labels[i]

    def id_of(self, label: str) -> int:
        try:
            return self._label_index()[label]
        except KeyError:
            raise ValueError(f"unknown node label {label!r}") from None

    def adjacency_sets(self) -> list[set[int]]:
        """Neighbor sets per node, for code that needs O(1) membership tests."""
        return [set(map(int, self.neighbors(u))) for u in range(self.n_nodes)]

    def to_edge_list(self) -> str:
        """Serialize as whitespace-separated label pairs, one edge per line."""
        lines = [f"{self.labels[u]} {self.labels[v]}" for u, v in self.edges()]
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_edge_labels(cls, pairs) -> "Graph":
        """Build a graph from an iterable of (label_u, label_v) pairs.

        Labels are mapped to dense ids in first-seen order. Self-loops are
        dropped and duplicate edges collapsed; both are counted.
        """
        index: dict[str, int] = {}
        edge_set: set[tuple[int, int]] = set()
        self_loops = 0
        duplicates = 0
        for a, b in pairs:
            a, b = str(a), str(b)
            u = index.setdefault(a, len(index))
            v = index.setdefault(b, len(index))
            if u == v:
                self_loops += 1
                continue
            key = (u, v) if u < v else (v, u)
            if key in edge_set:
                duplicates += 1
            else:
                edge_set.add(key)
        n = len(index)
        if n == 0:
            raise ParseError("empty graph: no nodes found in input")
        return cls._from_id_edges(tuple(index), n, edge_set, self_loops, duplicates)

    @classmethod
    def from_edges(cls, n: int, pairs) -> "Graph":
        """Build a graph on nodes 0..n-1 (labels = str(id)) from id pairs."""
        edge_set = set()
        self_loops = 0
        duplicates = 0
        for u, v in pairs:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                self_loops += 1
                continue
            key = (u, v) if u < v else (v, u)
            if key in edge_set:
                duplicates += 1
            else:
                edge_set.add(key)
        if n <= 0:
            raise ValueError("graph must have at least one node")
        labels = tuple(str(i) for i in range(n))
        return cls._from_id_edges(labels, n, edge_set, self_loops, duplicates)

    @classmethod
    def _from_id_edges(cls, labels, n, edge_set, self_loops, duplicates) -> "Graph":
        if self_loops:
            log.warning("dropped %d self-loop(s)", self_loops)
        if duplicates:
            log.warning("collapsed %d duplicate edge(s)", duplicates)
        deg = np.zeros(n, dtype=np.int64)
        for u, v in edge_set:
            deg[u] += 1
            deg[v] += 1
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(deg, out=indptr[1:])
        indices = np.empty(int(indptr[-1]), dtype=np.int64)
        fill = indptr[:-1].copy()
        for u, v in edge_set:
            indices[fill[u]] = v
            fill[u] += 1
            indices[fill[v]] = u
            fill[v] += 1
        for u in range(n):
            indices[indptr[u]:indptr[u + 1]].sort()
        return cls(
            labels=labels,
            indptr=indptr,
            indices=indices,
            self_loops_dropped=self_loops,
            duplicates_collapsed=duplicates,
        )

    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def _check_node(self, i: int) -> None:
        if not (isinstance(i, (int, np.integer)) and 0 <= i < self.n_nodes):
            raise ValueError(f"node id {i!r} out of range [0, {self.n_nodes})")

    def csr_adjacency(self):
        """Unweighted scipy CSR adjacency matrix (float64 ones)."""
        from scipy.sparse import csr_matrix

        data = np.ones(self.indices.size, dtype=np.float64)
        return csr_matrix((data, self.indices, self.indptr),
                          shape=(self.n_nodes, self.n_nodes))


def parse_edge_list(text: str) -> Graph:
    """Parse edge-list text: one edge per line as two whitespace-separated labels.

    Lines whose first non-blank character is ``#`` or ``%`` are comments.
    Blank lines are ignored. Any other line must contain exactly two tokens.

    Raises
    ------
    ParseError
        On a malformed line (carries the 1-based line number) or when the
        input contains no nodes at all.
    """
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(
                f"line {lineno}: expected 2 tokens, got {len(tokens)}: {raw!r}",
                line_number=lineno,
            )
        pairs.append((tokens[0], tokens[1]))
    if not pairs:
        raise ParseError("empty graph: no edges found in input")
    return Graph.from_edge_labels(pairs)


def load_edge_list(path) -> Graph:
    """Read and parse an edge-list file. Wraps parse errors with the file name."""
    from pathlib import Path

    p = Path(path)
    try:
        text = p.read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {p}: {exc}") from exc
    try:
        return parse_edge_list(text)
    except ParseError as exc:
        raise ParseError(f"{p}: {exc}", line_number=exc.line_number) from None


def hop_distances_from(g: Graph, source: int, max_hops: int | None = None) -> dict[int, int]:
    """BFS hop counts from ``source``.

    Returns a map node -> hops for every node within ``max_hops`` (all
    reachable nodes when ``max_hops`` is None). The source maps to 0 and
    unreachable nodes are absent.
    """
    g._check_node(source)
    if max_hops is not None and max_hops < 0:
        raise ValueError("max_hops must be nonnegative")
    dist = {source: 0}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u]
        if max_hops is not None and du >= max_hops:
            continue
        for v in g.neighbors(u):
            v = int(v)
            if v not in dist:
                dist[v] = du + 1
                queue.append(v)
    return dist


def _bfs_levels(g: Graph, source: int) -> np.ndarray:
    """Vectorized BFS levels from one source; -1 marks unreachable nodes."""
    n = g.n_nodes
    dist = np.full(n, -1, dtype=np.int64)
    dist[source] = 0
    frontier = np.array([source], dtype=np.int64)
    level = 0
    indptr, indices = g.indptr, g.indices
    while frontier.size:
        level += 1
        targets = _gather_neighbors(indptr, indices, frontier)
        fresh = targets[dist[targets] < 0]
        if fresh.size == 0:
            break
        fresh = np.unique(fresh)
        dist[fresh] = level
        frontier = fresh
    return dist


def _gather_neighbors(indptr: np.ndarray, indices: np.ndarray,
                      nodes: np.ndarray) -> np.ndarray:
    """Concatenated neighbor lists of ``nodes`` (with repetitions)."""
    starts = indptr[nodes]
    counts = indptr[nodes + 1] - starts
    total = int(counts.sum())
    if total == 0:
        return np.empty(0, dtype=indices.dtype)
    pos = np.arange(total) + np.repeat(starts - np.concatenate(([0], np.cumsum(counts)[:-1])), counts)
    return indices[pos]


@dataclass(frozen=True)
class GraphStats:
    """Summary statistics of one network."""

    name: str
    n_nodes: int
    n_edges: int
    avg_degree: float
    avg_distance: float
    clustering: float
    second_moment: float


def _triangle_degree(g: Graph) -> np.ndarray:
    """Per node, twice the number of triangles containing it."""
    n = g.n_nodes
    tri2 = np.zeros(n, dtype=np.int64)
    for u in range(n):
        row_u = g.neighbors(u)
        for v in row_u:
            v = int(v)
            if v <= u:
                continue
            common = np.intersect1d(row_u, g.neighbors(v), assume_unique=True).size
            tri2[u] += common
            tri2[v] += common
    return tri2


def graph_stats(g: Graph, name: str = "") -> GraphStats:
    """Compute node/edge counts, mean degree, mean distance, mean clustering.

    Mean distance averages shortest-path lengths over ordered reachable
    pairs i != j (0.0 when no such pair exists). Clustering is the mean
    local coefficient; nodes of degree < 2 contribute 0.
    """
    n = g.n_nodes
    deg = g.degrees
    avg_k = float(deg.sum()) / n

    total = 0
    pairs = 0
    if g.n_edges > 0:
        if n <= 512:
            for s in range(n):
                d = _bfs_levels(g, s)
                reach = d > 0
                total += int(d[reach].sum())
                pairs += int(reach.sum())
        else:
            from scipy.sparse.csgraph import dijkstra

            adj = g.csr_adjacency()
            chunk = 256
            for lo in range(0, n, chunk):
                idx = np.arange(lo, min(lo + chunk, n))
                dmat = dijkstra(adj, unweighted=True, indices=idx)
                finite = np.isfinite(dmat)
                finite[np.arange(idx.size), idx] = False
                total += int(dmat[finite].sum())
                pairs += int(finite.sum())
    avg_d = (total / pairs) if pairs else 0.0

    tri2 = _triangle_degree(g)
    with np.errstate(divide="ignore", invalid="ignore"):
        denom = deg * (deg - 1)
        local = np.where(denom > 0, tri2 / np.maximum(denom, 1), 0.0)
    clustering = float(local.mean())

    return GraphStats(
        name=name,
        n_nodes=n,
        n_edges=g.n_edges,
        avg_degree=avg_k,
        avg_distance=float(avg_d),
        clustering=clustering,
        second_moment=float((deg.astype(np.float64) ** 2).mean()),
    )


def stats_csv(stats: GraphStats) -> str:
    """Single-row CSV with header ``network,N,M,avg_k,avg_d,C``."""
    return (
        "network,N,M,avg_k,avg_d,C\n"
        f"{stats.name},{stats.n_nodes},{stats.n_edges},"
        f"{stats.avg_degree!r},{stats.avg_distance!r},{stats.clustering!r}\n"
    )
