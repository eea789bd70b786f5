"""Brute-force reference implementations used to cross-check the package.

Everything in this module is deliberately slow and literal: plain dicts and
sets, exhaustive enumeration over paths, subsets or outcomes, and fractions
where exactness matters. Nothing here imports from the package under test,
so a bug would have to appear independently on both sides to go unnoticed.

Graphs are passed around as ``adj``: a dict mapping every node id to the
set of its neighbors (symmetric, no self loops).
"""

import itertools
import math
from fractions import Fraction
from functools import lru_cache


def adjacency(n, edges):
    """Dict-of-sets adjacency for nodes 0..n-1."""
    adj = {i: set() for i in range(n)}
    for u, v in edges:
        if u != v:
            adj[u].add(v)
            adj[v].add(u)
    return adj


def bfs_hops(adj, source):
    """Hop distances from ``source``; unreachable nodes are absent."""
    dist = {source: 0}
    frontier = [source]
    while frontier:
        nxt = []
        for u in frontier:
            for v in adj[u]:
                if v not in dist:
                    dist[v] = dist[u] + 1
                    nxt.append(v)
        frontier = nxt
    return dist


def effective_distance_oracle(adj, source):
    """Minimum over ALL simple paths of the summed per-hop costs.

    A hop leaving ``u`` costs 1 + log2(deg(u)). No shortest-path algorithm
    here: every simple path out of ``source`` is walked explicitly.
    """
    best = {source: 0.0}

    def walk(u, cost, visited):
        if not adj[u]:
            return
        step = cost + 1.0 + math.log2(len(adj[u]))
        for v in adj[u]:
            if v in visited:
                continue
            if step < best.get(v, math.inf):
                best[v] = step
            visited.add(v)
            walk(v, step, visited)
            visited.remove(v)

    walk(source, 0.0, {source})
    return best


def _shortest_paths_between(adj, s, t):
    """All shortest s-t paths as vertex tuples (exhaustive forward build)."""
    dist = bfs_hops(adj, s)
    if t not in dist:
        return []
    paths = []

    def extend(path):
        u = path[-1]
        if u == t:
            paths.append(tuple(path))
            return
        for v in adj[u]:
            if dist.get(v, -1) == dist[u] + 1 and dist[v] <= dist[t]:
                path.append(v)
                extend(path)
                path.pop()

    extend([s])
    return paths


def betweenness_oracle(adj):
    """Normalized betweenness via explicit enumeration of shortest paths.

    Exact rational arithmetic throughout; the scale 2/((N-1)(N-2)) matches
    counting each unordered endpoint pair once.
    """
    n = len(adj)
    if n < 3:
        return {i: 0.0 for i in adj}
    acc = {i: Fraction(0) for i in adj}
    for s, t in itertools.combinations(adj, 2):
        paths = _shortest_paths_between(adj, s, t)
        if not paths:
            continue
        share = Fraction(1, len(paths))
        for p in paths:
            for v in p[1:-1]:
                acc[v] += share
    scale = Fraction(2, (n - 1) * (n - 2))
    return {i: float(acc[i] * scale) for i in adj}


def _has_spanning_cycle(adj, nodes):
    """True when the induced subgraph on ``nodes`` has a cycle through all
    of them (checked by depth-first search over orderings)."""
    members = set(nodes)
    start = next(iter(members))
    size = len(members)

    def extend(u, visited):
        if len(visited) == size:
            return start in adj[u]
        for v in adj[u]:
            if v in members and v not in visited:
                visited.add(v)
                if extend(v, visited):
                    return True
                visited.remove(v)
        return False

    return extend(start, {start})


def shortest_cycle_sets(adj):
    """Per-node minimal cycles by exhaustive subset search.

    Every node subset of size >= 3 carrying a spanning cycle is a simple
    cycle of the graph; for each node the minimal such length is its girth,
    and the returned set is the union of each node's minimal cycles. Node
    sets identify cycles: a set carrying two distinct spanning cycles has a
    chord, hence a shorter cycle through each member, so it never qualifies.
    """
    nodes = list(adj)
    cycles = set()
    for size in range(3, len(nodes) + 1):
        for subset in itertools.combinations(nodes, size):
            if _has_spanning_cycle(adj, subset):
                cycles.add(frozenset(subset))
    chosen = set()
    for v in nodes:
        through = [c for c in cycles if v in c]
        if not through:
            continue
        girth = min(len(c) for c in through)
        chosen.update(c for c in through if len(c) == girth)
    return chosen


def per_node_girth(adj):
    """Map node -> length of its shortest cycle (absent when on no cycle)."""
    girth = {}
    for cyc in shortest_cycle_sets(adj):
        for v in cyc:
            girth[v] = min(girth.get(v, math.inf), len(cyc))
    # shortest_cycle_sets keeps only minimal cycles, so the min is exact
    return {v: int(l) for v, l in girth.items()}


def cycle_ratio_oracle(adj):
    """Cycle-ratio scores from the exhaustively enumerated cycle set."""
    cycles = shortest_cycle_sets(adj)
    count = {i: {j: 0 for j in adj} for i in adj}
    for cyc in cycles:
        for i in cyc:
            for j in cyc:
                count[i][j] += 1
    scores = {}
    for i in adj:
        if count[i][i] == 0:
            scores[i] = 0.0
        else:
            scores[i] = sum(
                count[i][j] / count[j][j] for j in adj if count[i][j] > 0
            )
    return scores


def constraint_oracle(adj):
    """Burt constraint per node, written as the literal double sum."""
    values = {}
    for i in adj:
        k_i = len(adj[i])
        if k_i == 0:
            values[i] = 0.0
            continue
        total = 0.0
        for j in adj[i]:
            indirect = sum(
                (1.0 / k_i) * (1.0 / len(adj[q])) for q in adj[i] & adj[j]
            )
            total += (1.0 / k_i + indirect) ** 2
        values[i] = total
    return values


def gm_oracle(adj, radius):
    """Gravity scores composed purely from oracle parts (hop truncation)."""
    constraint = constraint_oracle(adj)
    scores = {}
    for i in adj:
        hops = bfs_hops(adj, i)
        ed = effective_distance_oracle(adj, i)
        total = 0.0
        for j, h in hops.items():
            if j == i or h > radius:
                continue
            total += len(adj[i]) * len(adj[j]) / ed[j] ** 2
        scores[i] = math.exp(-constraint[i]) * total
    return scores


def rcp_oracle(adj, horizon, seeds=None):
    """Propagation sum with 1/l^2 damping, iterated literally."""
    if seeds is None:
        seeds = cycle_ratio_oracle(adj)
    current = dict(seeds)
    total = dict(current)
    for level in range(1, horizon + 1):
        current = {
            i: sum(current[j] for j in adj[i]) / level**2 for i in adj
        }
        for i in adj:
            total[i] += current[i]
    return total


def hgc_oracle(adj, radius, horizon):
    """Full hybrid pipeline out of oracle parts only.

    Returns (gm, rcp, gamma, hgc) as dicts/float.
    """
    gm = gm_oracle(adj, radius)
    rcp = rcp_oracle(adj, horizon)
    n = len(adj)
    mean_rcp = sum(rcp.values()) / n
    gamma = 0.0 if mean_rcp == 0 else (sum(gm.values()) / n) / mean_rcp
    hgc = {i: gm[i] + gamma * rcp[i] for i in adj}
    return gm, rcp, gamma, hgc


def sir_final_size_distribution(adj, seeds, beta):
    """Exact distribution of the final outbreak size.

    Synchronous dynamics, one infectious step per node: every susceptible
    node with m infectious neighbors turns infectious with probability
    1-(1-beta)^m, independently; all currently infectious nodes then
    recover. Returns {final_size: probability} by enumerating every
    outcome of every step, memoized on the (infectious, recovered) state.
    """
    nodes = frozenset(adj)

    @lru_cache(maxsize=None)
    def dist(infectious, recovered):
        if not infectious:
            return {len(recovered): 1.0}
        exposed = []
        for v in nodes - infectious - recovered:
            m = len(adj[v] & infectious)
            if m:
                exposed.append((v, 1.0 - (1.0 - beta) ** m))
        settled = recovered | infectious
        out = {}
        for picks in itertools.product((False, True), repeat=len(exposed)):
            prob = 1.0
            newly = set()
            for (v, p_v), hit in zip(exposed, picks):
                prob *= p_v if hit else 1.0 - p_v
                if hit:
                    newly.add(v)
            if prob == 0.0:
                continue
            for size, p in dist(frozenset(newly), settled).items():
                out[size] = out.get(size, 0.0) + prob * p
        return out

    return dist(frozenset(seeds), frozenset())


def sir_mean_and_sd(adj, seeds, beta):
    """Exact mean and standard deviation of the final outbreak size."""
    d = sir_final_size_distribution(adj, seeds, beta)
    mean = sum(size * p for size, p in d.items())
    var = sum((size - mean) ** 2 * p for size, p in d.items())
    return mean, math.sqrt(max(var, 0.0))


def kendall_tau_oracle(a, b):
    """Tau-a by looping over every index pair with exact arithmetic."""
    n = len(a)
    concordant = discordant = 0
    for i, j in itertools.combinations(range(n), 2):
        da = (a[i] > a[j]) - (a[i] < a[j])
        db = (b[i] > b[j]) - (b[i] < b[j])
        if da * db > 0:
            concordant += 1
        elif da * db < 0:
            discordant += 1
    return float(Fraction(2 * (concordant - discordant), n * (n - 1)))


def monotonicity_oracle(scores):
    """Tie penalty by literal grouping of equal values."""
    n = len(scores)
    groups = {}
    for s in scores:
        groups[s] = groups.get(s, 0) + 1
    tied = sum(c * (c - 1) for c in groups.values())
    return (1.0 - tied / (n * (n - 1))) ** 2


def connected_graphs_up_to_iso(max_n):
    """One representative (n, edge list) per connected isomorphism class.

    Exhaustive: every labeled graph on n <= max_n nodes is generated,
    filtered for connectivity, and deduplicated by the minimum edge-set
    image over all node permutations.
    """
    reps = []
    seen = set()
    for n in range(1, max_n + 1):
        slots = list(itertools.combinations(range(n), 2))
        for bits in range(2 ** len(slots)):
            edges = [e for idx, e in enumerate(slots) if bits >> idx & 1]
            adj = adjacency(n, edges)
            if len(bfs_hops(adj, 0)) != n:
                continue
            canon = min(
                tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
                for perm in itertools.permutations(range(n))
            )
            if (n, canon) not in seen:
                seen.add((n, canon))
                reps.append((n, edges))
    return reps
