"""Shared fixtures: small named graphs, random-graph helpers, dataset lookup."""

import os
import random
from pathlib import Path

import pytest

from spreadrank import Graph

import oracles

# The 8-node fixture with three mutually touching triangles hanging off a
# two-node bridge; small enough to verify every score by hand, rich enough
# to exercise cycles, bridges and leaves at once.
THREE_TRIANGLE_EDGES = [
    ("0", "1"), ("0", "2"), ("1", "2"),
    ("2", "6"), ("2", "7"), ("6", "7"),
    ("5", "6"), ("5", "7"),
    ("4", "5"), ("3", "5"),
]

DATA_ENV = "SPREADRANK_DATA"

DATASET_HINTS = {
    "jazz": "jazz musician collaborations, 198 nodes / 2742 edges",
    "usair": "US air transportation, 332 nodes / 2126 edges",
    "netscience": "coauthorship giant component, 379 nodes / 914 edges",
    "email": "university email contacts, 1133 nodes / 5451 edges",
}


def dataset_path(name: str) -> Path:
    """Locate an optional benchmark dataset or skip the calling test.

    Looks for ``<name>.edges`` (also .txt/.edgelist) under ``$SPREADRANK_DATA``
    and then under ``data/`` next to the package. These files are not
    shipped; the skip message says what to fetch and where to put it.
    """
    roots = []
    env = os.environ.get(DATA_ENV)
    if env:
        roots.append(Path(env))
    roots.append(Path(__file__).resolve().parent.parent / "data")
    for root in roots:
        for suffix in (".edges", ".txt", ".edgelist"):
            candidate = root / f"{name}{suffix}"
            if candidate.exists():
                return candidate
    hint = DATASET_HINTS.get(name, "a benchmark edge list")
    pytest.skip(
        f"dataset {name!r} not present ({hint}); download it from a public "
        f"network repository such as konect.cc or networks.skewed.de and "
        f"save it as data/{name}.edges (or point ${DATA_ENV} at a directory "
        f"holding it)"
    )


@pytest.fixture
def three_triangles() -> Graph:
    return Graph.from_edge_labels(THREE_TRIANGLE_EDGES)


@pytest.fixture
def three_triangles_adj():
    """Oracle-side adjacency of the same fixture, keyed by internal id."""
    g = Graph.from_edge_labels(THREE_TRIANGLE_EDGES)
    edges = [(g.id_of(a), g.id_of(b)) for a, b in THREE_TRIANGLE_EDGES]
    return oracles.adjacency(g.n_nodes, edges)


@pytest.fixture
def path3() -> Graph:
    return Graph.from_edge_labels([("0", "1"), ("1", "2")])


@pytest.fixture
def triangle() -> Graph:
    return Graph.from_edge_labels([("0", "1"), ("1", "2"), ("0", "2")])


@pytest.fixture
def star5() -> Graph:
    return Graph.from_edge_labels(
        [("hub", "a"), ("hub", "b"), ("hub", "c"), ("hub", "d")]
    )


@pytest.fixture
def k4() -> Graph:
    return Graph.from_edge_labels(
        [("0", "1"), ("0", "2"), ("0", "3"), ("1", "2"), ("1", "3"), ("2", "3")]
    )


@pytest.fixture
def single_edge() -> Graph:
    return Graph.from_edge_labels([("0", "1")])


def random_edges(rnd: random.Random, n: int, p: float) -> list[tuple[int, int]]:
    return [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rnd.random() < p
    ]


def random_graph_pair(rnd: random.Random, max_n: int = 8):
    """A random graph as (package Graph, oracle adjacency dict).

    Both sides are built from the same edge list; node ids coincide.
    Isolated nodes are possible and intended.
    """
    n = rnd.randint(2, max_n)
    p = rnd.choice([0.2, 0.35, 0.5, 0.7, 0.9])
    edges = random_edges(rnd, n, p)
    return Graph.from_edges(n, edges), oracles.adjacency(n, edges)


def permuted_copy(g: Graph, rnd: random.Random):
    """Copy of ``g`` with node ids shuffled: returns (new graph, perm)
    where old id i becomes new id perm[i]."""
    n = g.n_nodes
    perm = list(range(n))
    rnd.shuffle(perm)
    edges = [(perm[u], perm[v]) for u, v in g.edges()]
    return Graph.from_edges(n, edges), perm
