from __future__ import annotations

import random
from typing import Iterator

import pytest

from bei._kernel import BACKEND, kernel
from bei.graphs import Graph, from_edge_mask
from bei.survey import ConnectedSurvey, build_survey


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def complete_bipartite(m: int, k: int) -> Graph:
    return Graph(m + k, [(i, m + j) for i in range(m) for j in range(k)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def glued_triangles() -> Graph:
    # two triangles sharing vertex 2
    return Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])


def disjoint_union(a: Graph, b: Graph) -> Graph:
    edges = list(a.edges()) + [(i + a.n, j + a.n) for i, j in b.edges()]
    return Graph(a.n + b.n, edges)


def all_graphs(n: int) -> Iterator[Graph]:
    for mask in range(1 << (n * (n - 1) // 2)):
        yield from_edge_mask(n, mask)


def connected_graphs(n: int) -> Iterator[Graph]:
    for mask in kernel.connected_graph_masks(n):
        yield from_edge_mask(n, mask)


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    while True:
        p = rng.uniform(0.15, 0.7)
        edges = [
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < p
        ]
        G = Graph(n, edges)
        if kernel.ncomponents(G.adj, 0) == 1:
            return G


_SURVEY_CACHE: dict[int, ConnectedSurvey] = {}


def survey_for(n: int) -> ConnectedSurvey:
    if n not in _SURVEY_CACHE:
        _SURVEY_CACHE[n] = build_survey(n)
    return _SURVEY_CACHE[n]


@pytest.fixture(scope="session")
def surveys7() -> dict[int, ConnectedSurvey]:
    """Production invariants of every connected labeled graph with n <= 7."""
    if BACKEND != "compiled":
        print("\nwarning: pure-Python kernel active; the exhaustive sweeps "
              "will be very slow")
    return {n: survey_for(n) for n in range(1, 8)}
