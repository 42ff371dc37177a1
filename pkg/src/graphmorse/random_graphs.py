"""Seeded random connected simple graphs for property checks."""

from __future__ import annotations

import random
from itertools import combinations

from .graph_model import Graph


def random_connected_graph(rng: random.Random, min_vertices: int = 3, max_vertices: int = 8) -> Graph:
    """Random spanning tree plus random extra edges, with shuffled labels and
    shuffled adjacency order."""
    n = rng.randint(min_vertices, max_vertices)
    perm = list(range(1, n + 1))
    rng.shuffle(perm)
    edges = set()
    for k in range(1, n):
        a, b = perm[k], perm[rng.randrange(k)]
        edges.add((min(a, b), max(a, b)))
    density = rng.random()
    for a, b in combinations(range(1, n + 1), 2):
        if (a, b) not in edges and rng.random() < density * 0.6:
            edges.add((a, b))
    edges = sorted(edges)
    rng.shuffle(edges)
    return Graph.from_edges(n, edges)


def random_graphs(seed: int, count: int, min_vertices: int = 3, max_vertices: int = 8) -> list[Graph]:
    rng = random.Random(seed)
    return [random_connected_graph(rng, min_vertices, max_vertices) for _ in range(count)]


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(1, n + 1), 2))


def complete_bipartite(m: int, n: int) -> Graph:
    return Graph.from_edges(m + n, [(i, m + j) for i in range(1, m + 1) for j in range(1, n + 1)])
