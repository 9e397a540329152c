"""Seeded random graphs for property sweeps."""

from __future__ import annotations

import random

from .graph import Graph, connected_components


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p]
    return Graph.from_edges(n, edges)


def sample_connected_graphs(count: int, seed: int = 0, n_min: int = 4, n_max: int = 6,
                            p: float = 0.5, distinct: bool = True) -> list[Graph]:
    """``count`` connected graphs with ``n_min <= n <= n_max`` vertices,
    reproducible from ``seed``; rejected draws are resampled."""
    rng = random.Random(seed)
    out: list[Graph] = []
    seen: set[Graph] = set()
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 1000 * count:
            raise RuntimeError("could not draw enough distinct connected graphs")
        G = random_graph(rng, rng.randint(n_min, n_max), p)
        if len(connected_components(G)) != 1 or (distinct and G in seen):
            continue
        seen.add(G)
        out.append(G)
    return out


def random_ordering(G: Graph, rng: random.Random):
    sigma = list(G.edge_list)
    rng.shuffle(sigma)
    return tuple(sigma)
