import itertools
import random

import pytest

from rvc import Graph, is_connected


def naive_simple_paths(g: Graph, u: int, v: int):
    """All simple u-v paths by brute permutation; independent of the library DFS."""
    rest = [w for w in range(g.n) if w not in (u, v)]
    for r in range(len(rest) + 1):
        for mid in itertools.permutations(rest, r):
            path = (u,) + mid + (v,)
            if all(g.has_edge(a, b) for a, b in zip(path, path[1:])):
                yield path


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    """Seeded connected graph on n vertices via rejection sampling."""
    all_edges = list(itertools.combinations(range(n), 2))
    while True:
        p = rng.uniform(0.3, 0.9)
        edges = [e for e in all_edges if rng.random() < p]
        g = Graph(n, edges)
        if is_connected(g):
            return g


@pytest.fixture
def bowtie() -> Graph:
    return Graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
