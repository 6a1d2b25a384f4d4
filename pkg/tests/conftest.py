import random

import pytest

from kegraph.generators import exhaustive
from kegraph.graph import Graph


def connected_graphs(n_max, n_min=1):
    for n in range(n_min, n_max + 1):
        yield from exhaustive(n, connected_only=True)


def seeded_random_graph(n, p, seed):
    rng = random.Random(seed)
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)


@pytest.fixture(scope="session")
def small_connected():
    """All connected labeled graphs up to n=5 (772 graphs), materialized once."""
    return list(connected_graphs(5))
