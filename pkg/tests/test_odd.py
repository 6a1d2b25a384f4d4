import random

import pytest
from conftest import connected_graphs, seeded_random_graph

from kegraph.critical import critical_landscape
from kegraph.errors import InputError
from kegraph.graph import Graph
from kegraph.odd import (
    ParityClass,
    canonical_cycle,
    classify_parity,
    fast_classify_parity,
    is_bipartite,
    odd_cycle_census,
    partition_check,
    pendant_decomposition,
)


def test_is_bipartite_basics():
    assert is_bipartite(Graph.cycle(6))[0]
    assert is_bipartite(Graph.path(5))[0]
    ok, cycle = is_bipartite(Graph.cycle(5))
    assert not ok and len(cycle) == 5


def test_census_counts():
    assert odd_cycle_census(Graph.cycle(6))[0] == 0
    assert odd_cycle_census(Graph.cycle(7))[0] == 1
    assert odd_cycle_census(Graph.complete(4), limit=10)[0] == 4


def test_classify_parity_classes():
    assert classify_parity(Graph.cycle(4)).parity is ParityClass.BIPARTITE
    rep = classify_parity(Graph.cycle(5))
    assert rep.parity is ParityClass.ALMOST_BIPARTITE
    assert canonical_cycle(list(rep.odd_cycle)) == canonical_cycle([0, 1, 2, 3, 4])
    assert classify_parity(Graph.complete(4)).parity is ParityClass.MULTI_ODD


def test_fast_classification_matches_census(small_connected):
    for g in small_connected:
        slow = classify_parity(g)
        fast = fast_classify_parity(g)
        assert slow.parity is fast.parity
        if slow.parity is ParityClass.ALMOST_BIPARTITE:
            assert canonical_cycle(list(slow.odd_cycle)) == canonical_cycle(
                list(fast.odd_cycle)
            )


def test_fast_classification_matches_census_random():
    rng = random.Random(5)
    for _ in range(300):
        n = rng.randint(1, 9)
        g = seeded_random_graph(n, rng.random(), rng.randint(0, 10**9))
        assert classify_parity(g).parity is fast_classify_parity(g).parity


def test_canonical_cycle_rotation_reflection():
    base = canonical_cycle([0, 1, 2, 3, 4])
    assert canonical_cycle([2, 3, 4, 0, 1]) == base
    assert canonical_cycle([4, 3, 2, 1, 0]) == base


def test_pendant_decomposition_triangle_with_path():
    # triangle 0-1-2 with path 2-3-4 hanging off vertex 2
    g = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
    dec = pendant_decomposition(g, (0, 1, 2))
    assert dec.components[0][0] == frozenset({0})
    assert dec.components[1][0] == frozenset({1})
    assert dec.components[2][0] == frozenset({2, 3, 4})
    assert dec.n1 == frozenset({3})


def test_pendant_decomposition_rejects_non_cycle():
    g = Graph.path(4)
    with pytest.raises(InputError):
        pendant_decomposition(g, (0, 1, 2))


def test_partition_check_c5():
    g = Graph.cycle(5)
    verdict = partition_check(g, (0, 1, 2, 3, 4), critical_landscape(g))
    assert verdict.ok
    assert verdict.cycle_block == frozenset(range(5))
    assert verdict.diadem_block == frozenset()
