import pytest

from kegraph.errors import InputError
from kegraph.generators import (
    GenSpec,
    almost_bipartite_random,
    cycle_plus_trees,
    exhaustive,
    fixture,
    fixture_names,
    fixture_stated,
    generate,
    odd_cycle,
    verify_fixture,
)
from kegraph.graph import Graph, is_connected
from kegraph.odd import ParityClass, fast_classify_parity


def test_every_fixture_matches_its_stated_values():
    for name in fixture_names():
        assert verify_fixture(name) == [], name


def test_fixture_lookup():
    g = fixture("fig11222")
    assert g.n == 10
    assert fixture_stated("fig11222")["alpha"] == 5
    with pytest.raises(InputError):
        fixture("no-such-figure")


def test_odd_cycle():
    assert odd_cycle(2) == Graph.cycle(5)
    with pytest.raises(InputError):
        odd_cycle(0)


def test_cycle_plus_trees_structure():
    for seed in range(30):
        g = cycle_plus_trees(14, seed=seed)
        assert g.n == 14
        assert is_connected(g)
        rep = fast_classify_parity(g)
        assert rep.parity is ParityClass.ALMOST_BIPARTITE
        # unicyclic: tree attachments add exactly n - |V(C)| edges
        assert g.m == g.n


def test_cycle_plus_trees_deterministic():
    assert cycle_plus_trees(16, seed=42) == cycle_plus_trees(16, seed=42)
    assert cycle_plus_trees(16, seed=1) != cycle_plus_trees(16, seed=2)


def test_almost_bipartite_random():
    for seed in range(20):
        g = almost_bipartite_random(10, 0.3, seed=seed)
        assert fast_classify_parity(g).parity is ParityClass.ALMOST_BIPARTITE


def test_exhaustive_counts():
    assert sum(1 for _ in exhaustive(3)) == 8
    assert sum(1 for _ in exhaustive(4, connected_only=True)) == 38
    assert sum(1 for _ in exhaustive(5, connected_only=True)) == 728
    with pytest.raises(InputError):
        next(exhaustive(8))


def test_generate_dispatch():
    (g,) = generate(GenSpec(kind="odd_cycle", k=3))
    assert g == Graph.cycle(7)
    batch = list(generate(GenSpec(kind="cycle_plus_trees", n=12, count=5, seed=3)))
    assert len(batch) == 5
    again = list(generate(GenSpec(kind="cycle_plus_trees", n=12, count=5, seed=3)))
    assert batch == again
    with pytest.raises(InputError):
        list(generate(GenSpec(kind="nope")))
