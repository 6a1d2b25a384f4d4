import itertools
import random

from conftest import connected_graphs, seeded_random_graph

from kegraph.graph import Graph, is_independent
from kegraph.solvers import (
    Matching,
    all_maximum_matchings,
    alpha,
    alpha_critical_vertices,
    alpha_value,
    brute_mu,
    core,
    corona,
    matching_from_into,
    mu,
    mu_critical_vertices,
    mu_value,
    omega_family,
)


def brute_alpha(g):
    best = 0
    for r in range(g.n, 0, -1):
        for comb in itertools.combinations(range(g.n), r):
            if is_independent(g, comb):
                return r
    return best


def test_alpha_known_values():
    assert alpha_value(Graph.cycle(5)) == 2
    assert alpha_value(Graph.cycle(7)) == 3
    assert alpha_value(Graph.complete(4)) == 1
    assert alpha_value(Graph.path(4)) == 2
    assert alpha_value(Graph.empty(6)) == 6


def test_mu_known_values():
    assert mu_value(Graph.cycle(5)) == 2
    assert mu_value(Graph.complete(4)) == 2
    assert mu_value(Graph.path(5)) == 2
    assert mu_value(Graph.empty(3)) == 0


def test_alpha_witness_is_maximum_independent():
    for g in (Graph.cycle(5), Graph.complete(4), Graph.path(6)):
        size, witness = alpha(g)
        assert len(witness) == size == alpha_value(g)
        assert is_independent(g, witness)


def test_mu_witness_is_valid_matching():
    for g in (Graph.cycle(7), Graph.complete(5), Graph.path(6)):
        size, matching = mu(g)
        assert len(matching) == size
        used = [v for e in matching.edges for v in e]
        assert len(used) == len(set(used))
        assert all(g.has_edge(u, v) for u, v in matching.edges)


def test_exhaustive_alpha_mu_against_brute_force(small_connected):
    for g in small_connected:
        assert alpha_value(g) == brute_alpha(g)
        assert mu_value(g) == brute_mu(g)


def test_blossom_matches_brute_on_random_graphs():
    rng = random.Random(7)
    for _ in range(300):
        n = rng.randint(1, 10)
        g = seeded_random_graph(n, rng.random(), rng.randint(0, 10**9))
        assert mu_value(g) == brute_mu(g)


def test_omega_family_c5():
    fam = omega_family(Graph.cycle(5))
    assert len(fam) == 5
    assert all(len(s) == 2 for s in fam)


def test_core_and_corona():
    c5 = Graph.cycle(5)
    assert core(c5) == frozenset()
    assert corona(c5) == frozenset(range(5))
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert core(star) == frozenset({1, 2, 3})
    assert corona(star) == frozenset({1, 2, 3})


def test_core_is_intersection_corona_is_union(small_connected):
    for g in small_connected:
        fam = omega_family(g)
        inter = frozenset(range(g.n))
        union = frozenset()
        for s in fam:
            inter &= s
            union |= s
        assert core(g) == inter
        assert corona(g) == union


def test_critical_vertices_definitions(small_connected):
    from kegraph.graph import delete_vertex

    for g in small_connected:
        a, m = alpha_value(g), mu_value(g)
        want_alpha = frozenset(
            v for v in range(g.n) if alpha_value(delete_vertex(g, v)[0]) < a
        )
        want_mu = frozenset(
            v for v in range(g.n) if mu_value(delete_vertex(g, v)[0]) < m
        )
        assert alpha_critical_vertices(g) == want_alpha
        assert mu_critical_vertices(g) == want_mu


def test_all_maximum_matchings_c5():
    ms = all_maximum_matchings(Graph.cycle(5))
    assert len(ms) == 5
    assert all(len(m) == 2 for m in ms)


def test_matching_from_into():
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    m = matching_from_into(star, {1, 2, 3}, {0})
    assert m is None  # only one target vertex for three sources
    m2 = matching_from_into(star, {0}, {1, 2, 3})
    assert m2 is not None and len(m2) == 1


def test_matching_partner():
    m = Matching([(0, 1), (2, 3)])
    assert m.partner(0) == 1 and m.partner(3) == 2
    assert m.partner(4) is None
    assert m.saturates(2) and not m.saturates(5)
