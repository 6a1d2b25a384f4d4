import pytest
from conftest import connected_graphs

from kegraph.errors import DomainError
from kegraph.graph import Graph, delete_edge, delete_vertex, is_independent
from kegraph.ke import classify_ke, deletable_by_criticality, kappa, rho
from kegraph.solvers import alpha_value, mu_value


def test_kappa_known_values():
    assert kappa(Graph(2, [(0, 1)])) == 0
    assert kappa(Graph.cycle(5)) == 1
    assert kappa(Graph.cycle(4)) == 0
    assert kappa(Graph.complete(5)) == 2


def test_classify_ke_witness():
    g = Graph.path(4)
    c = classify_ke(g)
    assert c.is_ke and c.kappa == 0
    assert is_independent(g, c.witness_s)
    assert len(c.witness_s) == alpha_value(g)
    assert len(c.witness_matching) == g.n - len(c.witness_s)
    # every witness edge joins S to its complement
    for u, v in c.witness_matching.edges:
        assert (u in c.witness_s) != (v in c.witness_s)


def test_classify_ke_no_witness_for_non_ke():
    c = classify_ke(Graph.cycle(5))
    assert not c.is_ke and c.is_one_ke
    assert c.witness_s is None and c.witness_matching is None


def test_rho_by_literal_deletion(small_connected):
    for g in small_connected:
        r = rho(g)
        want_v = {v for v in range(g.n) if kappa(delete_vertex(g, v)[0]) == 0}
        want_e = {e for e in g.sorted_edges() if kappa(delete_edge(g, e)) == 0}
        assert set(r.rho_v_witnesses) == want_v
        assert set(r.rho_e_witnesses) == want_e
        assert r.rho_v == len(want_v) and r.rho_e == len(want_e)


def test_rho_c5():
    r = rho(Graph.cycle(5))
    assert r.rho_v == 5 and r.rho_e == 5


def test_deletable_by_criticality_requires_one_ke():
    with pytest.raises(DomainError):
        deletable_by_criticality(Graph(2, [(0, 1)]))


def test_deletable_by_criticality_matches_deletion(small_connected):
    for g in small_connected:
        if kappa(g) != 1:
            continue
        assert deletable_by_criticality(g) == rho(g).rho_v_witnesses


def test_rho_permutation_invariance():
    import random

    rng = random.Random(3)
    g = Graph(7, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6)])
    base = rho(g).rho_v
    for _ in range(10):
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
        assert rho(h).rho_v == base
