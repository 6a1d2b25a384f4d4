import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kegraph.errors import InputError
from kegraph.graph import (
    Graph,
    all_pairs,
    closed_neighborhood,
    delete_edge,
    delete_vertex,
    format_edge_list,
    format_graph6,
    induced,
    is_connected,
    is_independent,
    neighborhood,
    parse_edge_list,
    parse_graph6,
    set_difference_value,
)


def graphs(max_n=8):
    def build(n):
        pairs = all_pairs(n)
        return st.sets(st.sampled_from(pairs) if pairs else st.nothing()).map(
            lambda es: Graph(n, es)
        )

    return st.integers(1, max_n).flatmap(build)


def test_basic_construction():
    g = Graph(4, [(0, 1), (2, 1)])
    assert g.n == 4
    assert g.m == 2
    assert g.has_edge(2, 1) and g.has_edge(1, 0)
    assert g.degree(1) == 2 and g.degree(3) == 0


def test_duplicate_edge_rejected():
    with pytest.raises(InputError):
        Graph(4, [(0, 1), (1, 0)])


def test_self_loop_rejected():
    with pytest.raises(InputError):
        Graph(3, [(1, 1)])


def test_vertex_out_of_range_rejected():
    with pytest.raises(InputError):
        Graph(3, [(0, 3)])


def test_neighborhood_cycle():
    c5 = Graph.cycle(5)
    assert neighborhood(c5, {0}) == frozenset({1, 4})
    assert closed_neighborhood(c5, {0}) == frozenset({0, 1, 4})
    assert neighborhood(c5, {0, 2}) == frozenset({1, 3, 4})


def test_set_difference_value():
    c5 = Graph.cycle(5)
    assert set_difference_value(c5, set()) == 0
    assert set_difference_value(c5, {0}) == -1
    assert set_difference_value(c5, {0, 2}) == -1
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert set_difference_value(star, {1, 2, 3}) == 2


def test_is_independent():
    c5 = Graph.cycle(5)
    assert is_independent(c5, {0, 2})
    assert not is_independent(c5, {0, 1})
    assert is_independent(c5, set())


def test_induced_relabels_and_maps_back():
    c5 = Graph.cycle(5)
    h, labels = induced(c5, {0, 1, 3})
    assert h.n == 3
    assert {(labels[u], labels[v]) for u, v in h.edges} == {(0, 1)}


def test_delete_vertex_and_edge():
    c4 = Graph.cycle(4)
    h, labels = delete_vertex(c4, 2)
    assert h.n == 3 and h.m == 2 and 2 not in labels
    h2 = delete_edge(c4, (0, 1))
    assert h2.n == 4 and h2.m == 3


def test_connectivity():
    assert is_connected(Graph.path(4))
    assert not is_connected(Graph(3, [(0, 1)]))
    assert is_connected(Graph(1, []))


def test_edge_list_round_trip():
    g = Graph(5, [(0, 1), (2, 3), (1, 4)])
    assert parse_edge_list(format_edge_list(g)) == g


def test_graph6_known_values():
    # canonical strings checked against the de-facto format definition
    assert parse_graph6("D?{") == Graph(5, [(0, 4), (1, 4), (2, 4), (3, 4)])
    assert format_graph6(Graph.complete(3)) == "Bw"


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_graph6_round_trip(g):
    assert parse_graph6(format_graph6(g)) == g


@settings(max_examples=200, deadline=None)
@given(graphs())
def test_edge_list_text_round_trip(g):
    assert parse_edge_list(format_edge_list(g)) == g


@settings(max_examples=200, deadline=None)
@given(graphs(6))
def test_neighborhood_monotone(g):
    full = neighborhood(g, range(g.n))
    for v in range(g.n):
        assert neighborhood(g, {v}) <= full


def test_all_pairs_order():
    assert all_pairs(3) == [(0, 1), (0, 2), (1, 2)]
