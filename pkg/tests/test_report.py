import json

from kegraph.graph import Graph
from kegraph.report import SCHEMA_VERSION, build_report, parse_report


def test_c5_report_values():
    r = build_report(Graph.cycle(5), graph_id="c5")
    assert r.n == 5 and r.m == 5
    assert r.alpha == 2 and r.mu == 2 and r.kappa == 1
    assert r.rho_v == 5 and r.rho_e == 5
    assert not r.is_ke and r.is_one_ke
    assert r.parity_class == "almost_bipartite"
    assert r.core == () and r.diadem == ()


def test_round_trip_identity():
    for g in (Graph.cycle(5), Graph.path(6), Graph.complete(4), Graph.empty(3)):
        r = build_report(g)
        assert parse_report(r.to_json()) == r


def test_json_is_deterministic_and_ordered():
    g = Graph(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)])
    a = build_report(g, graph_id="x").to_json()
    b = build_report(g, graph_id="x").to_json()
    assert a == b
    keys = list(json.loads(a).keys())
    assert keys[0] == "schema_version"
    assert keys == sorted(keys, key=keys.index)  # insertion order preserved
    assert json.loads(a)["schema_version"] == SCHEMA_VERSION


def test_sets_serialized_sorted():
    raw = json.loads(build_report(Graph(4, [(0, 1), (0, 2), (0, 3)])).to_json())
    assert raw["core"] == [1, 2, 3]
    assert raw["ker"] == [1, 2, 3]
