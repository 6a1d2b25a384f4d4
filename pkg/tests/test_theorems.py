from conftest import connected_graphs

from kegraph.graph import Graph
from kegraph.generators import fixture
from kegraph.theorems import (
    FAIL,
    NOT_APPLICABLE,
    PASS,
    REGISTRY,
    run_suite,
)


def by_id(verdicts):
    return {v.theorem_id: v for v in verdicts}


def test_registry_ids_are_stable():
    assert len(REGISTRY) == 41
    assert "th5" in REGISTRY and "th18_structure" in REGISTRY


def test_c5_suite():
    v = by_id(run_suite(Graph.cycle(5)))
    assert all(x.status in (PASS, NOT_APPLICABLE) for x in v.values())
    # C5 is the canonical almost bipartite non-KE graph: the main results apply
    for tid in ("th5", "cor2", "th18", "th18_structure", "prop18", "lem11"):
        assert v[tid].status == PASS, tid
    assert v["th9"].status == NOT_APPLICABLE  # not KE
    assert v["th10"].status == PASS  # 1-KE


def test_c6_even_cycle_suite():
    v = by_id(run_suite(Graph.cycle(6)))
    assert all(x.status in (PASS, NOT_APPLICABLE) for x in v.values())
    assert v["th9"].status == PASS  # bipartite, hence KE
    assert v["th44"].status == NOT_APPLICABLE  # applies to non-KE graphs only
    assert v["th5"].status == NOT_APPLICABLE  # no odd cycle


def test_fixture_degree_bound_detail():
    v = by_id(run_suite(fixture("fig11222")))
    assert v["degree_bound"].status == PASS
    assert v["cor13"].status == PASS
    assert v["cor13"].detail["rho_v"] == 5
    assert v["cor13"].detail["rhs"] == 4


def test_no_failures_small_connected(small_connected):
    for g in small_connected:
        for v in run_suite(g):
            assert v.status != FAIL, (sorted(g.edges), v.theorem_id, v.detail)


def test_selection_subset():
    verdicts = run_suite(Graph.cycle(5), selection=["th5", "cor7"])
    assert sorted(v.theorem_id for v in verdicts) == ["cor7", "th5"]


def test_suite_is_deterministic():
    g = fixture("fig34-G1")
    a = [(v.theorem_id, v.status, v.detail) for v in run_suite(g, seed=9)]
    b = [(v.theorem_id, v.status, v.detail) for v in run_suite(g, seed=9)]
    assert a == b


def test_verdict_serialization():
    (v,) = run_suite(Graph.cycle(5), selection=["th5"])
    d = v.to_dict()
    assert d["theorem_id"] == "th5" and d["status"] == PASS
    assert isinstance(d["detail"], dict)
