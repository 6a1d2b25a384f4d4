from collections import Counter

from conftest import connected_graphs

from kegraph.sweep import CHECK_IDS, SweepResult, run_sweep, sweep_n
from kegraph.theorems import run_suite


def test_kernel_agrees_with_reference_suite_up_to_n5():
    """The compiled kernel and the per-graph reference checker must report the
    same status tallies for every check over all connected labeled graphs."""
    ref = {cid: Counter() for cid in CHECK_IDS}
    for g in connected_graphs(5):
        for v in run_suite(g):
            ref[v.theorem_id][v.status] += 1

    results = [sweep_n(n) for n in range(1, 6)]
    for cid in CHECK_IDS:
        agg = Counter()
        for r in results:
            for status, cnt in r.statuses.get(cid, {}).items():
                agg[status] += cnt
        want = {k: v for k, v in ref[cid].items() if v}
        got = {k: v for k, v in agg.items() if v}
        assert got == want, cid


def test_sweep_counts_connected_graphs():
    assert sweep_n(4).graphs == 38
    assert sweep_n(5).graphs == 728


def test_sweep_has_no_failures_n5():
    r = run_sweep(5)
    assert r.fail_total() == 0
    assert r.failures == []


def test_odd_cycle_full_rho_masks_n5():
    r = sweep_n(5)
    # exactly the labeled 5-cycles: (5-1)!/2 = 12 of them
    assert len(r.odd_cycle_full_rho[5]) == 12
    assert r.ab_non_ke[5] == 72


def test_merge():
    a, b = sweep_n(3), sweep_n(4)
    total = a.graphs + b.graphs
    a.merge(b)
    assert a.graphs == total
    assert a.fail_total() == 0
