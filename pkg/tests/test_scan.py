import networkx as nx
import pytest

from binedge.graph import GraphError, is_connected
from binedge.scan import (dump_report, enumerate_connected_graphs, roundtrip_check, run_scan,
                          scan_graph)
from binedge.graph import path_graph


def test_enumeration_counts():
    assert [len(enumerate_connected_graphs(n)) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]
    with pytest.raises(GraphError):
        enumerate_connected_graphs(8)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_enumeration_matches_networkx_atlas(n):
    ours = enumerate_connected_graphs(n)
    assert all(is_connected(G) for G in ours)
    atlas = [H for H in nx.graph_atlas_g() if H.number_of_nodes() == n and nx.is_connected(H)]
    assert len(ours) == len(atlas)
    # each atlas graph is isomorphic to exactly one enumerated graph
    ours_nx = []
    for G in ours:
        H = nx.Graph()
        H.add_nodes_from(G.vertices)
        H.add_edges_from(G.edges)
        ours_nx.append(H)
    for H in atlas:
        assert sum(nx.is_isomorphic(H, X) for X in ours_nx) == 1


def test_enumeration_is_canonical_and_deterministic():
    a = enumerate_connected_graphs(5)
    b = enumerate_connected_graphs(5)
    assert a == b
    assert len({G.edges for G in a}) == 21
    assert a == sorted(a, key=lambda G: (len(G.edges), G.edges))


def test_scan_graph_record():
    rec = scan_graph(path_graph(4), ["mm", "sk", "herzog", "ohtani"])
    assert rec["reg"] == 3 and rec["l"] == 3 and rec["c"] == 3 and rec["pd"] == 3
    assert rec["flags"] == {"mm": True, "sk": True, "herzog": True, "ohtani": True}


def test_scan_n4_report():
    rep = run_scan(4, ["mm", "sk"])
    s = rep["summary"]
    assert s["graphs_per_n"] == {"1": 1, "2": 1, "3": 2, "4": 6}
    assert s["graphs"] == len(rep["records"]) == 10
    assert s["violations_per_check"] == {"mm": 0, "sk": 0} and rep["violations"] == []
    assert rep["config"]["checks"] == ["mm", "sk"]
    only4 = run_scan(4, ["mm"], n_min=4)
    assert only4["summary"]["graphs"] == 6


def test_scan_determinism_and_workers():
    a = dump_report(run_scan(4, ["mm", "sk"], roundtrip=5, seed=3))
    b = dump_report(run_scan(4, ["mm", "sk"], roundtrip=5, seed=3))
    c = dump_report(run_scan(4, ["mm", "sk"], roundtrip=5, seed=3, workers=2))
    assert a == b == c


def test_scan_rejects_unknown_check():
    with pytest.raises(ValueError):
        run_scan(3, ["mm", "nope"])


def test_violation_list_matches_flags():
    rep = run_scan(4, ["mm", "sk", "ohtani"])
    bad = [(r["edges"], k) for r in rep["records"] for k, ok in r["flags"].items() if not ok]
    assert bad == [(v["edges"], v["check"]) for v in rep["violations"]]


def test_roundtrip_check():
    r = roundtrip_check(40, seed=1)
    assert r["count"] == 40 and r["failures"] == []
