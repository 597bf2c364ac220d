import random

import pytest
from hypothesis import given, settings, strategies as st

from binedge.algebra import betti_table, dimension_and_cm
from binedge.decompose import (NormalFormError, NotDecomposable, alpha_beta,
                               decomposition_to_json, random_normal_form,
                               recognize_cm_bipartite)
from binedge.families import (Circ, F, Fan, FanSpec, build, circ_chain, expr_from_json,
                              star_chain)
from binedge.graph import complete_graph, cycle_graph, is_bipartite, is_isomorphic, Graph
from binedge.scan import enumerate_connected_graphs

from conftest import random_relabel


def test_alpha_beta_examples():
    assert (alpha_beta(F(1)).alpha, alpha_beta(F(1)).beta) == (0, 1)
    assert (alpha_beta(F(5)).alpha, alpha_beta(F(5)).beta) == (1, 0)
    st_ = alpha_beta(circ_chain([3, 4, 3, 3, 3]))
    assert (st_.alpha, st_.beta) == (3, 2)
    assert st_.C_sets == {1: (1, 2, 5)} and st_.C_prime_sets == {1: (3, 4)}
    ab = alpha_beta(star_chain([F(1), circ_chain([3, 3]), F(4)]))
    assert (ab.A, ab.B, ab.C) == ((3,), (1,), (2,))
    assert (ab.alpha, ab.beta) == (3, 1)


def test_alpha_beta_rejects_outside_normal_form():
    with pytest.raises(NormalFormError):
        alpha_beta(Circ(F(3), F(2)))
    with pytest.raises(NormalFormError):
        alpha_beta(Fan(FanSpec.pure_spec(3, [[1]])))
    with pytest.raises(NormalFormError):
        alpha_beta(Circ(F(3), Fan(FanSpec.pure_spec(3, [[1]]))))


def test_recognize_examples():
    d = recognize_cm_bipartite(build(F(3)))
    assert d.parts == (("F", 3),) and (d.alpha, d.beta) == (1, 0)
    d = recognize_cm_bipartite(build(circ_chain([3, 4, 3, 3, 3])))
    assert d.parts == (("chain", (3, 4, 3, 3, 3)),)
    assert d.stats.C_sets == {1: (1, 2, 5)} and d.stats.C_prime_sets == {1: (3, 4)}
    assert (d.alpha, d.beta) == (3, 2)
    bad = recognize_cm_bipartite(complete_graph(3))
    assert isinstance(bad, NotDecomposable) and bad.reason == "not bipartite" and not bad


def test_recognize_failures():
    assert recognize_cm_bipartite(Graph(4, [(1, 2), (3, 4)])).reason == "not connected"
    assert recognize_cm_bipartite(Graph(1)).reason == "no edges"
    assert not recognize_cm_bipartite(cycle_graph(4))
    assert not recognize_cm_bipartite(cycle_graph(6))
    # a claw is bipartite but not Cohen-Macaulay
    assert not recognize_cm_bipartite(Graph(4, [(1, 2), (1, 3), (1, 4)]))


def test_F2_is_read_as_three_F1():
    d = recognize_cm_bipartite(build(F(2)))
    assert d.parts == (("F", 1),) * 3
    assert 3 * d.alpha + d.beta == 3 * alpha_beta(F(2)).alpha + alpha_beta(F(2)).beta


def test_json_output():
    d = decomposition_to_json(recognize_cm_bipartite(build(circ_chain([3, 4, 3, 3, 3]))))
    assert d["decomposable"] and d["alpha"] == 3 and d["beta"] == 2
    assert d["C_i"] == {"1": [1, 2, 5]} and d["C_i_prime"] == {"1": [3, 4]}
    assert d["parts"] == [{"chain": [3, 4, 3, 3, 3]}]
    assert expr_from_json(d["expr"]) == circ_chain([3, 4, 3, 3, 3])
    bad = decomposition_to_json(recognize_cm_bipartite(cycle_graph(5)))
    assert bad == {"decomposable": False, "reason": "not bipartite", "detail": ""}


def test_roundtrip_random_normal_forms():
    rng = random.Random(2024)
    for _ in range(150):
        e = random_normal_form(rng)
        G = build(e)
        d = recognize_cm_bipartite(G)
        want = alpha_beta(e)
        assert d, (e, d)
        assert (d.alpha, d.beta) == (want.alpha, want.beta)
        assert is_isomorphic(build(d.expr), G)


@given(st.randoms(use_true_random=False))
@settings(max_examples=40, deadline=None)
def test_recognition_relabel_invariant(r):
    e = random_normal_form(r, max_parts=2, max_chain=3, max_m=5)
    G = build(e)
    if G.n > 24:
        return
    a = recognize_cm_bipartite(G)
    b = recognize_cm_bipartite(random_relabel(G, r))
    assert (a.alpha, a.beta) == (b.alpha, b.beta)
    d = recognize_cm_bipartite(G, verify=False)
    assert is_isomorphic(build(d.expr), G)


def test_reversed_chain_same_statistics():
    for ms in ([3, 4, 3, 3, 3], [3, 5, 3, 4], [4, 3, 3]):
        a = recognize_cm_bipartite(build(circ_chain(ms)))
        b = recognize_cm_bipartite(build(circ_chain(ms[::-1])))
        assert (a.alpha, a.beta) == (b.alpha, b.beta)


def test_recognition_agrees_with_algebraic_cm():
    # independent route: the Betti engine decides Cohen-Macaulayness via depth
    for n in range(2, 7):
        for G in enumerate_connected_graphs(n):
            if not is_bipartite(G)[0]:
                continue
            cm = dimension_and_cm(G, betti_table(G))[2]
            assert bool(recognize_cm_bipartite(G)) == cm, G
