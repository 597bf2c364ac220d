import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from binedge.families import FanSpec, make_F, make_k_fan
from binedge.graph import (Graph, GraphError, canonical_form, clique_count, closed_neighborhood,
                           complete_graph, connected_components, cut_point_sets, cycle_graph,
                           degree, delete_vertex, free_vertices, graph_from_json, graph_to_json,
                           induced_subgraph, is_bipartite, is_cut_vertex, is_isomorphic,
                           longest_induced_path_length, maximal_cliques, neighbors, path_graph,
                           saturate_vertex)

from conftest import random_relabel


@st.composite
def graphs(draw, n_min=1, n_max=7):
    n = draw(st.integers(n_min, n_max))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [e for e, b in zip(pairs, bits) if b])


# -- brute-force references --------------------------------------------------

def brute_cliques(G):
    cl = [set(A) for r in range(1, G.n + 1) for A in itertools.combinations(G.vertices, r)
          if all(G.has_edge(u, v) for u, v in itertools.combinations(A, 2))]
    return sorted(tuple(sorted(A)) for A in cl if not any(A < B for B in cl))


def brute_lip(G):
    best = 0
    for r in range(2, G.n + 1):
        for seq in itertools.permutations(G.vertices, r):
            if seq[0] > seq[-1]:
                continue
            ok = all(G.has_edge(seq[i], seq[j]) == (j == i + 1)
                     for i in range(r) for j in range(i + 1, r))
            if ok:
                best = max(best, r - 1)
    return best


def brute_components(G, alive):
    H = nx.Graph()
    H.add_nodes_from(alive)
    H.add_edges_from(e for e in G.edges if e[0] in alive and e[1] in alive)
    return nx.number_connected_components(H)


def brute_cut_sets(G):
    out = [()]
    V = set(G.vertices)
    for r in range(1, G.n + 1):
        for T in itertools.combinations(G.vertices, r):
            rest = V - set(T)
            if all(brute_components(G, rest | {i}) < brute_components(G, rest) for i in T):
                out.append(T)
    return sorted(out, key=lambda T: (len(T), T))


def to_nx(G):
    H = nx.Graph()
    H.add_nodes_from(G.vertices)
    H.add_edges_from(G.edges)
    return H


# -- construction and JSON ----------------------------------------------------

def test_graph_rejects_bad_edges():
    for bad in ([(1, 1)], [(1, 2), (2, 1)], [(0, 1)], [(1, 4)], [(1, 2, 3)]):
        with pytest.raises(GraphError):
            Graph(3, bad)
    with pytest.raises(GraphError):
        Graph(65)


def test_json_roundtrip_and_canonical_order():
    G = Graph(4, [(3, 2), (1, 2), (4, 3)])
    assert G.edges == ((1, 2), (2, 3), (3, 4))
    d = graph_to_json(G)
    assert d == {"n": 4, "edges": [[1, 2], [2, 3], [3, 4]]}
    assert graph_from_json(d) == G
    with pytest.raises(GraphError):
        graph_from_json({"n": 3, "edges": [[1, 2], [1, 2]]})
    with pytest.raises(GraphError):
        graph_from_json({"n": 3})


# -- examples -----------------------------------------------------------------

def test_induced_subgraph_examples():
    assert induced_subgraph(complete_graph(4), [1, 2, 3]) == complete_graph(3)
    P4 = path_graph(4)
    assert induced_subgraph(P4, P4.vertices) == P4
    H, mp = induced_subgraph(Graph(5, [(2, 4), (4, 5)]), [2, 4, 5], return_map=True)
    assert mp == {2: 1, 4: 2, 5: 3} and H == path_graph(3)
    with pytest.raises(GraphError):
        induced_subgraph(P4, [0, 1])


def test_fan_base_plus_first_branch_is_whiskered_clique():
    spec = FanSpec.pure_spec(4, [[1, 2], [3]])
    G = make_k_fan(spec)
    first = [rows[0][0] for rows in spec.branch_vertices()]
    H = induced_subgraph(G, list(range(1, 5)) + first)
    assert H.n == 6 and len(H.edges) == 6 + 2
    assert sorted(degree(H, v) for v in H.vertices) == [1, 1, 3, 3, 4, 4]


def test_saturate_examples():
    P4 = path_graph(4)
    assert saturate_vertex(P4, 2).edges == ((1, 2), (1, 3), (2, 3), (3, 4))
    assert saturate_vertex(P4, 1) == P4
    F3 = make_F(3)
    G5 = saturate_vertex(F3, 5)
    # N[5] = {2, 4, 5, 6} becomes the base clique; 1 hangs off 2, 3 off {2, 4}
    assert all(G5.has_edge(u, v) for u, v in itertools.combinations([2, 4, 5, 6], 2))
    pure = make_k_fan(FanSpec.pure_spec(4, [[1, 2]]))
    assert is_isomorphic(G5, pure)
    with pytest.raises(GraphError):
        saturate_vertex(P4, 5)


def test_delete_vertex_examples():
    G = delete_vertex(make_F(3), 5)
    assert G.n == 5 and G == Graph(5, make_F(2).edges)
    assert delete_vertex(complete_graph(3), 1) == complete_graph(2)
    assert delete_vertex(path_graph(4), 2) == Graph(3, [(2, 3)])


def test_free_vertex_examples():
    assert free_vertices(complete_graph(5)) == (1, 2, 3, 4, 5)
    assert free_vertices(path_graph(4)) == (1, 4)
    for m in range(2, 6):
        assert free_vertices(make_F(m)) == (1, 2 * m)


def test_clique_examples():
    assert maximal_cliques(complete_graph(4)) == [(1, 2, 3, 4)]
    assert clique_count(path_graph(6)) == 5
    fan = make_k_fan(FanSpec(3, [((1,), (2,))]))
    assert maximal_cliques(fan) == [(1, 2, 3), (1, 4)]
    assert clique_count(fan) == 2


def test_lip_examples():
    assert longest_induced_path_length(path_graph(6)) == 5
    assert longest_induced_path_length(complete_graph(5)) == 1
    assert longest_induced_path_length(Graph(3)) == 0
    for blocks in ([[1], [2]], [[1, 2], [3]], [[1], [2], [3, 4]]):
        assert longest_induced_path_length(make_k_fan(FanSpec.pure_spec(4, blocks))) == 3


def test_cut_point_examples():
    assert cut_point_sets(complete_graph(4)) == [()]
    assert cut_point_sets(path_graph(3)) == [(), (2,)]
    assert cut_point_sets(path_graph(4)) == [(), (2,), (3,)]
    with pytest.raises(GraphError):
        cut_point_sets(path_graph(21))


def test_small_helpers():
    G = path_graph(4)
    assert neighbors(G, 2) == (1, 3) and closed_neighborhood(G, 2) == (1, 2, 3)
    assert degree(G, 1) == 1 and is_cut_vertex(G, 2) and not is_cut_vertex(G, 1)
    ok, (A, B) = is_bipartite(cycle_graph(6))
    assert ok and set(A) | set(B) == set(range(1, 7))
    assert not is_bipartite(cycle_graph(5))[0]
    assert connected_components(Graph(4, [(1, 3)])) == [(1, 3), (2,), (4,)]


# -- properties ----------------------------------------------------------------

@given(graphs())
@settings(max_examples=120, deadline=None)
def test_cliques_match_brute_force(G):
    got = maximal_cliques(G)
    assert got == brute_cliques(G)
    for A in got:
        assert all(G.has_edge(u, v) for u, v in itertools.combinations(A, 2))


@given(graphs(n_max=6))
@settings(max_examples=80, deadline=None)
def test_lip_matches_brute_force(G):
    assert longest_induced_path_length(G) == brute_lip(G)


@given(graphs(n_max=6))
@settings(max_examples=80, deadline=None)
def test_cut_sets_match_brute_force(G):
    assert cut_point_sets(G) == brute_cut_sets(G)


@given(graphs(), st.data())
@settings(max_examples=100, deadline=None)
def test_saturation_properties(G, data):
    v = data.draw(st.integers(1, G.n))
    Gv = saturate_vertex(G, v)
    assert saturate_vertex(Gv, v) == Gv
    assert (v in free_vertices(G)) == (Gv == G)
    assert delete_vertex(G, v) == induced_subgraph(G, [w for w in G.vertices if w != v])
    assert induced_subgraph(G, G.vertices) == G


@given(graphs())
@settings(max_examples=100, deadline=None)
def test_free_vertices_of_bipartite(G):
    if not is_bipartite(G)[0]:
        return
    assert free_vertices(G) == tuple(v for v in G.vertices if degree(G, v) <= 1)


@given(graphs(), st.randoms(use_true_random=False))
@settings(max_examples=100, deadline=None)
def test_isomorphism_invariance(G, r):
    H = random_relabel(G, r)
    assert canonical_form(G) == canonical_form(H)
    assert clique_count(G) == clique_count(H)
    assert len(free_vertices(G)) == len(free_vertices(H))
    assert longest_induced_path_length(G) == longest_induced_path_length(H)
    assert len(cut_point_sets(G)) == len(cut_point_sets(H))


@given(graphs(n_max=6), graphs(n_max=6))
@settings(max_examples=150, deadline=None)
def test_canonical_form_agrees_with_networkx(G, H):
    if G.n != H.n:
        return
    assert is_isomorphic(G, H) == nx.is_isomorphic(to_nx(G), to_nx(H))


def test_canonical_form_agrees_with_permutation_minimum():
    # brute-force definition: least sorted edge list over all relabelings
    r = random.Random(3)
    for _ in range(30):
        n = r.randint(2, 6)
        G = Graph(n, [e for e in itertools.combinations(range(1, n + 1), 2) if r.random() < .5])
        H = random_relabel(G, r)
        def least(X):
            return min(tuple(sorted((min(p[u - 1], p[v - 1]), max(p[u - 1], p[v - 1]))
                                    for u, v in X.edges))
                       for p in itertools.permutations(range(1, n + 1)))
        assert least(G) == least(H)
        assert (canonical_form(G) == canonical_form(H))
