"""Finite simple graphs on vertices 1..n and the combinatorics used on them.

Graphs are immutable.  Every operation that shrinks the vertex set relabels
the survivors contiguously, preserving their relative order.
"""
from __future__ import annotations

import json
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

__all__ = [
    "Graph", "GraphError", "complete_graph", "path_graph", "cycle_graph",
    "relabel_map", "induced_subgraph", "delete_vertex", "saturate_vertex",
    "neighbors", "closed_neighborhood", "degree", "connected_components",
    "is_connected", "is_bipartite", "is_cut_vertex", "is_clique",
    "free_vertices", "maximal_cliques", "clique_count",
    "longest_induced_path_length", "cut_point_sets", "component_count",
    "disjoint_union", "relabel", "canonical_form", "canonical_labeling",
    "is_isomorphic", "graph_to_json", "graph_from_json",
]

CUT_POINT_MAX_N = 20
MAX_VERTICES = 64


class GraphError(ValueError):
    """Malformed graph data or an out-of-range vertex label."""


class Graph:
    """A simple graph on ``1..n`` with a canonically ordered edge tuple."""

    __slots__ = ("n", "edges", "__dict__")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise GraphError(f"n must be a non-negative integer, got {n!r}")
        if n > MAX_VERTICES:
            raise GraphError(f"graphs are limited to {MAX_VERTICES} vertices, got {n}")
        seen = set()
        for e in edges:
            if len(e) != 2:
                raise GraphError(f"edge {list(e)!r} does not have two endpoints")
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            for w in (u, v):
                if not 1 <= w <= n:
                    raise GraphError(f"edge endpoint {w} outside 1..{n}")
            pair = (u, v) if u < v else (v, u)
            if pair in seen:
                raise GraphError(f"duplicate edge {list(pair)}")
            seen.add(pair)
        self.n = n
        self.edges = tuple(sorted(seen))

    @cached_property
    def adj(self) -> dict[int, tuple[int, ...]]:
        nb: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for u, v in self.edges:
            nb[u].append(v)
            nb[v].append(u)
        return {v: tuple(sorted(ws)) for v, ws in nb.items()}

    @cached_property
    def adj_sets(self) -> dict[int, frozenset[int]]:
        return {v: frozenset(ws) for v, ws in self.adj.items()}

    @cached_property
    def masks(self) -> list[int]:
        # masks[v] has bit u set iff u ~ v; index 0 unused
        m = [0] * (self.n + 1)
        for u, v in self.edges:
            m[u] |= 1 << v
            m[v] |= 1 << u
        return m

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj_sets.get(u, ())

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, edges={[list(e) for e in self.edges]})"


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(1, n + 1), 2))


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def _check_vertex(G: Graph, v: int) -> None:
    if not isinstance(v, int) or not 1 <= v <= G.n:
        raise GraphError(f"vertex {v!r} outside 1..{G.n}")


def _check_set(G: Graph, A: Iterable[int]) -> list[int]:
    A = sorted(set(A))
    for v in A:
        _check_vertex(G, v)
    return A


def relabel_map(A: Iterable[int]) -> dict[int, int]:
    """Order-preserving map from the labels in ``A`` onto ``1..|A|``."""
    return {old: new for new, old in enumerate(sorted(set(A)), start=1)}


def induced_subgraph(G: Graph, A: Iterable[int], return_map: bool = False):
    A = _check_set(G, A)
    mp = relabel_map(A)
    H = Graph(len(A), [(mp[u], mp[v]) for u, v in G.edges if u in mp and v in mp])
    return (H, mp) if return_map else H


def delete_vertex(G: Graph, v: int, return_map: bool = False):
    _check_vertex(G, v)
    return induced_subgraph(G, [u for u in G.vertices if u != v], return_map)


def relabel(G: Graph, perm: dict[int, int]) -> Graph:
    """Apply a bijection ``perm`` of ``1..n`` to the vertex labels."""
    if sorted(perm) != list(G.vertices) or sorted(perm.values()) != list(G.vertices):
        raise GraphError("relabeling must be a permutation of 1..n")
    return Graph(G.n, [(perm[u], perm[v]) for u, v in G.edges])


def disjoint_union(G: Graph, H: Graph) -> Graph:
    return Graph(G.n + H.n, list(G.edges) + [(u + G.n, v + G.n) for u, v in H.edges])


def neighbors(G: Graph, v: int) -> tuple[int, ...]:
    _check_vertex(G, v)
    return G.adj[v]


def closed_neighborhood(G: Graph, v: int) -> tuple[int, ...]:
    _check_vertex(G, v)
    return tuple(sorted(G.adj[v] + (v,)))


def degree(G: Graph, v: int) -> int:
    _check_vertex(G, v)
    return len(G.adj[v])


def saturate_vertex(G: Graph, v: int) -> Graph:
    """G_v: complete the neighbourhood of ``v`` to a clique."""
    _check_vertex(G, v)
    return Graph(G.n, set(G.edges) | set(combinations(G.adj[v], 2)))


def _components_mask(G: Graph, alive: int) -> list[int]:
    comps = []
    rest = alive
    masks = G.masks
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            b = frontier & -frontier
            frontier ^= b
            new = masks[b.bit_length() - 1] & alive & ~comp
            comp |= new
            frontier |= new
        comps.append(comp)
        rest &= ~comp
    return comps


def _all_mask(G: Graph) -> int:
    return ((1 << (G.n + 1)) - 1) & ~1


def _mask_to_list(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def connected_components(G: Graph) -> list[tuple[int, ...]]:
    comps = [tuple(_mask_to_list(c)) for c in _components_mask(G, _all_mask(G))]
    return sorted(comps)


def component_count(G: Graph, removed: Iterable[int] = ()) -> int:
    """Number of connected components of G with the ``removed`` vertices deleted."""
    alive = _all_mask(G)
    for v in removed:
        alive &= ~(1 << v)
    return len(_components_mask(G, alive))


def is_connected(G: Graph) -> bool:
    return G.n > 0 and component_count(G) == 1


def is_bipartite(G: Graph):
    """Return ``(True, (part1, part2))`` or ``(False, None)``.

    Each component is 2-coloured from its least vertex, which gets side 1.
    """
    side: dict[int, int] = {}
    for start in G.vertices:
        if start in side:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w in G.adj[u]:
                if w not in side:
                    side[w] = 1 - side[u]
                    stack.append(w)
                elif side[w] == side[u]:
                    return False, None
    p1 = tuple(v for v in G.vertices if side[v] == 0)
    p2 = tuple(v for v in G.vertices if side[v] == 1)
    return True, (p1, p2)


def is_cut_vertex(G: Graph, v: int) -> bool:
    _check_vertex(G, v)
    return component_count(G, [v]) > component_count(G)


def is_clique(G: Graph, A: Iterable[int]) -> bool:
    A = list(A)
    return all(G.has_edge(u, w) for u, w in combinations(A, 2))


def maximal_cliques(G: Graph) -> list[tuple[int, ...]]:
    """All inclusion-maximal cliques (Bron-Kerbosch with Tomita pivoting).

    Isolated vertices are maximal cliques of size one.
    """
    masks = G.masks
    out: list[tuple[int, ...]] = []

    def expand(R: int, P: int, X: int) -> None:
        if not P and not X:
            out.append(tuple(_mask_to_list(R)))
            return
        # pivot maximises |P & N(u)|
        PX = P | X
        best, best_cnt = 0, -1
        while PX:
            b = PX & -PX
            PX ^= b
            u = b.bit_length() - 1
            cnt = bin(P & masks[u]).count("1")
            if cnt > best_cnt:
                best, best_cnt = u, cnt
        cand = P & ~masks[best]
        while cand:
            b = cand & -cand
            cand ^= b
            v = b.bit_length() - 1
            expand(R | b, P & masks[v], X & masks[v])
            P &= ~b
            X |= b

    if G.n:
        expand(0, _all_mask(G), 0)
    return sorted(out)


def clique_count(G: Graph) -> int:
    return len(maximal_cliques(G))


def free_vertices(G: Graph) -> tuple[int, ...]:
    count = {v: 0 for v in G.vertices}
    for C in maximal_cliques(G):
        for v in C:
            count[v] += 1
    return tuple(v for v in G.vertices if count[v] == 1)


def longest_induced_path_length(G: Graph) -> int:
    """Number of edges of a longest induced path (0 when there are no edges)."""
    masks = G.masks
    best = 0

    def extend(end: int, inside: int, blocked: int, length: int) -> None:
        # blocked: path vertices plus neighbours of every path vertex but the end
        nonlocal best
        if length > best:
            best = length
        cand = masks[end] & ~blocked & ~inside
        while cand:
            b = cand & -cand
            cand ^= b
            w = b.bit_length() - 1
            extend(w, inside | b, blocked | masks[end] | (1 << end), length + 1)

    for v in G.vertices:
        extend(v, 1 << v, 0, 0)
    return best


def cut_point_sets(G: Graph) -> list[tuple[int, ...]]:
    """The family C(G): the empty set and every T with the cut point property.

    T has the cut point property when each i in T is a cut vertex of the
    graph induced on the complement of T with i added back.
    """
    if G.n > CUT_POINT_MAX_N:
        raise GraphError(f"cut_point_sets enumerates 2^n subsets; n={G.n} exceeds {CUT_POINT_MAX_N}")
    full = _all_mask(G)
    out = [()]
    for Tm in range(1, 1 << G.n):
        T = Tm << 1
        rest = full & ~T
        base = len(_components_mask(G, rest))
        ok = True
        t = T
        while t:
            b = t & -t
            t ^= b
            if len(_components_mask(G, rest | b)) >= base:
                ok = False
                break
        if ok:
            out.append(tuple(_mask_to_list(T)))
    return sorted(out, key=lambda T: (len(T), T))


# -- canonical forms -------------------------------------------------------

def _refine(G: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Refine an ordered partition until every cell is equitable."""
    adj = G.adj_sets
    while True:
        where = {}
        for idx, cell in enumerate(cells):
            for v in cell:
                where[v] = idx
        new: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                new.append(cell)
                continue
            sig: dict[tuple, list[int]] = {}
            for v in cell:
                counts = [0] * len(cells)
                for w in adj[v]:
                    counts[where[w]] += 1
                sig.setdefault(tuple(counts), []).append(v)
            for key in sorted(sig):
                new.append(sig[key])
        if len(new) == len(cells):
            return new
        cells = new


def _certificate(G: Graph, order: list[int]) -> tuple:
    pos = {v: i for i, v in enumerate(order, start=1)}
    return tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in G.edges))


def canonical_labeling(G: Graph) -> dict[int, int]:
    """A canonical relabeling old -> new.

    Colour refinement followed by individualisation of the first
    non-singleton cell; the lexicographically least edge list over all
    leaves of the search tree is the certificate.
    """
    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(G, cells)
        for idx, cell in enumerate(cells):
            if len(cell) > 1:
                for v in cell:
                    rest = [w for w in cell if w != v]
                    search(cells[:idx] + [[v], rest] + cells[idx + 1:])
                return
        order = [c[0] for c in cells]
        cert = _certificate(G, order)
        if best[0] is None or cert < best[0]:
            best[0], best[1] = cert, order

    if G.n == 0:
        return {}
    init: dict[int, list[int]] = {}
    for v in G.vertices:
        init.setdefault(len(G.adj[v]), []).append(v)
    search([init[d] for d in sorted(init)])
    return {v: i for i, v in enumerate(best[1], start=1)}


def canonical_form(G: Graph) -> Graph:
    return relabel(G, canonical_labeling(G))


def is_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or len(G.edges) != len(H.edges):
        return False
    return canonical_form(G) == canonical_form(H)


# -- JSON --------------------------------------------------------------

def graph_to_json(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.edges]}


def graph_from_json(data) -> Graph:
    """Parse ``{"n": int, "edges": [[u, v], ...]}``; raises GraphError naming the bad field."""
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise GraphError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise GraphError("graph JSON must be an object with fields 'n' and 'edges'")
    if "n" not in data:
        raise GraphError("missing field 'n'")
    if "edges" not in data:
        raise GraphError("missing field 'edges'")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise GraphError(f"field 'n' must be an integer, got {n!r}")
    edges = data["edges"]
    if not isinstance(edges, list):
        raise GraphError("field 'edges' must be a list of [u, v] pairs")
    for e in edges:
        if (not isinstance(e, list) or len(e) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in e)):
            raise GraphError(f"field 'edges' has a malformed entry {e!r}")
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise GraphError(f"field 'edges': {exc}") from None
