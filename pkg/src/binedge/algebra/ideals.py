"""Binomial edge ideals, P_T primes, sums, intersections and equality tests."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..graph import (Graph, GraphError, component_count, connected_components, cut_point_sets,
                     free_vertices, induced_subgraph, saturate_vertex)
from .groebner import BudgetExceeded, groebner_basis
from .polys import DEFAULT_PRIME, Ideal, PolyRing, RingMismatch

__all__ = [
    "binomial_edge_ideal", "binomial_generators", "ideal_sum", "ideal_intersect",
    "ideal_equal", "ideal_contains", "prime_component", "herzog_check", "ohtani_split",
    "OhtaniSplit", "variables_ideal", "krull_dimension",
]

HERZOG_ALL_MAX = 5
HERZOG_CUT_MAX = 6


def binomial_generators(ring: PolyRing, edges) -> list[dict]:
    n = ring.n
    N = ring.nvars
    out = []
    for i, j in edges:
        i, j = min(i, j), max(i, j)
        a = [0] * N
        a[i - 1] = 1
        a[n + j - 1] = 1
        b = [0] * N
        b[j - 1] = 1
        b[n + i - 1] = 1
        out.append({tuple(a): 1, tuple(b): ring.p - 1})
    return out


def binomial_edge_ideal(G: Graph, p: int = DEFAULT_PRIME) -> Ideal:
    """J_G: one generator x_i y_j - x_j y_i per edge {i, j}, i < j."""
    ring = PolyRing(G.n, p)
    return Ideal(ring, binomial_generators(ring, G.edges))


def variables_ideal(ring: PolyRing, vertices) -> list[dict]:
    out = []
    for v in vertices:
        out.append(ring.x(v))
        out.append(ring.y(v))
    return out


def _same_ring(I: Ideal, J: Ideal) -> PolyRing:
    if I.ring != J.ring:
        raise RingMismatch(f"ideals live in different rings: {I.ring} vs {J.ring}")
    return I.ring


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    ring = _same_ring(I, J)
    return Ideal(ring, I.gens + J.gens)


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    """J is contained in I."""
    _same_ring(I, J)
    gb = I.groebner()
    return all(not gb.reduce(g) for g in J.gens)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    return ideal_contains(I, J) and ideal_contains(J, I)


def ideal_intersect(I: Ideal, J: Ideal, timeout: float | None = None) -> Ideal:
    """I cap J via t*I + (1-t)*J, eliminating the auxiliary t."""
    ring = _same_ring(I, J)
    if I.is_zero() or J.is_zero():
        return Ideal(ring, [])
    ext = ring.with_order("elim", aux=ring.aux + 1)
    t = ring.nvars
    p = ring.p
    gens = []
    for f in I.gens:
        gens.append({e + (1,): c for e, c in f.items()})
    for f in J.gens:
        g = {e + (0,): c for e, c in f.items()}
        for e, c in f.items():
            k = e + (1,)
            v = (g.get(k, 0) - c) % p
            if v:
                g[k] = v
            else:
                g.pop(k, None)
        gens.append(g)
    gb = groebner_basis(Ideal(ext, gens), timeout=timeout)
    kept = [{e[:t]: c for e, c in g.items()} for g in gb.polys
            if all(e[t] == 0 for e in g)]
    return Ideal(ring, kept)


def prime_component(G: Graph, T, p: int = DEFAULT_PRIME) -> Ideal:
    """P_T(G): x_i, y_i for i in T plus J of the completed components of G minus T."""
    T = sorted(set(T))
    for v in T:
        if not isinstance(v, int) or not 1 <= v <= G.n:
            raise GraphError(f"vertex {v!r} outside 1..{G.n}")
    ring = PolyRing(G.n, p)
    gens = variables_ideal(ring, T)
    rest = [v for v in G.vertices if v not in T]
    if rest:
        H, mp = induced_subgraph(G, rest, return_map=True)
        inv = {b: a for a, b in mp.items()}
        for comp in connected_components(H):
            labels = sorted(inv[v] for v in comp)
            gens += binomial_generators(ring, combinations(labels, 2))
    return Ideal(ring, gens)


def krull_dimension(G: Graph) -> int:
    """max over T in C(G) of n - |T| + c(T), the dimension of S/J_G."""
    return max(G.n - len(T) + component_count(G, T) for T in cut_point_sets(G))


def herzog_check(G: Graph, variant: str = "all", p: int = DEFAULT_PRIME,
                 timeout: float | None = None) -> bool:
    """Is J_G the intersection of the P_T(G)?  variant: "all" subsets or "cut" (C(G))."""
    if variant == "all":
        if G.n > HERZOG_ALL_MAX:
            raise BudgetExceeded(f"all-subsets intersection limited to n <= {HERZOG_ALL_MAX}")
        family = [T for r in range(G.n + 1) for T in combinations(G.vertices, r)]
    elif variant == "cut":
        if G.n > HERZOG_CUT_MAX:
            raise BudgetExceeded(f"C(G) intersection limited to n <= {HERZOG_CUT_MAX}")
        family = cut_point_sets(G)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    J = binomial_edge_ideal(G, p)
    acc = None
    for T in family:
        P = prime_component(G, T, p)
        if acc is None:
            acc = P
        elif not ideal_contains(P, acc):
            acc = ideal_intersect(acc, P, timeout=timeout)
    return ideal_equal(acc, J)


@dataclass(frozen=True)
class OhtaniSplit:
    v: int
    Q1: Ideal
    Q2: Ideal
    checks: tuple[bool, bool, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks)


def _J_on_labels(ring: PolyRing, G: Graph, drop=()) -> list[dict]:
    return binomial_generators(ring, [e for e in G.edges if not set(e) & set(drop)])


def ohtani_split(G: Graph, v: int, p: int = DEFAULT_PRIME) -> OhtaniSplit:
    """Q1 = J_{G_v}, Q2 = (x_v, y_v) + J_{G minus v}; checks the three identities.

    checks = (J_G == Q1 cap Q2,
              Q1 + Q2 == (x_v, y_v) + J_{G_v minus v},
              Q2 == (x_v, y_v) + J_G).
    Every ideal keeps the original vertex labels.
    """
    if not isinstance(v, int) or not 1 <= v <= G.n:
        raise GraphError(f"vertex {v!r} outside 1..{G.n}")
    if v in free_vertices(G):
        raise GraphError(f"vertex {v} is free; the split needs a non-free vertex")
    ring = PolyRing(G.n, p)
    Gv = saturate_vertex(G, v)
    J = Ideal(ring, _J_on_labels(ring, G))
    Q1 = Ideal(ring, _J_on_labels(ring, Gv))
    xv = variables_ideal(ring, [v])
    Q2 = Ideal(ring, xv + _J_on_labels(ring, G, drop=[v]))
    c1 = ideal_equal(J, ideal_intersect(Q1, Q2))
    c2 = ideal_equal(ideal_sum(Q1, Q2), Ideal(ring, xv + _J_on_labels(ring, Gv, drop=[v])))
    c3 = ideal_equal(Q2, Ideal(ring, xv + list(J.gens)))
    return OhtaniSplit(v, Q1, Q2, (c1, c2, c3))

