"""Recognise connected Cohen-Macaulay bipartite graphs as * / o compositions.

The recogniser splits at gluing points of *, identifies each piece as F_m or
an o-chain of F's, and rebuilds an expression whose evaluation is checked to
be isomorphic to the input.

Conventions:

* The decomposition returned is the finest one.  F_2 (= P_4) is itself
  F_1 * F_1 * F_1, so it is reported as three F_1 parts.  Consequently
  (alpha, beta) is a property of the decomposition, not of the graph;
  3*alpha + beta is the same for all decompositions.
* A piece sequence and each chain can be read in two directions; the
  reading starting at the end with the smallest vertex label is returned,
  which for a built graph is the order it was written in.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .families import F, Circ, GraphExpr, Star, build, circ_chain, expr_to_json, star_chain
from .graph import (Graph, component_count, connected_components, induced_subgraph,
                    is_bipartite, is_connected, is_isomorphic)

__all__ = [
    "CmDecomposition", "NotDecomposable", "recognize_cm_bipartite", "alpha_beta",
    "ABStats", "NormalFormError", "recognize_F", "decomposition_to_json", "parts_of_expr",
    "random_normal_form",
]


class NormalFormError(ValueError):
    """Expression is not a * combination of F's and o-chains of F_m, m >= 3."""


@dataclass(frozen=True)
class ABStats:
    alpha: int
    beta: int
    A: tuple[int, ...]
    B: tuple[int, ...]
    C: tuple[int, ...]
    C_sets: dict = field(default_factory=dict)        # part index -> C_i
    C_prime_sets: dict = field(default_factory=dict)  # part index -> C_i'


@dataclass(frozen=True)
class CmDecomposition:
    parts: tuple                 # ("F", n) or ("chain", (m_1, ..., m_t)), sorted
    stats: ABStats
    expr: GraphExpr              # gluing order preserved

    @property
    def alpha(self) -> int:
        return self.stats.alpha

    @property
    def beta(self) -> int:
        return self.stats.beta


@dataclass(frozen=True)
class NotDecomposable:
    reason: str
    detail: str = ""

    def __bool__(self):
        return False


# -- statistics ----------------------------------------------------------

def _stats(parts) -> ABStats:
    A, B, C = [], [], []
    Cs, Cps = {}, {}
    for idx, (kind, val) in enumerate(parts, start=1):
        if kind == "F":
            (A if val >= 2 else B).append(idx)
        else:
            ms = val
            t = len(ms)
            C.append(idx)
            inner = range(2, t)
            Cs[idx] = tuple(sorted({1, t} | {j for j in inner if ms[j - 1] >= 4}))
            Cps[idx] = tuple(j for j in inner if ms[j - 1] == 3)
    alpha = len(A) + sum(len(s) for s in Cs.values())
    beta = len(B) + sum(len(s) for s in Cps.values())
    return ABStats(alpha, beta, tuple(A), tuple(B), tuple(C), Cs, Cps)


def _part_key(part):
    kind, val = part
    return (0, (val,)) if kind == "F" else (1, tuple(val))


def _collect_parts(e: GraphExpr, out: list) -> None:
    if isinstance(e, Star):
        _collect_parts(e.left, out)
        _collect_parts(e.right, out)
    elif isinstance(e, F):
        out.append(("F", e.m))
    elif isinstance(e, Circ):
        leaves: list = []
        stack = [e]
        while stack:
            x = stack.pop()
            if isinstance(x, Circ):
                stack.append(x.right)
                stack.append(x.left)
            else:
                leaves.append(x)
        if not all(isinstance(x, F) for x in leaves):
            raise NormalFormError("o-chains may only contain F leaves")
        ms = tuple(x.m for x in leaves)
        if min(ms) < 3:
            raise NormalFormError(f"o-chain entries must be >= 3, got {list(ms)}")
        out.append(("chain", ms))
    else:
        raise NormalFormError(f"unsupported node {type(e).__name__} in normal form")


def parts_of_expr(e: GraphExpr) -> list:
    out: list = []
    _collect_parts(e, out)
    return out


def alpha_beta(e: GraphExpr) -> ABStats:
    """alpha and beta (with witness index sets) of a normal-form expression.

    Part indices follow the left-to-right order of the parts in ``e``.
    """
    return _stats(parts_of_expr(e))


# -- recognition ---------------------------------------------------------

def recognize_F(H: Graph) -> Optional[int]:
    """m if H is isomorphic to F_m, else None (staircase test)."""
    if not is_connected(H) or len(H.edges) == 0:
        return None
    ok, parts = is_bipartite(H)
    if not ok:
        return None
    U, V = parts
    m = len(U)
    if len(V) != m or len(H.edges) != m * (m + 1) // 2:
        return None
    order = sorted(U, key=lambda u: len(H.adj[u]))
    prev: frozenset = frozenset()
    for j, u in enumerate(order, start=1):
        nb = H.adj_sets[u]
        if len(nb) != j or not prev < nb:
            return None
        prev = nb
    return m


def _pieces(G: Graph, stars: set) -> list[set]:
    """Edge classes after cutting at the * points; returned as vertex sets."""
    parent = {e: e for e in G.edges}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    incident: dict[int, list] = {v: [] for v in G.vertices}
    for e in G.edges:
        incident[e[0]].append(e)
        incident[e[1]].append(e)
    for v in G.vertices:
        if v in stars:
            continue
        es = incident[v]
        for e in es[1:]:
            parent[find(e)] = find(es[0])
    groups: dict = {}
    for e in G.edges:
        groups.setdefault(find(e), set()).update(e)
    return sorted(groups.values(), key=min)


def _chain_of(H: Graph) -> Union[list[int], NotDecomposable]:
    """Recognise H as F_{m_1} o ... o F_{m_t}; returns the m's read from one end."""
    pend = [v for v in H.vertices if len(H.adj[v]) == 1]
    if len(pend) != 2:
        return NotDecomposable("block not matching F-pattern",
                               f"piece on {H.n} vertices has {len(pend)} pendant vertices")
    p1 = pend[0]
    joints = []
    for c in H.vertices:
        if c in pend or component_count(H, [c]) < 2:
            continue
        rest = [v for v in H.vertices if v != c]
        comps = connected_components(induced_subgraph(H, rest))
        if all(len(comp) >= 2 for comp in comps):
            if len(comps) != 2:
                return NotDecomposable("block not matching F-pattern",
                                       f"vertex {c} separates {len(comps)} pieces")
            back = {v: u for u, v in zip(rest, range(1, len(rest) + 1))}
            side = next(set(back[v] for v in comp) for comp in comps if p1 in
                        {back[v] for v in comp})
            joints.append((len(side), c, side))
    if not joints:
        return NotDecomposable("block not matching F-pattern",
                               f"piece on {H.n} vertices is neither F_m nor a o-chain")
    joints.sort()
    ms = []
    prev_side: set = set()
    prev_joint = None
    allv = set(H.vertices)
    bounds = [(c, side) for _, c, side in joints] + [(None, allv)]
    for c, side in bounds:
        seg = (side - prev_side) - ({prev_joint} if prev_joint else set())
        seg = set(seg)
        if prev_joint is not None:
            seg.add(prev_joint)
        if c is not None:
            seg.add(c)
        sub, mp = induced_subgraph(H, seg, return_map=True)
        extra = [mp[x] for x in (prev_joint, c) if x is not None]
        edges = list(sub.edges)
        k = sub.n
        for x in extra:
            k += 1
            edges.append((x, k))
        m = recognize_F(Graph(k, edges))
        if m is None:
            return NotDecomposable("block not matching F-pattern",
                                   "a chain segment is not F_m with its pendants restored")
        if m < 3:
            return NotDecomposable("chain entry < 3", f"segment recognised as F_{m}")
        ms.append(m)
        prev_side = side
        prev_joint = c
    return ms


def recognize_cm_bipartite(G: Graph, verify: bool = True):
    """CmDecomposition of G, or NotDecomposable(reason) when no decomposition is found."""
    if G.n == 0 or not is_connected(G):
        return NotDecomposable("not connected")
    if not G.edges:
        return NotDecomposable("no edges")
    if not is_bipartite(G)[0]:
        return NotDecomposable("not bipartite")

    stars = {v for v in G.vertices
             if len(G.adj[v]) == 2 and component_count(G, [v]) > 1}
    pieces = _pieces(G, stars)
    # piece adjacency through * points; must form a path
    touching: dict[int, list[int]] = {s: [] for s in stars}
    for idx, vs in enumerate(pieces):
        for s in stars & vs:
            touching[s].append(idx)
    links: dict[int, list] = {i: [] for i in range(len(pieces))}
    for s, (a, b) in ((s, t) for s, t in touching.items()):
        links[a].append((b, s))
        links[b].append((a, s))
    if any(len(v) > 2 for v in links.values()):
        return NotDecomposable("block not matching F-pattern", "a part has more than two gluing points")

    ends = [i for i, v in links.items() if len(v) <= 1]
    seq = [ends[0]]
    seen = {ends[0]}
    while True:
        nxt = [b for b, _ in links[seq[-1]] if b not in seen]
        if not nxt:
            break
        seq.append(nxt[0])
        seen.add(nxt[0])

    recognised = []
    for pos, idx in enumerate(seq):
        vs = pieces[idx]
        H, mp = induced_subgraph(G, vs, return_map=True)
        if H.n == 2:
            recognised.append(("F", 1, None))
            continue
        m = recognize_F(H)
        if m is not None:
            recognised.append(("F", m, None))
            continue
        ms = _chain_of(H)
        if isinstance(ms, NotDecomposable):
            return ms
        # orient: the chain's first F must sit at the gluing point of the previous part
        inv = {v: k for k, v in mp.items()}
        pend = sorted(v for v in H.vertices if len(H.adj[v]) == 1)
        first_end = inv[pend[0]]
        if pos > 0:
            glue = next(s for b, s in links[idx] if b == seq[pos - 1])
            flip = first_end != glue
        else:
            flip = False
            if len(seq) > 1:
                glue = next(s for b, s in links[idx] if b == seq[1])
                flip = first_end == glue
        recognised.append(("chain", tuple(reversed(ms)) if flip else tuple(ms), None))

    fwd = [(k, v) for k, v, _ in recognised]
    rev = [(k, tuple(reversed(v)) if k == "chain" else v) for k, v in reversed(fwd)]
    # read from the end holding the smallest label (construction order for built graphs)
    seq_parts = fwd if min(pieces[seq[0]]) <= min(pieces[seq[-1]]) else rev
    exprs = [F(v) if k == "F" else circ_chain(v) for k, v in seq_parts]
    expr = star_chain(exprs)
    if verify:
        try:
            ok = is_isomorphic(build(expr), G)
        except ValueError:
            ok = False
        if not ok:
            return NotDecomposable("reconstruction mismatch",
                                   "recovered expression does not rebuild the input graph")
    parts = tuple(sorted(seq_parts, key=_part_key))
    return CmDecomposition(parts, _stats(parts), expr)


def decomposition_to_json(d) -> dict:
    if isinstance(d, NotDecomposable):
        return {"decomposable": False, "reason": d.reason, "detail": d.detail}
    st = d.stats
    return {
        "decomposable": True,
        "parts": [{"F": v} if k == "F" else {"chain": list(v)} for k, v in d.parts],
        "A": list(st.A), "B": list(st.B), "C": list(st.C),
        "C_i": {str(i): list(s) for i, s in st.C_sets.items()},
        "C_i_prime": {str(i): list(s) for i, s in st.C_prime_sets.items()},
        "alpha": st.alpha, "beta": st.beta,
        "expr": expr_to_json(d.expr),
    }


def random_normal_form(rng, max_parts: int = 3, max_chain: int = 5, max_m: int = 6,
                       allow_F2: bool = False, max_vertices: int = 64) -> GraphExpr:
    """Random * combination of F_m's and o-chains (DEFAULT attachments).

    F_2 is left out unless asked for: it equals F_1 * F_1 * F_1, so the
    (alpha, beta) of an expression containing it is not what recognition reports.
    Draws are repeated until the graph has at most ``max_vertices`` vertices.
    """
    singles = [m for m in range(1, max_m + 1) if allow_F2 or m != 2]
    while True:
        parts, sizes = [], []
        for _ in range(rng.randint(1, max_parts)):
            if rng.random() < 0.5:
                m = rng.choice(singles)
                parts.append(F(m))
                sizes.append(2 * m)
            else:
                ms = [rng.randint(3, max_m) for _ in range(rng.randint(2, max_chain))]
                parts.append(circ_chain(ms))
                sizes.append(2 * sum(ms) - 3 * (len(ms) - 1))
        if sum(sizes) - (len(sizes) - 1) <= max_vertices:
            return star_chain(parts)
