"""Graph families F_m and k-fans, the gluing operations * and o, and expressions.

Expressions are small trees: leaves ``F(m)`` and ``Fan(spec)``, internal nodes
``Star`` and ``Circ``.  Every evaluated expression carries a left and a right
*port*: the pendant vertices that DEFAULT attachments consume.  For ``F(m)``
the ports are 1 and 2m; a composite inherits the left port of its left
operand and the right port of its right operand.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Union

from .graph import Graph, free_vertices

__all__ = [
    "FanSpec", "FanBlock", "F", "Fan", "Star", "Circ", "GraphExpr", "Built",
    "FamilyError", "make_F", "make_k_fan", "star_compose", "circ_compose",
    "eval_expr", "build", "expr_to_json", "expr_from_json", "circ_chain",
    "star_chain", "flatten_circ",
]


class FamilyError(ValueError):
    """Invalid family parameters or an illegal gluing."""


# -- fans --------------------------------------------------------------

@dataclass(frozen=True)
class FanBlock:
    W: tuple[int, ...]
    a: tuple[int, ...]

    @property
    def pure(self) -> bool:
        return all(a == j + 1 for j, a in enumerate(self.a, start=1))

    @property
    def strict(self) -> bool:
        """Every branch clique is at least two vertices larger than forced."""
        return all(a > j + 1 for j, a in enumerate(self.a, start=1))


@dataclass(frozen=True)
class FanSpec:
    """K_n with a fan on each block W_i, branch clique sizes a_{i,j}."""

    n: int
    blocks: tuple[FanBlock, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(
            b if isinstance(b, FanBlock) else FanBlock(tuple(b[0]), tuple(b[1]))
            for b in self.blocks))
        self.validate()

    @classmethod
    def pure_spec(cls, n: int, blocks) -> "FanSpec":
        """Pure fan on the given blocks (lists of base vertices)."""
        return cls(n, tuple(FanBlock(tuple(W), tuple(range(2, len(W) + 2))) for W in blocks))

    @property
    def k(self) -> int:
        return len(self.blocks)

    @property
    def pure(self) -> bool:
        return all(b.pure for b in self.blocks)

    @property
    def strict(self) -> bool:
        return all(b.strict for b in self.blocks)

    def validate(self) -> None:
        if not isinstance(self.n, int) or self.n < 2:
            raise FamilyError(f"fan base K_n needs n >= 2, got {self.n!r}")
        used: set[int] = set()
        for i, b in enumerate(self.blocks, start=1):
            if not b.W:
                raise FamilyError(f"block {i}: W_{i} is empty")
            if len(b.a) != len(b.W):
                raise FamilyError(f"block {i}: {len(b.W)} vertices but {len(b.a)} branch sizes")
            if len(set(b.W)) != len(b.W):
                raise FamilyError(f"block {i}: repeated vertex in W_{i}")
            for v in b.W:
                if not 1 <= v <= self.n:
                    raise FamilyError(f"block {i}: vertex {v} outside 1..{self.n}")
                if v in used:
                    raise FamilyError(f"block {i}: vertex {v} already used by another block")
                used.add(v)
            for j, a in enumerate(b.a, start=1):
                if a <= j:
                    raise FamilyError(f"block {i}, branch {j}: need a_{{{i},{j}}} > {j}, got {a}")

    def branch_vertices(self) -> list[list[tuple[int, ...]]]:
        """Fresh vertex labels of each branch clique, block-major, branch-minor."""
        nxt = self.n + 1
        out = []
        for b in self.blocks:
            rows = []
            for j, a in enumerate(b.a, start=1):
                rows.append(tuple(range(nxt, nxt + a - j)))
                nxt += a - j
            out.append(rows)
        return out


def make_k_fan(spec: FanSpec) -> Graph:
    spec.validate()
    edges = set(combinations(range(1, spec.n + 1), 2))
    fresh = spec.branch_vertices()
    total = spec.n
    for b, rows in zip(spec.blocks, fresh):
        for j, new in enumerate(rows, start=1):
            clique = list(b.W[:j]) + list(new)
            edges.update((min(u, v), max(u, v)) for u, v in combinations(clique, 2))
            total += len(new)
    return Graph(total, edges)


# -- F_m ---------------------------------------------------------------

def make_F(m: int) -> Graph:
    """F_m on [2m]: edges {2i, 2j-1} for 1 <= i <= j <= m."""
    if not isinstance(m, int) or m < 1:
        raise FamilyError(f"F_m needs m >= 1, got {m!r}")
    return Graph(2 * m, [(min(2 * i, 2 * j - 1), max(2 * i, 2 * j - 1))
                         for i in range(1, m + 1) for j in range(i, m + 1)])


# -- gluing ------------------------------------------------------------

def _glue(G1: Graph, G2: Graph, drop1: set, drop2: set, ident: tuple[int, int]):
    """Delete ``drop1``/``drop2``, identify ident[1] of G2 with ident[0] of G1.

    G1 survivors are relabeled contiguously in order; G2 survivors other than
    the identified vertex follow in ascending order.
    """
    keep1 = [v for v in G1.vertices if v not in drop1]
    map1 = {v: i for i, v in enumerate(keep1, start=1)}
    keep2 = [v for v in G2.vertices if v not in drop2 and v != ident[1]]
    map2 = {v: i for i, v in enumerate(keep2, start=len(keep1) + 1)}
    map2[ident[1]] = map1[ident[0]]
    edges = [(map1[u], map1[v]) for u, v in G1.edges if u in map1 and v in map1]
    edges += [(map2[u], map2[v]) for u, v in G2.edges if u in map2 and v in map2]
    return Graph(len(keep1) + len(keep2), edges), map1, map2


def star_compose(G1: Graph, f1: int, G2: Graph, f2: int, return_maps: bool = False):
    """(G1, f1) * (G2, f2): identify the free vertices f1 and f2."""
    for G, f, tag in ((G1, f1, "f1"), (G2, f2, "f2")):
        if not isinstance(f, int) or not 1 <= f <= G.n:
            raise FamilyError(f"{tag}={f!r} is not a vertex of its graph")
        if f not in free_vertices(G):
            raise FamilyError(f"{tag}={f} is not a free vertex")
    H, m1, m2 = _glue(G1, G2, set(), set(), (f1, f2))
    return (H, m1, m2) if return_maps else H


def circ_compose(G1: Graph, f1: int, G2: Graph, f2: int, strict: bool = False,
                 return_maps: bool = False):
    """(G1, f1) o (G2, f2): drop the pendants f1, f2 and identify their neighbours.

    The neighbours need degree >= 2, or >= 3 with ``strict``.
    """
    min_deg = 3 if strict else 2
    nbrs = []
    for G, f, tag in ((G1, f1, "f1"), (G2, f2, "f2")):
        if not isinstance(f, int) or not 1 <= f <= G.n:
            raise FamilyError(f"{tag}={f!r} is not a vertex of its graph")
        if len(G.adj[f]) != 1:
            raise FamilyError(f"{tag}={f} is not a pendant vertex")
        v = G.adj[f][0]
        if len(G.adj[v]) < min_deg:
            raise FamilyError(f"neighbour {v} of {tag} has degree {len(G.adj[v])} < {min_deg}")
        nbrs.append(v)
    H, m1, m2 = _glue(G1, G2, {f1}, {f2}, (nbrs[0], nbrs[1]))
    return (H, m1, m2) if return_maps else H


# -- expressions -------------------------------------------------------

@dataclass(frozen=True)
class F:
    m: int


@dataclass(frozen=True)
class Fan:
    spec: FanSpec


@dataclass(frozen=True)
class Star:
    left: "GraphExpr"
    right: "GraphExpr"
    f1: Optional[int] = None
    f2: Optional[int] = None


@dataclass(frozen=True)
class Circ:
    left: "GraphExpr"
    right: "GraphExpr"
    f1: Optional[int] = None
    f2: Optional[int] = None


GraphExpr = Union[F, Fan, Star, Circ]


def circ_chain(ms) -> GraphExpr:
    """Left-nested F_{m_1} o ... o F_{m_t} with DEFAULT attachments."""
    ms = list(ms)
    if not ms:
        raise FamilyError("empty chain")
    e: GraphExpr = F(ms[0])
    for m in ms[1:]:
        e = Circ(e, F(m))
    return e


def star_chain(parts) -> GraphExpr:
    parts = list(parts)
    if not parts:
        raise FamilyError("empty star composition")
    e = parts[0]
    for p in parts[1:]:
        e = Star(e, p)
    return e


def flatten_circ(e: GraphExpr) -> Optional[list[GraphExpr]]:
    """Leaves of a DEFAULT-attached Circ chain, or None if ``e`` is not one."""
    if isinstance(e, Circ):
        if e.f1 is not None or e.f2 is not None:
            return None
        left, right = flatten_circ(e.left), flatten_circ(e.right)
        if left is None or right is None:
            return None
        return left + right
    if isinstance(e, (F, Fan)):
        return [e]
    return None


@dataclass
class Built:
    """An evaluated expression: the graph, its ports, and where each leaf went."""

    graph: Graph
    left: Optional[int]
    right: Optional[int]
    leaves: list[tuple[GraphExpr, tuple[int, ...]]] = field(default_factory=list)


def _resolve(side: Built, given: Optional[int], which: str) -> int:
    if given is not None:
        return given
    port = side.right if which == "right" else side.left
    if port is None:
        raise FamilyError(f"DEFAULT attachment needs a {which} port, but the operand has none; "
                          "give an explicit vertex")
    return port


def eval_expr(e: GraphExpr, strict: bool = False) -> Built:
    if isinstance(e, F):
        G = make_F(e.m)
        return Built(G, 1, 2 * e.m, [(e, tuple(G.vertices))])
    if isinstance(e, Fan):
        G = make_k_fan(e.spec)
        return Built(G, None, None, [(e, tuple(G.vertices))])
    if isinstance(e, (Star, Circ)):
        L = eval_expr(e.left, strict)
        R = eval_expr(e.right, strict)
        f1 = _resolve(L, e.f1, "right")
        f2 = _resolve(R, e.f2, "left")
        if isinstance(e, Star):
            G, m1, m2 = star_compose(L.graph, f1, R.graph, f2, return_maps=True)
        else:
            G, m1, m2 = circ_compose(L.graph, f1, R.graph, f2, strict=strict, return_maps=True)
        left = m1.get(L.left) if L.left is not None and L.left != f1 else None
        right = m2.get(R.right) if R.right is not None and R.right != f2 else None
        leaves = [(leaf, tuple(sorted(m1[v] for v in vs if v in m1))) for leaf, vs in L.leaves]
        leaves += [(leaf, tuple(sorted(m2[v] for v in vs if v in m2))) for leaf, vs in R.leaves]
        return Built(G, left, right, leaves)
    raise FamilyError(f"not a graph expression: {e!r}")


def build(e: GraphExpr, strict: bool = False) -> Graph:
    return eval_expr(e, strict).graph


# -- JSON --------------------------------------------------------------

def expr_to_json(e: GraphExpr):
    if isinstance(e, F):
        return {"F": e.m}
    if isinstance(e, Fan):
        return {"fan": {"n": e.spec.n,
                        "blocks": [{"W": list(b.W), "a": list(b.a)} for b in e.spec.blocks]}}
    if isinstance(e, (Star, Circ)):
        args = [expr_to_json(e.left), expr_to_json(e.right)]
        if e.f1 is not None or e.f2 is not None:
            args += [e.f1, e.f2]
        return {"star" if isinstance(e, Star) else "circ": args}
    raise FamilyError(f"not a graph expression: {e!r}")


def expr_from_json(data, path: str = "$") -> GraphExpr:
    """Parse the expression JSON; errors name the offending field by path."""
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise FamilyError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict) or len(data) != 1:
        raise FamilyError(f"{path}: expected an object with exactly one of 'F', 'fan', 'star', 'circ'")
    (tag, val), = data.items()
    if tag == "F":
        if not isinstance(val, int) or isinstance(val, bool) or val < 1:
            raise FamilyError(f"{path}.F: expected an integer m >= 1, got {val!r}")
        return F(val)
    if tag == "fan":
        if not isinstance(val, dict) or "n" not in val or "blocks" not in val:
            raise FamilyError(f"{path}.fan: expected fields 'n' and 'blocks'")
        blocks = []
        for i, b in enumerate(val["blocks"]):
            if not isinstance(b, dict) or "W" not in b or "a" not in b:
                raise FamilyError(f"{path}.fan.blocks[{i}]: expected fields 'W' and 'a'")
            blocks.append(FanBlock(tuple(b["W"]), tuple(b["a"])))
        try:
            return Fan(FanSpec(val["n"], tuple(blocks)))
        except FamilyError as exc:
            raise FamilyError(f"{path}.fan: {exc}") from None
    if tag in ("star", "circ"):
        if not isinstance(val, list) or len(val) not in (2, 3, 4):
            raise FamilyError(f"{path}.{tag}: expected [e1, e2, f1?, f2?]")
        left = expr_from_json(val[0], f"{path}.{tag}[0]")
        right = expr_from_json(val[1], f"{path}.{tag}[1]")
        fs = list(val[2:]) + [None] * (4 - len(val))
        for i, f in enumerate(fs[:2], start=2):
            if f is not None and (not isinstance(f, int) or isinstance(f, bool)):
                raise FamilyError(f"{path}.{tag}[{i}]: attachment must be a vertex label or null")
        cls = Star if tag == "star" else Circ
        return cls(left, right, fs[0], fs[1])
    raise FamilyError(f"{path}: unknown expression tag {tag!r}")
