"""Closed-form regularity values and bounds for reg(S/J_G); no algebra involved."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .decompose import (CmDecomposition, NormalFormError, NotDecomposable, alpha_beta,
                        recognize_cm_bipartite)
from .families import Circ, F, Fan, FanSpec, GraphExpr, Star, eval_expr, make_k_fan
from .graph import Graph, clique_count, longest_induced_path_length

__all__ = [
    "RegResult", "FormulaError", "FTail", "FanTail", "reg_F", "fan_regularity",
    "reg_circ_pair", "reg_fm_circ_fan", "reg_circ_chain", "reg_cm_bipartite",
    "mm_bounds", "sk_upper", "reg_formula", "reg_from_graph", "reg_result_to_json",
]

PROV_F = "F_m: reg 1 for m = 1 (K_2), 3 for m >= 2"
PROV_PURE_FAN = "pure k-fan: reg = k+1"
PROV_STRICT_FAN = "k-fan with every a_ij > j+1: reg = c(G)"
PROV_FAN_BOUNDS = "k-fan: k+1 <= reg <= c(G)"
PROV_PAIR = "F_m1 o F_m2 with m1, m2 >= 3: reg = reg(F_{m1-1}) + reg(F_{m2-1}) = 6"
PROV_F2 = "X o F_2 = X * F_1"
PROV_FM_FAN = "F_m o pure k-fan: k+4 (|W_i| >= 2), k+3 (all blocks singletons), k+2 (m = 2)"
PROV_CHAIN = "o-chain: reg(F_{m1-1}) + sum reg(F_{mi-2}) + reg(H minus {v, f})"
PROV_CM = "Cohen-Macaulay bipartite: reg = 3*alpha + beta"
PROV_STAR = "additivity of reg under *"


class FormulaError(ValueError):
    """Arguments outside the range where a closed formula is known."""


@dataclass(frozen=True)
class RegResult:
    lower: int
    upper: int
    provenance: tuple[str, ...] = field(default=())

    @classmethod
    def exact(cls, v: int, *prov: str) -> "RegResult":
        return cls(v, v, tuple(prov))

    @property
    def is_exact(self) -> bool:
        return self.lower == self.upper

    @property
    def kind(self) -> str:
        return "exact" if self.is_exact else "bounds"

    @property
    def value(self) -> Optional[int]:
        return self.lower if self.is_exact else None

    def __add__(self, other: "RegResult") -> "RegResult":
        prov = tuple(dict.fromkeys(self.provenance + other.provenance + (PROV_STAR,)))
        return RegResult(self.lower + other.lower, self.upper + other.upper, prov)


def reg_result_to_json(r: RegResult) -> dict:
    out: dict = {"value": r.value} if r.is_exact else {"lower": r.lower, "upper": r.upper}
    out["provenance"] = list(r.provenance)
    return out


def reg_F(m: int) -> int:
    if not isinstance(m, int) or m < 1:
        raise FormulaError(f"F_m needs m >= 1, got {m!r}")
    return 1 if m == 1 else 3


def fan_regularity(spec: FanSpec) -> RegResult:
    spec.validate()
    if spec.pure:
        return RegResult.exact(spec.k + 1, PROV_PURE_FAN)
    c = clique_count(make_k_fan(spec))
    if spec.strict:
        return RegResult.exact(c, PROV_STRICT_FAN)
    return RegResult(spec.k + 1, c, (PROV_FAN_BOUNDS,))


def reg_circ_pair(m1: int, m2: int) -> int:
    if m1 < 2 or m2 < 2:
        raise FormulaError(f"F_m1 o F_m2 needs m1, m2 >= 2, got ({m1}, {m2})")
    if m1 >= 3 and m2 >= 3:
        return reg_F(m1 - 1) + reg_F(m2 - 1)
    # F_a o F_2 = F_a * F_1
    other = m1 if m2 == 2 else m2
    return reg_F(other) + reg_F(1)


def _check_block(spec: FanSpec, block: int) -> None:
    if not 0 <= block < spec.k:
        raise FormulaError(f"block index {block} outside 0..{spec.k - 1}")


def reg_fm_circ_fan(m: int, spec: FanSpec, block: int) -> int:
    """reg of F_m o F_k^W(K_n), glued at the first vertex of W_block (0-based).

    The fan's pendant used is the branch vertex of K_{a_{block,1}} = K_2.
    """
    spec.validate()
    if not spec.pure:
        raise FormulaError("the fan must be pure")
    if spec.k < 1:
        raise FormulaError("the fan needs k >= 1 blocks")
    _check_block(spec, block)
    if m < 2:
        raise FormulaError(f"F_m o fan needs m >= 2, got {m}")
    k = spec.k
    if m == 2:
        return k + 2
    if spec.n < 3:
        raise FormulaError("F_m o fan with m >= 3 needs a base K_n with n >= 3")
    if len(spec.blocks[block].W) >= 2:
        return k + 4
    if all(len(b.W) == 1 for b in spec.blocks):
        return k + 3
    raise FormulaError("glued at a singleton block while another block is larger: no formula")


@dataclass(frozen=True)
class FTail:
    n: int


@dataclass(frozen=True)
class FanTail:
    spec: FanSpec
    block: int = 0


def reg_circ_chain(ms, tail: Union[FTail, FanTail]) -> int:
    """F_{m_1} o ... o F_{m_t} o H with H = F_n or a pure fan glued at W_block."""
    ms = list(ms)
    if not ms:
        raise FormulaError("need at least one F before the tail")
    if min(ms) < 3:
        raise FormulaError(f"chain entries must be >= 3, got {ms}")
    total = reg_F(ms[0] - 1) + sum(reg_F(m - 2) for m in ms[1:])
    if isinstance(tail, FTail):
        if tail.n < 3:
            raise FormulaError(f"F_n tail needs n >= 3, got {tail.n}")
        return total + reg_F(tail.n - 1)
    spec = tail.spec
    spec.validate()
    if not spec.pure:
        raise FormulaError("fan tail must be pure")
    _check_block(spec, tail.block)
    if spec.n < 3:
        raise FormulaError("fan tail needs n >= 3")
    if len(spec.blocks[tail.block].W) < 2:
        raise FormulaError("fan tail must be glued inside a block with |W_i| >= 2")
    # H minus {v, f} is again a pure k-fan
    return total + spec.k + 1


def reg_cm_bipartite(e: Union[GraphExpr, CmDecomposition]) -> int:
    st = e.stats if isinstance(e, CmDecomposition) else alpha_beta(e)
    return 3 * st.alpha + st.beta


def mm_bounds(G: Graph) -> tuple[int, int]:
    """(length of a longest induced path, n - 1)."""
    if not G.edges:
        raise FormulaError("bounds need a graph with at least one edge")
    return longest_induced_path_length(G), G.n - 1


def sk_upper(G: Graph) -> int:
    return clique_count(G)


# -- dispatcher ------------------------------------------------------------

def _circ_leaves(e) -> list:
    if isinstance(e, Circ):
        return _circ_leaves(e.left) + [("join", e.f1, e.f2)] + _circ_leaves(e.right)
    return [e]


def _fan_pendant_block(spec: FanSpec, f: Optional[int]) -> int:
    if f is None:
        raise FormulaError("a fan operand needs an explicit pendant vertex")
    for i, rows in enumerate(spec.branch_vertices()):
        if rows and rows[0] == (f,):
            return i
    raise FormulaError(f"vertex {f} is not a pendant branch vertex of the fan")


def _chain_reg(ms: list[int]) -> RegResult:
    if min(ms) < 2:
        raise FormulaError("o needs pendant neighbours of degree >= 2 (F_1 cannot be used)")
    if len(ms) == 1:
        return RegResult.exact(reg_F(ms[0]), PROV_F)
    if len(ms) == 2:
        prov = PROV_PAIR if min(ms) >= 3 else PROV_F2
        return RegResult.exact(reg_circ_pair(*ms), prov)
    if ms[0] == 2:
        return RegResult.exact(1, PROV_F2) + _chain_reg(ms[1:])
    if ms[-1] == 2:
        return _chain_reg(ms[:-1]) + RegResult.exact(1, PROV_F2)
    if min(ms) < 3:
        raise FormulaError(f"interior F_2 in a o-chain has no closed formula: {ms}")
    return RegResult.exact(reg_circ_chain(ms[:-1], FTail(ms[-1])), PROV_CHAIN)


def _chain_fan_reg(ms: list[int], spec: FanSpec, block: int) -> RegResult:
    if min(ms) < 2:
        raise FormulaError("o needs pendant neighbours of degree >= 2 (F_1 cannot be used)")
    if len(ms) == 1:
        return RegResult.exact(reg_fm_circ_fan(ms[0], spec, block), PROV_FM_FAN)
    if ms[0] == 2:
        return RegResult.exact(1, PROV_F2) + _chain_fan_reg(ms[1:], spec, block)
    return RegResult.exact(reg_circ_chain(ms, FanTail(spec, block)), PROV_CHAIN)


def _circ_formula(e: Circ) -> RegResult:
    items = _circ_leaves(e)
    leaves = items[0::2]
    joins = items[1::2]
    fans = [i for i, x in enumerate(leaves) if isinstance(x, Fan)]
    if any(not isinstance(x, (F, Fan)) for x in leaves):
        raise NotImplementedError
    if not fans:
        if any(j[1] is not None or j[2] is not None for j in joins):
            raise NotImplementedError
        return _chain_reg([x.m for x in leaves])
    if len(fans) > 1 or fans[0] not in (0, len(leaves) - 1) or len(leaves) < 2:
        raise FormulaError("a fan may only appear once, at one end of a o-chain")
    spec = leaves[fans[0]].spec
    if not spec.pure:
        raise FormulaError("o with a fan needs a pure fan")
    if fans[0] == len(leaves) - 1:
        inner, fan_join = joins[:-1], joins[-1]
        pend, other = fan_join[2], fan_join[1]
        ms = [x.m for x in leaves[:-1]]
        port_end = "right"
    else:
        inner, fan_join = joins[1:], joins[0]
        pend, other = fan_join[1], fan_join[2]
        ms = [x.m for x in leaves[1:]][::-1]
        port_end = "left"
    if any(j[1] is not None or j[2] is not None for j in inner):
        raise NotImplementedError
    if other is not None:
        # explicit pendant on the F side: must be one of the chain's ports
        built = eval_expr(_rebuild_chain(leaves, fans[0]))
        if other not in (built.left, built.right):
            raise FormulaError(f"vertex {other} is not an end pendant of the chain")
        if other != (built.right if port_end == "right" else built.left):
            ms = ms[::-1]
    return _chain_fan_reg(ms, spec, _fan_pendant_block(spec, pend))


def _rebuild_chain(leaves, fan_pos):
    rest = [x for i, x in enumerate(leaves) if i != fan_pos]
    e = rest[0]
    for x in rest[1:]:
        e = Circ(e, x)
    return e


def reg_formula(e: GraphExpr) -> RegResult:
    """Closed-form regularity of an expression, combining the known theorems."""
    try:
        st = alpha_beta(e)
        return RegResult.exact(3 * st.alpha + st.beta, PROV_CM)
    except NormalFormError:
        pass
    if isinstance(e, F):
        return RegResult.exact(reg_F(e.m), PROV_F)
    if isinstance(e, Fan):
        return fan_regularity(e.spec)
    if isinstance(e, Star):
        return reg_formula(e.left) + reg_formula(e.right)
    if isinstance(e, Circ):
        try:
            return _circ_formula(e)
        except NotImplementedError:
            # explicit attachments inside F-chains: fall back to the graph
            return reg_from_graph(eval_expr(e).graph)
    raise FormulaError(f"not a graph expression: {e!r}")


def reg_from_graph(G: Graph) -> RegResult:
    d = recognize_cm_bipartite(G)
    if isinstance(d, NotDecomposable):
        raise FormulaError(f"no closed formula: graph is not recognised ({d.reason})")
    return RegResult.exact(reg_cm_bipartite(d), PROV_CM)
