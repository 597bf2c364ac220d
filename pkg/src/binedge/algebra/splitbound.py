"""reg(S/J_G) <= max(reg S/Q1, reg S/Q2, reg S/(Q1+Q2) + 1) on an Ohtani split."""
from __future__ import annotations

from dataclasses import dataclass

from ..graph import Graph
from .betti import regularity_oracle
from .ideals import binomial_edge_ideal, ideal_sum, ohtani_split
from .polys import DEFAULT_PRIME


@dataclass(frozen=True)
class SplitBoundReport:
    v: int
    reg_G: int
    reg_Q1: int
    reg_Q2: int
    reg_sum: int
    split_ok: bool

    @property
    def bound(self) -> int:
        return max(self.reg_Q1, self.reg_Q2, self.reg_sum + 1)

    @property
    def holds(self) -> bool:
        return self.reg_G <= self.bound

    def to_json(self) -> dict:
        return {"vertex": self.v, "reg": self.reg_G, "reg_Q1": self.reg_Q1,
                "reg_Q2": self.reg_Q2, "reg_Q1_plus_Q2": self.reg_sum,
                "bound": self.bound, "holds": self.holds, "split_identities": self.split_ok}


def split_bound_check(G: Graph, v: int, p: int = DEFAULT_PRIME, **kw) -> SplitBoundReport:
    split = ohtani_split(G, v, p)
    regs = [regularity_oracle(I, p=p, **kw)
            for I in (binomial_edge_ideal(G, p), split.Q1, split.Q2,
                      ideal_sum(split.Q1, split.Q2))]
    return SplitBoundReport(v, *regs, split.ok)
