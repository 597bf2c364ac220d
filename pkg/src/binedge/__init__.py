"""Binomial edge ideals: graph families, decompositions, regularity formulas and an
exact F_p engine to check them."""
from .decompose import (CmDecomposition, NotDecomposable, alpha_beta,
                        recognize_cm_bipartite)
from .families import (Circ, F, Fan, FanBlock, FanSpec, Star, build, circ_chain,
                       eval_expr, expr_from_json, expr_to_json, make_F, make_k_fan,
                       star_chain)
from .formulas import RegResult, reg_formula
from .graph import Graph, complete_graph, cycle_graph, path_graph

__version__ = "0.1.0"

__all__ = [
    "CmDecomposition", "NotDecomposable", "alpha_beta", "recognize_cm_bipartite",
    "Circ", "F", "Fan", "FanBlock", "FanSpec", "Star", "build", "circ_chain", "eval_expr",
    "expr_from_json", "expr_to_json", "make_F", "make_k_fan", "star_chain", "RegResult",
    "reg_formula", "Graph", "complete_graph", "cycle_graph", "path_graph",
]
