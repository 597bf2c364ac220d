"""Exact algebra over F_p: Groebner bases, ideal operations, Betti tables."""
from .betti import (BACKENDS, BettiTable, betti_table, dimension_and_cm,
                    regularity_oracle)
from .groebner import BudgetExceeded, GroebnerBasis, groebner_basis, normal_form
from .ideals import (OhtaniSplit, binomial_edge_ideal, herzog_check, ideal_contains,
                     ideal_equal, ideal_intersect, ideal_sum, krull_dimension,
                     ohtani_split, prime_component)
from .splitbound import SplitBoundReport, split_bound_check
from .polys import DEFAULT_PRIME, Ideal, PolyRing, RingMismatch

__all__ = [
    "BACKENDS", "BettiTable", "betti_table", "dimension_and_cm", "regularity_oracle",
    "BudgetExceeded", "GroebnerBasis", "groebner_basis", "normal_form", "OhtaniSplit",
    "binomial_edge_ideal", "herzog_check", "ideal_contains", "ideal_equal",
    "ideal_intersect", "ideal_sum", "krull_dimension", "ohtani_split", "prime_component",
    "SplitBoundReport", "split_bound_check", "DEFAULT_PRIME", "Ideal", "PolyRing", "RingMismatch",
]
