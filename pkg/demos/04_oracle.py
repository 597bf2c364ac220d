"""Betti tables over F_p, checked against the formulas where they apply."""
import json
import time

from binedge.algebra import betti_table, dimension_and_cm
from binedge.families import Circ, F, Fan, FanSpec, Star, build, expr_to_json
from binedge.formulas import reg_formula
from binedge.graph import complete_graph, cycle_graph

for name, G in (("K_4", complete_graph(4)), ("C_5", cycle_graph(5))):
    t = betti_table(G)
    print(name, "reg", t.reg, "pd", t.pd)
    print(t.pretty())

for e in (F(3), Circ(F(2), F(2)), Star(F(2), F(2)), Fan(FanSpec.pure_spec(3, [[1], [2]])),
          Circ(F(3), Fan(FanSpec.pure_spec(3, [[1]])), None, 4)):
    G = build(e)
    t0 = time.perf_counter()
    t = betti_table(G, max_vertices=max(7, G.n))
    dim, depth, cm = dimension_and_cm(G, t)
    print(f"{json.dumps(expr_to_json(e))}\n    n={G.n} oracle={t.reg} formula={reg_formula(e).value} "
          f"dim={dim} depth={depth} cm={cm} ({time.perf_counter() - t0:.1f}s)")

# two backends, two primes
G = cycle_graph(6)
tabs = [betti_table(G), betti_table(G, backend="koszul"), betti_table(G, p=101)]
print("C_6 tables agree across backend and prime:", all(x.same_numbers(tabs[0]) for x in tabs))
