"""Recognise Cohen-Macaulay bipartite graphs and read off alpha, beta."""
import json
import random

from binedge.decompose import (alpha_beta, decomposition_to_json, random_normal_form,
                               recognize_cm_bipartite)
from binedge.families import build, circ_chain
from binedge.graph import cycle_graph, relabel

G = build(circ_chain([3, 4, 3, 3, 3]))
# scramble the labels so recognition has nothing to lean on
rng = random.Random(1)
perm = list(G.vertices)
rng.shuffle(perm)
H = relabel(G, dict(zip(G.vertices, perm)))
d = recognize_cm_bipartite(H)
# the chain may come back reversed; alpha and beta do not notice
print(json.dumps({k: v for k, v in decomposition_to_json(d).items() if k != "expr"}))

print("C_6:", recognize_cm_bipartite(cycle_graph(6)))

bad = 0
for _ in range(200):
    e = random_normal_form(rng)
    got, want = recognize_cm_bipartite(build(e)), alpha_beta(e)
    bad += not got or (got.alpha, got.beta) != (want.alpha, want.beta)
print("round trips: 200, mismatches:", bad)
