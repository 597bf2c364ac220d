"""Build F_m, fan graphs and the two gluings; print what comes out."""
from binedge.families import Circ, F, FanSpec, Star, build, circ_chain, make_F, make_k_fan
from binedge.graph import clique_count, free_vertices, is_isomorphic, longest_induced_path_length

for m in range(1, 5):
    G = make_F(m)
    print(f"F_{m}: {G.n} vertices, {len(G.edges)} edges, free {free_vertices(G)}")

spec = FanSpec.pure_spec(6, [[1, 2, 3], [4, 5]])
G1 = make_k_fan(spec)
print(f"2-pure fan on K_6: n={G1.n}, c(G)={clique_count(G1)}, l={longest_induced_path_length(G1)}")

# o with an F_2 on the right is the same as * with an F_1
for m in (3, 4, 5):
    print(f"F_{m} o F_2 ~ F_{m} * F_1:", is_isomorphic(build(Circ(F(m), F(2))), build(Star(F(m), F(1)))))

G = build(circ_chain([3, 4, 3, 3, 3]))
print("F3 o F4 o F3 o F3 o F3:", G.n, "vertices,", len(G.edges), "edges")
