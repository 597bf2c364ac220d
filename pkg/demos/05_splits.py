"""The Q1/Q2 split at a non-free vertex and the regularity inequality it gives."""
from binedge.algebra import split_bound_check, ohtani_split
from binedge.families import make_F
from binedge.graph import free_vertices

G = make_F(3)
for v in G.vertices:
    if v in free_vertices(G):
        continue
    s = ohtani_split(G, v)
    r = split_bound_check(G, v)
    print(f"v={v}: identities {s.checks}; reg {r.reg_G} <= max({r.reg_Q1}, {r.reg_Q2}, "
          f"{r.reg_sum}+1) = {r.bound}")
