"""Scan every connected graph on at most five vertices against the bounds."""
from binedge.scan import run_scan

rep = run_scan(5, ["mm", "sk", "herzog", "ohtani"])
print(rep["summary"])
tight = [r for r in rep["records"] if r["reg"] == r["c"] and r["n"] == 5]
print(len(tight), "graphs on 5 vertices meet reg = c(G)")
for r in rep["records"][-3:]:
    print(r["n"], r["edges"], "l", r["l"], "reg", r["reg"], "c", r["c"])
