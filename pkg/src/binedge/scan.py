"""Exhaustive small-graph scans of the regularity bounds, with JSON reports."""
from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Iterable, Optional

from .algebra import DEFAULT_PRIME, betti_table, herzog_check, ohtani_split
from .decompose import alpha_beta, random_normal_form, recognize_cm_bipartite
from .families import build, expr_to_json
from .graph import (Graph, GraphError, canonical_form, clique_count, free_vertices,
                    longest_induced_path_length)

__all__ = ["enumerate_connected_graphs", "run_scan", "scan_graph", "CHECKS",
           "HARD_CHECKS", "roundtrip_check", "dump_report", "ENUM_MAX"]

ENUM_MAX = 7
CHECKS = ("mm", "sk", "herzog", "ohtani")
# sk is a conjectured bound: its violations are flagged, the others are failures
HARD_CHECKS = ("mm", "herzog", "ohtani")


@lru_cache(maxsize=None)
def _connected(n: int) -> tuple:
    if n == 1:
        return (Graph(1),)
    seen = {}
    for H in _connected(n - 1):
        for mask in range(1, 1 << (n - 1)):
            nb = [v for v in range(1, n) if mask >> (v - 1) & 1]
            G = canonical_form(Graph(n, list(H.edges) + [(v, n) for v in nb]))
            seen.setdefault(G.edges, G)
    return tuple(sorted(seen.values(), key=lambda G: (len(G.edges), G.edges)))


def enumerate_connected_graphs(n: int) -> list[Graph]:
    """Connected graphs on n vertices up to isomorphism, canonically labelled.

    Every connected graph has a vertex whose removal keeps it connected, so
    extending each class on n-1 vertices by one vertex reaches every class.
    """
    if not isinstance(n, int) or n < 1:
        raise GraphError(f"n must be a positive integer, got {n!r}")
    if n > ENUM_MAX:
        raise GraphError(f"enumeration is limited to n <= {ENUM_MAX}")
    return list(_connected(n))


def scan_graph(G: Graph, checks: Iterable[str] = ("mm", "sk"), p: int = DEFAULT_PRIME,
               backend: str = "resolution", degree_slack: Optional[int] = 2,
               timeout: Optional[float] = None) -> dict:
    checks = tuple(checks)
    table = betti_table(G, p=p, backend=backend, degree_slack=degree_slack,
                        timeout=timeout, max_vertices=max(G.n, 7))
    reg = table.reg
    rec = {
        "n": G.n, "edges": [list(e) for e in G.edges],
        "l": longest_induced_path_length(G), "c": clique_count(G), "reg": reg,
        "pd": table.pd, "flags": {},
    }
    flags = rec["flags"]
    if "mm" in checks:
        flags["mm"] = rec["l"] <= reg <= max(G.n - 1, 0)
    if "sk" in checks:
        flags["sk"] = reg <= rec["c"]
    if "herzog" in checks:
        flags["herzog"] = herzog_check(G, "cut", p=p)
    if "ohtani" in checks:
        nonfree = [v for v in G.vertices if v not in free_vertices(G)]
        flags["ohtani"] = all(ohtani_split(G, v, p).ok for v in nonfree)
    return rec


def _scan_job(args):
    G, checks, p, backend, slack, timeout = args
    return scan_graph(G, checks, p, backend, slack, timeout)


def roundtrip_check(count: int, seed: int) -> dict:
    """Recognition of random normal-form expressions recovers (alpha, beta)."""
    rng = random.Random(seed)
    failures = []
    for k in range(count):
        e = random_normal_form(rng)
        want = alpha_beta(e)
        got = recognize_cm_bipartite(build(e))
        if not got or (got.alpha, got.beta) != (want.alpha, want.beta):
            failures.append({"index": k, "expr": expr_to_json(e),
                             "expected": [want.alpha, want.beta],
                             "got": [got.alpha, got.beta] if got else got.reason})
    return {"count": count, "seed": seed, "failures": failures}


def run_scan(n_max: int, checks: Iterable[str] = ("mm", "sk"), p: int = DEFAULT_PRIME,
             backend: str = "resolution", degree_slack: Optional[int] = 2,
             timeout: Optional[float] = None, workers: int = 1, n_min: int = 1,
             roundtrip: int = 0, seed: int = 0) -> dict:
    unknown = set(checks) - set(CHECKS)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    checks = tuple(c for c in CHECKS if c in set(checks))
    graphs = [G for n in range(n_min, n_max + 1) for G in enumerate_connected_graphs(n)]
    jobs = [(G, checks, p, backend, degree_slack, timeout) for G in graphs]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_scan_job, jobs))
    else:
        records = [_scan_job(j) for j in jobs]

    violations = []
    for rec in records:
        for name, ok in rec["flags"].items():
            if not ok:
                violations.append({"check": name, "n": rec["n"], "edges": rec["edges"],
                                   "l": rec["l"], "c": rec["c"], "reg": rec["reg"],
                                   "hard": name in HARD_CHECKS})
    per_n = {}
    for rec in records:
        per_n[str(rec["n"])] = per_n.get(str(rec["n"]), 0) + 1
    report = {
        "n_max": n_max,
        "records": records,
        "summary": {
            "graphs": len(records),
            "graphs_per_n": per_n,
            "violations_per_check": {c: sum(1 for v in violations if v["check"] == c)
                                     for c in checks},
        },
        "violations": violations,
        "config": {"n_min": n_min, "checks": list(checks), "prime": p, "backend": backend,
                   "degree_slack": degree_slack, "seed": seed},
    }
    if roundtrip:
        report["roundtrip"] = roundtrip_check(roundtrip, seed)
    return report


def dump_report(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=1) + "\n"

