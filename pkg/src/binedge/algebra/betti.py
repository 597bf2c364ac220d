"""Graded Betti numbers of S/I over F_p.

Two backends share the same candidate degrees:

* ``resolution`` builds a minimal free resolution one multidegree at a time:
  at level i and degree a the new generators are ker(d_{i-1})_a modulo the
  image of the level-i generators already found in lower degrees.
* ``koszul`` computes Tor_i(S/I, K)_a as homology of the Koszul complex on the
  2n variables tensored with S/I, using normal forms modulo a Groebner basis.

Everything is graded by Z^{n+1}: x_v has degree (e_v, 1), y_v has (e_v, 0).
Binomial edge ideals, variable ideals and their sums/intersections are
homogeneous for this grading; otherwise the standard Z-grading is used.

Betti numbers only live in degrees of the lcm lattice of in(I) (Taylor
complex of in(I), plus upper semicontinuity under Groebner degeneration), so
only those degrees are visited.  The internal degree is capped at
j <= i + (n - 1) + slack unless the cap is switched off.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Optional, Union

import numpy as np

from ..graph import Graph
from .groebner import BudgetExceeded, GroebnerBasis, groebner_basis
from .ideals import binomial_edge_ideal, krull_dimension
from .modp import nullspace, pivot_columns, rank
from .polys import DEFAULT_PRIME, Ideal

__all__ = ["BettiTable", "betti_table", "regularity_oracle", "dimension_and_cm",
           "BACKENDS", "REQUIRED_MAX_VERTICES", "STRETCH_MAX_VERTICES", "FineGrading",
           "StandardGrading"]

BACKENDS = ("resolution", "koszul")
REQUIRED_MAX_VERTICES = 7
STRETCH_MAX_VERTICES = 10
LATTICE_LIMIT = 300_000


@dataclass(frozen=True)
class BettiTable:
    entries: dict                      # (i, j) -> beta_{i,j} >= 1
    n: int = 0                         # vertices of the underlying ring
    prime: int = DEFAULT_PRIME
    backend: str = "resolution"
    degree_cap: Optional[int] = None   # slack in use (None = uncapped)
    multigraded: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def reg(self) -> int:
        return max(j - i for i, j in self.entries)

    @property
    def pd(self) -> int:
        return max(i for i, _ in self.entries)

    def __getitem__(self, ij) -> int:
        return self.entries.get(tuple(ij), 0)

    def same_numbers(self, other: "BettiTable") -> bool:
        return self.entries == other.entries

    def rows(self):
        return sorted((i, j, b) for (i, j), b in self.entries.items())

    def to_json(self) -> dict:
        return {"betti": [list(r) for r in self.rows()], "reg": self.reg, "pd": self.pd}

    def pretty(self) -> str:
        """Macaulay2-style table: row r holds beta_{i, i+r}."""
        pd, reg = self.pd, self.reg
        head = "       " + " ".join(f"{i:>4}" for i in range(pd + 1))
        lines = [head]
        for r in range(reg + 1):
            vals = []
            for i in range(pd + 1):
                b = self.entries.get((i, i + r), 0)
                vals.append(f"{b:>4}" if b else "   .")
            lines.append(f"{r:>5}: " + " ".join(vals))
        return "\n".join(lines)


# -- gradings --------------------------------------------------------------

class FineGrading:
    """deg(x_v) = (e_v, 1), deg(y_v) = (e_v, 0)."""

    def __init__(self, n: int):
        self.n = n

    def deg(self, e) -> tuple:
        n = self.n
        return tuple(e[v] + e[n + v] for v in range(n)) + (sum(e[:n]),)

    def var_deg(self, idx: int) -> tuple:
        n = self.n
        v = idx % n
        return tuple(1 if w == v else 0 for w in range(n)) + ((1,) if idx < n else (0,))

    @staticmethod
    def total(d) -> int:
        return sum(d[:-1])

    def valid(self, d) -> bool:
        return all(c >= 0 for c in d[:-1]) and 0 <= d[-1] <= sum(d[:-1])

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def le(self, b, a) -> bool:
        return self.valid(self.sub(a, b))

    def monomials(self, d):
        return _fine_monomials(self.n, tuple(d))

    def coarsen_mask(self, mask: int) -> tuple:
        n = self.n
        c = tuple(((mask >> v) & 1) + ((mask >> (n + v)) & 1) for v in range(n))
        return c + (bin(mask & ((1 << n) - 1)).count("1"),)


@lru_cache(maxsize=200_000)
def _fine_monomials(n: int, d: tuple) -> tuple:
    c, q = d[:-1], d[-1]
    out = []
    xs = [0] * n

    def rec(v: int, left: int, room: int):
        if v == n:
            if left == 0:
                out.append(tuple(xs) + tuple(c[w] - xs[w] for w in range(n)))
            return
        room -= c[v]
        for a in range(max(0, left - room), min(c[v], left) + 1):
            xs[v] = a
            rec(v + 1, left - a, room)
        xs[v] = 0

    if 0 <= q <= sum(c) and min(c, default=0) >= 0:
        rec(0, q, sum(c))
    return tuple(out)


class StandardGrading:
    def __init__(self, nvars: int):
        self.nvars = nvars

    def deg(self, e) -> tuple:
        return (sum(e),)

    def var_deg(self, idx: int) -> tuple:
        return (1,)

    @staticmethod
    def total(d) -> int:
        return d[0]

    def valid(self, d) -> bool:
        return d[0] >= 0

    def sub(self, a, b):
        return (a[0] - b[0],)

    def le(self, b, a) -> bool:
        return b[0] <= a[0]

    def monomials(self, d):
        return _std_monomials(self.nvars, d[0])

    def coarsen_mask(self, mask: int) -> tuple:
        return (bin(mask).count("1"),)


@lru_cache(maxsize=4096)
def _std_monomials(N: int, d: int) -> tuple:
    out = []
    for combo in _compositions(d, N):
        out.append(combo)
    return tuple(out)


def _compositions(d: int, N: int):
    if N == 1:
        yield (d,)
        return
    for a in range(d, -1, -1):
        for rest in _compositions(d - a, N - 1):
            yield (a,) + rest


def _choose_grading(I: Ideal):
    fine = FineGrading(I.ring.n)
    if I.ring.aux == 0 and all(len({fine.deg(e) for e in g}) == 1 for g in I.gens):
        return fine
    std = StandardGrading(I.ring.nvars)
    if all(len({sum(e) for e in g}) == 1 for g in I.gens):
        return std
    raise ValueError("ideal is not homogeneous")


# -- candidate degrees -----------------------------------------------------

def _candidate_degrees(gb: GroebnerBasis, grading) -> list:
    """Coarsened lcm lattice of the leading monomials (box fallback if too large)."""
    lms = gb.lms
    N = gb.ring.nvars
    if all(max(e) <= 1 for e in lms):
        masks = [sum(1 << k for k, a in enumerate(e) if a) for e in lms]
        L = {0}
        for m in masks:
            L |= {l | m for l in L}
            if len(L) > LATTICE_LIMIT:
                break
        else:
            return sorted({grading.coarsen_mask(l) for l in L},
                          key=lambda d: (grading.total(d), d))
    elif len(lms) <= 16:
        L = {(0,) * N}
        for e in lms:
            L |= {tuple(max(a, b) for a, b in zip(l, e)) for l in L}
        return sorted({grading.deg(l) for l in L}, key=lambda d: (grading.total(d), d))
    # box: every degree below the lcm of all leading monomials
    top = tuple(max(e[k] for e in lms) for k in range(N))
    topd = grading.deg(top)
    if isinstance(grading, StandardGrading):
        return [(d,) for d in range(topd[0] + 1)]
    ranges = [range(c + 1) for c in topd[:-1]]
    out = []

    def rec(prefix, k):
        if k == len(ranges):
            for q in range(sum(prefix) + 1):
                out.append(tuple(prefix) + (q,))
            return
        for c in ranges[k]:
            rec(prefix + [c], k + 1)

    rec([], 0)
    return sorted(out, key=lambda d: (grading.total(d), d))


# -- resolution backend ----------------------------------------------------

class _Clock:
    def __init__(self, timeout):
        self.deadline = None if timeout is None else time.monotonic() + timeout

    def check(self):
        if self.deadline is not None and time.monotonic() > self.deadline:
            raise BudgetExceeded("Betti computation exceeded its time budget")


def _resolution(I: Ideal, grading, cands, cap, clock) -> dict:
    p = I.ring.p
    N = I.ring.nvars
    # module elements are dicts {key: coeff}; key = generator index and a
    # packed monomial (8 bits per variable), so shifting by m is one addition
    shift = 8 * N

    def pack(e) -> int:
        return sum(a << (8 * k) for k, a in enumerate(e))

    pmon_cache: dict = {}

    def pmons(d):
        r = pmon_cache.get(d)
        if r is None:
            r = [pack(m) for m in grading.monomials(d)]
            pmon_cache[d] = r
        return r

    def order(ds):
        return sorted(ds, key=lambda d: (grading.total(d), d))

    out: dict = {}

    # level 1: minimal generators chosen among the input generators
    by_deg: dict = {}
    for g in I.gens:
        by_deg.setdefault(grading.deg(next(iter(g))), []).append(g)
    level: list = []
    for d in order(by_deg):
        if grading.total(d) > cap(1):
            continue
        clock.check()
        vecs = []
        for b, img in level:
            if b != d and grading.le(b, d):
                for pm in pmons(grading.sub(d, b)):
                    vecs.append({k + pm: c for k, c in img.items()})
        nold = len(vecs)
        cand = [{pack(e): c for e, c in g.items()} for g in by_deg[d]]
        keys = sorted({k for v in vecs + cand for k in v})
        idx = {k: r for r, k in enumerate(keys)}
        M = np.zeros((len(keys), len(vecs) + len(cand)), dtype=np.int64)
        for col, v in enumerate(vecs + cand):
            for k, c in v.items():
                M[idx[k], col] = c
        for col in pivot_columns(M, p):
            if col >= nold:
                level.append((d, cand[col - nold]))
                out[(d, 1)] = out.get((d, 1), 0) + 1

    i = 1
    while level:
        i += 1
        prev_by: dict = {}
        for g, (b, img) in enumerate(level):
            prev_by.setdefault(b, []).append((g << shift, img))
        prev_degs = order(prev_by)
        level = []
        found_by: dict = {}
        for a in cands:
            if grading.total(a) > cap(i):
                continue
            below = [b for b in prev_degs if b != a and grading.le(b, a)]
            if not below:
                continue
            clock.check()
            cols = []
            col_imgs = []
            for b in below:
                ms = pmons(grading.sub(a, b))
                for gk, img in prev_by[b]:
                    for pm in ms:
                        cols.append(gk + pm)
                        col_imgs.append({k + pm: c for k, c in img.items()})
            keys = sorted({k for v in col_imgs for k in v})
            ridx = {k: r for r, k in enumerate(keys)}
            D = np.zeros((len(keys), len(cols)), dtype=np.int64)
            for c, v in enumerate(col_imgs):
                for k, val in v.items():
                    D[ridx[k], c] = val
            Nsp = nullspace(D, p)
            if Nsp.shape[0] == 0:
                continue
            cidx = {k: c for c, k in enumerate(cols)}
            old = []
            for b, imgs in found_by.items():
                if grading.le(b, a):
                    for pm in pmons(grading.sub(a, b)):
                        for img in imgs:
                            vec = np.zeros(len(cols), dtype=np.int64)
                            for k, val in img.items():
                                vec[cidx[k + pm]] = val
                            old.append(vec)
            if old and rank(np.array(old), p) == Nsp.shape[0]:
                continue
            M = np.vstack(old + [Nsp]).T if old else Nsp.T
            new = [c - len(old) for c in pivot_columns(M, p) if c >= len(old)]
            for r in new:
                vec = Nsp[r]
                img = {cols[c]: int(vec[c]) for c in np.flatnonzero(vec)}
                level.append((a, img))
                found_by.setdefault(a, []).append(img)
            if new:
                out[(a, i)] = out.get((a, i), 0) + len(new)
    return out


# -- Koszul backend --------------------------------------------------------

def _koszul(I: Ideal, gb: GroebnerBasis, grading, cands, cap, clock) -> dict:
    ring = I.ring
    p = ring.p
    N = ring.nvars
    lms = gb.lms
    nf_cache: dict = {}

    def nf(e):
        r = nf_cache.get(e)
        if r is None:
            r = gb.reduce({e: 1})
            nf_cache[e] = r
        return r

    def standard(d):
        return [m for m in grading.monomials(d)
                if not any(all(a <= b for a, b in zip(l, m)) for l in lms)]

    vdeg = [grading.var_deg(k) for k in range(N)]
    out: dict = {}
    for a in cands:
        tot = grading.total(a)
        imin = max(0, tot - cap(0))
        clock.check()
        support = [k for k in range(N) if grading.le(vdeg[k], a)]
        basis: dict[int, list] = {}
        for size in range(0, min(len(support), tot) + 1):
            blist = []
            for sigma in combinations(support, size):
                ds = (0,) * len(a)
                for k in sigma:
                    ds = tuple(x + y for x, y in zip(ds, vdeg[k]))
                rest = grading.sub(a, ds)
                if not grading.valid(rest):
                    continue
                for m in standard(rest):
                    blist.append((sigma, m))
            if blist:
                basis[size] = blist

        def boundary_rank(i):
            src, dst = basis.get(i), basis.get(i - 1)
            if not src or not dst:
                return 0
            didx = {b: r for r, b in enumerate(dst)}
            D = np.zeros((len(dst), len(src)), dtype=np.int64)
            for c, (sigma, m) in enumerate(src):
                for pos, k in enumerate(sigma):
                    sign = 1 if pos % 2 == 0 else p - 1
                    rest = sigma[:pos] + sigma[pos + 1:]
                    e = list(m)
                    e[k] += 1
                    for e2, val in nf(tuple(e)).items():
                        r = didx[(rest, e2)]
                        D[r, c] = (D[r, c] + sign * val) % p
            return rank(D, p)

        ranks: dict[int, int] = {}
        for i in basis:
            if i < imin or i == 0:
                continue
            for j in (i, i + 1):
                if j not in ranks:
                    ranks[j] = boundary_rank(j)
            b = len(basis[i]) - ranks[i] - ranks[i + 1]
            if b and tot - i <= cap(0):
                out[(a, i)] = b
    return out


# -- public API ------------------------------------------------------------

def _as_ideal(obj, p: int) -> Ideal:
    if isinstance(obj, Graph):
        return binomial_edge_ideal(obj, p)
    if isinstance(obj, Ideal):
        return obj
    raise TypeError(f"expected a Graph or an Ideal, got {type(obj).__name__}")


def betti_table(obj: Union[Graph, Ideal], *, p: int = DEFAULT_PRIME,
                backend: str = "resolution", degree_slack: Optional[int] = 2,
                timeout: Optional[float] = None,
                max_vertices: int = REQUIRED_MAX_VERTICES) -> BettiTable:
    """Graded Betti table of S/I (I = J_G for a graph).

    degree_slack=None removes the internal-degree cap.  Raises BudgetExceeded
    when the vertex budget or the wall-clock budget is exceeded.
    """
    if backend == "schreyer":
        backend = "resolution"
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}; choose from {BACKENDS}")
    if max_vertices > STRETCH_MAX_VERTICES:
        raise BudgetExceeded(f"max_vertices above {STRETCH_MAX_VERTICES} is not supported")
    I = _as_ideal(obj, p)
    n = I.ring.n
    if n > max_vertices:
        raise BudgetExceeded(f"{n} vertices exceeds the budget of {max_vertices}")
    clock = _Clock(timeout)
    if degree_slack is None:
        def cap(i):
            return 10 ** 9
    else:
        def cap(i):
            return i + max(n - 1, 0) + degree_slack

    entries = {(0, 0): 1}
    multi: dict = {}
    if not I.is_zero():
        grading = _choose_grading(I)
        gb = groebner_basis(I, timeout=timeout)
        if any(sum(e) == 0 for e in gb.lms):
            raise ValueError("unit ideal: S/I is zero")
        cands = _candidate_degrees(gb, grading)
        if backend == "resolution":
            multi = _resolution(I, grading, cands, cap, clock)
        else:
            # Koszul needs the cap on j - i; cap(0) = n - 1 + slack
            multi = _koszul(I, gb, grading, cands, cap, clock)
        for (a, i), b in multi.items():
            j = grading.total(a)
            entries[(i, j)] = entries.get((i, j), 0) + b
    return BettiTable(entries, n, I.ring.p, backend, degree_slack, multi)


def regularity_oracle(obj: Union[Graph, Ideal], **kw) -> int:
    return betti_table(obj, **kw).reg


def dimension_and_cm(G: Graph, table: Optional[BettiTable] = None, **kw):
    """(dim, depth, is_cm) of S/J_G; dim from C(G), depth = 2n - pd."""
    if table is None:
        table = betti_table(G, **kw)
    dim = krull_dimension(G)
    depth = 2 * G.n - table.pd
    return dim, depth, depth == dim
