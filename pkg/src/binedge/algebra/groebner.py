"""Buchberger's algorithm with the Gebauer-Moeller criteria, normal selection."""
from __future__ import annotations

import time
from dataclasses import dataclass

from .polys import (Ideal, PolyRing, make_monic, mono_div, mono_divides, mono_lcm,
                    terms_sorted)

__all__ = ["GroebnerBasis", "groebner_basis", "normal_form", "spoly", "BudgetExceeded",
           "reduces_to_zero"]


class BudgetExceeded(RuntimeError):
    """A size or time budget was hit; the computation was abandoned."""


@dataclass(frozen=True)
class GroebnerBasis:
    ring: PolyRing
    polys: tuple            # reduced, monic, sorted by leading monomial (descending)
    lms: tuple

    def __len__(self):
        return len(self.polys)

    def reduce(self, f: dict) -> dict:
        return normal_form(self.ring, f, self.polys, self.lms)

    def contains(self, f: dict) -> bool:
        return not self.reduce(f)

    def terms(self):
        return [terms_sorted(self.ring, g) for g in self.polys]


def normal_form(ring: PolyRing, f: dict, basis, lms=None) -> dict:
    """Full reduction of f by a list of monic polynomials."""
    if lms is None:
        lms = [ring.lm(g) for g in basis]
    p = ring.p
    key = ring.key
    f = dict(f)
    rem = {}
    pairs = list(zip(lms, basis))
    while f:
        lm = max(f, key=key)
        c = f[lm]
        for glm, g in pairs:
            if mono_divides(glm, lm):
                q = mono_div(lm, glm)
                for e, gc in g.items():
                    ne = tuple(a + b for a, b in zip(e, q))
                    v = (f.get(ne, 0) - c * gc) % p
                    if v:
                        f[ne] = v
                    else:
                        f.pop(ne, None)
                break
        else:
            rem[lm] = c
            del f[lm]
    return rem


def spoly(ring: PolyRing, f: dict, g: dict, lf=None, lg=None) -> dict:
    lf = lf if lf is not None else ring.lm(f)
    lg = lg if lg is not None else ring.lm(g)
    L = mono_lcm(lf, lg)
    p = ring.p
    cf = pow(f[lf], p - 2, p)
    cg = pow(g[lg], p - 2, p)
    mf, mg = mono_div(L, lf), mono_div(L, lg)
    out: dict = {}
    for e, c in f.items():
        ne = tuple(a + b for a, b in zip(e, mf))
        out[ne] = (out.get(ne, 0) + c * cf) % p
    for e, c in g.items():
        ne = tuple(a + b for a, b in zip(e, mg))
        out[ne] = (out.get(ne, 0) - c * cg) % p
    return {e: c for e, c in out.items() if c}


def _coprime(a, b) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def groebner_basis(I: Ideal, timeout: float | None = None) -> GroebnerBasis:
    ring = I.ring
    key = ring.key
    deadline = None if timeout is None else time.monotonic() + timeout

    polys: list[dict] = []
    lms: list = []
    G: list[int] = []
    B: list[tuple[int, int]] = []

    def update(h: int) -> None:
        nonlocal G, B
        lh = lms[h]
        C = [g for g in G]
        D: list[int] = []
        while C:
            g = C.pop(0)
            lg = mono_lcm(lms[g], lh)
            if _coprime(lms[g], lh):
                D.append(g)
                continue
            others = C + D
            if not any(mono_divides(mono_lcm(lms[o], lh), lg) for o in others):
                D.append(g)
        E = [(g, h) for g in D if not _coprime(lms[g], lh)]
        Bn = []
        for g1, g2 in B:
            L = mono_lcm(lms[g1], lms[g2])
            if (mono_divides(lh, L) and mono_lcm(lms[g1], lh) != L
                    and mono_lcm(lms[g2], lh) != L):
                continue
            Bn.append((g1, g2))
        B = Bn + E
        G = [g for g in G if not mono_divides(lh, lms[g])] + [h]

    def add(f: dict) -> None:
        f = make_monic(ring, f)
        polys.append(f)
        lms.append(ring.lm(f))
        update(len(polys) - 1)

    start = sorted((dict(g) for g in I.gens), key=lambda g: key(ring.lm(g)))
    for g in start:
        r = normal_form(ring, g, [polys[i] for i in G], [lms[i] for i in G])
        if r:
            add(r)

    while B:
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceeded("Groebner basis computation exceeded its time budget")
        B.sort(key=lambda pr: (key(mono_lcm(lms[pr[0]], lms[pr[1]])), pr))
        i, j = B.pop(0)
        s = spoly(ring, polys[i], polys[j], lms[i], lms[j])
        r = normal_form(ring, s, [polys[k] for k in G], [lms[k] for k in G])
        if r:
            add(r)

    # interreduce
    keep = [i for i in G if not any(k != i and mono_divides(lms[k], lms[i]) for k in G)]
    basis = [polys[i] for i in keep]
    out = []
    for idx, g in enumerate(basis):
        others = basis[:idx] + basis[idx + 1:]
        lm = ring.lm(g)
        tail = {e: c for e, c in g.items() if e != lm}
        red = normal_form(ring, tail, others)
        red[lm] = g[lm]
        out.append(make_monic(ring, red))
    out.sort(key=lambda g: key(ring.lm(g)), reverse=True)
    return GroebnerBasis(ring, tuple(out), tuple(ring.lm(g) for g in out))


def reduces_to_zero(gb: GroebnerBasis) -> bool:
    """Every S-polynomial of the basis reduces to zero (Buchberger's criterion)."""
    P = gb.polys
    for i in range(len(P)):
        for j in range(i + 1, len(P)):
            if gb.reduce(spoly(gb.ring, P[i], P[j], gb.lms[i], gb.lms[j])):
                return False
    return True
