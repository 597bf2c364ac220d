"""Sparse polynomials over F_p in S = K[x_1..x_n, y_1..y_n] (plus optional helpers).

A polynomial is a plain dict ``{exponent tuple: coeff}`` with coefficients in
[1, p).  Variable index: x_i -> i-1, y_i -> n+i-1, auxiliary variables after
the y block.  Orders are given by sort keys; larger key = larger monomial.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

Exp = tuple
Poly = dict

DEFAULT_PRIME = 32003

__all__ = ["PolyRing", "Ideal", "RingMismatch", "DEFAULT_PRIME", "is_prime",
           "mono_divides", "mono_lcm", "mono_mul", "mono_div", "poly_sub", "poly_add",
           "poly_scale", "poly_mul_term", "poly_mul", "make_monic", "terms_sorted"]


class RingMismatch(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def _grevlex_key(e):
    return (sum(e),) + tuple(-a for a in reversed(e))


def _lex_key(e):
    return tuple(e)


@dataclass(frozen=True)
class PolyRing:
    """K[x_1..x_n, y_1..y_n, t_1..t_aux] with a monomial order.

    order: "grevlex", "lex", or "elim" (aux block first, lex-compared by
    degree in the aux variables, then grevlex on the rest).
    """

    n: int
    p: int = DEFAULT_PRIME
    order: str = "grevlex"
    aux: int = 0

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if self.order not in ("grevlex", "lex", "elim"):
            raise ValueError(f"unknown monomial order {self.order!r}")

    @property
    def nvars(self) -> int:
        return 2 * self.n + self.aux

    def key(self, e):
        return _key_for(self.order, 2 * self.n, e)

    def with_order(self, order: str, aux: int | None = None) -> "PolyRing":
        return PolyRing(self.n, self.p, order, self.aux if aux is None else aux)

    def base(self) -> "PolyRing":
        return PolyRing(self.n, self.p, "grevlex", 0)

    # constructors
    def var(self, idx: int) -> Poly:
        e = [0] * self.nvars
        e[idx] = 1
        return {tuple(e): 1}

    def x(self, i: int) -> Poly:
        return self.var(i - 1)

    def y(self, i: int) -> Poly:
        return self.var(self.n + i - 1)

    def one(self) -> Poly:
        return {(0,) * self.nvars: 1}

    def lm(self, f: Poly) -> Exp:
        return max(f, key=self.key)

    def embed(self, f: Poly, aux: int) -> Poly:
        """Pad exponent vectors with ``aux`` zeros (for an extended ring)."""
        pad = (0,) * aux
        return {e + pad: c for e, c in f.items()}

    def var_name(self, idx: int) -> str:
        if idx < self.n:
            return f"x{idx + 1}"
        if idx < 2 * self.n:
            return f"y{idx - self.n + 1}"
        return f"t{idx - 2 * self.n + 1}"

    def fmt(self, f: Poly) -> str:
        if not f:
            return "0"
        out = []
        for e, c in terms_sorted(self, f):
            mono = "*".join(self.var_name(i) + (f"^{a}" if a > 1 else "")
                            for i, a in enumerate(e) if a)
            if c == self.p - 1 and mono:
                out.append(f"- {mono}")
            elif c == 1 and mono:
                out.append(f"+ {mono}")
            else:
                out.append(f"+ {c}{'*' + mono if mono else ''}")
        s = " ".join(out)
        return s[2:] if s.startswith("+ ") else "-" + s[1:]


@lru_cache(maxsize=None)
def _key_for(order: str, nbase: int, e):
    if order == "grevlex":
        return _grevlex_key(e)
    if order == "lex":
        return _lex_key(e)
    aux = e[nbase:]
    return (sum(aux),) + tuple(aux) + _grevlex_key(e[:nbase])


def terms_sorted(ring: PolyRing, f: Poly):
    """Terms in descending order, as a list of (exponent, coeff)."""
    return sorted(f.items(), key=lambda t: ring.key(t[0]), reverse=True)


# -- monomials -------------------------------------------------------------

def mono_divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


# -- polynomial arithmetic -----------------------------------------------

def poly_add(f: Poly, g: Poly, p: int) -> Poly:
    h = dict(f)
    for e, c in g.items():
        v = (h.get(e, 0) + c) % p
        if v:
            h[e] = v
        else:
            h.pop(e, None)
    return h


def poly_sub(f: Poly, g: Poly, p: int) -> Poly:
    return poly_add(f, {e: (-c) % p for e, c in g.items()}, p)


def poly_scale(f: Poly, c: int, p: int) -> Poly:
    c %= p
    if not c:
        return {}
    return {e: a * c % p for e, a in f.items()}


def poly_mul_term(f: Poly, m, c: int, p: int) -> Poly:
    return {mono_mul(e, m): a * c % p for e, a in f.items()}


def poly_mul(f: Poly, g: Poly, p: int) -> Poly:
    h: Poly = {}
    for e1, c1 in f.items():
        for e2, c2 in g.items():
            e = mono_mul(e1, e2)
            v = (h.get(e, 0) + c1 * c2) % p
            if v:
                h[e] = v
            else:
                h.pop(e, None)
    return h


def make_monic(ring: PolyRing, f: Poly) -> Poly:
    lc = f[ring.lm(f)]
    return poly_scale(f, pow(lc, ring.p - 2, ring.p), ring.p)


# -- ideals ----------------------------------------------------------------

class Ideal:
    """Finitely generated ideal; zero generators are dropped on construction."""

    def __init__(self, ring: PolyRing, gens=()):
        self.ring = ring
        cleaned = []
        for g in gens:
            g = {tuple(e): c % ring.p for e, c in dict(g).items() if c % ring.p}
            if any(len(e) != ring.nvars for e in g):
                raise RingMismatch("generator exponent length does not match the ring")
            if g:
                cleaned.append(g)
        self.gens: tuple = tuple(cleaned)
        self._gb = None

    @property
    def generators(self):
        """Each generator as a descending list of (exponent, coeff) terms."""
        return [terms_sorted(self.ring, g) for g in self.gens]

    def is_zero(self) -> bool:
        return not self.gens

    def groebner(self):
        from .groebner import groebner_basis
        if self._gb is None:
            self._gb = groebner_basis(self)
        return self._gb

    def __repr__(self):
        body = ", ".join(self.ring.fmt(g) for g in self.gens[:6])
        more = ", ..." if len(self.gens) > 6 else ""
        return f"Ideal({body}{more})"
