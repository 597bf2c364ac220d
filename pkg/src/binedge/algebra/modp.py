"""Gaussian elimination over F_p (p < 2**31) on int64 arrays.

The matrices met here are small and very sparse, so the per-pivot cost of
vectorised numpy calls dominates.  When numba is importable a compiled loop
is used instead; the numpy version is the fallback and the reference.
"""
from __future__ import annotations

import numpy as np

try:  # optional accelerator
    from numba import njit
except ImportError:  # pragma: no cover - depends on the environment
    njit = None

__all__ = ["rref", "rank", "nullspace", "pivot_columns", "HAVE_NUMBA"]

HAVE_NUMBA = njit is not None


def _rref_numpy(A: np.ndarray, p: int):
    m, ncols = A.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        if inv != 1:
            A[r] = A[r] * inv % p
        col = A[:, c].copy()
        col[r] = 0
        rows = np.flatnonzero(col)
        if rows.size:
            A[rows] = (A[rows] - np.outer(col[rows], A[r])) % p
        pivots.append(c)
        r += 1
    return r, pivots


if HAVE_NUMBA:
    @njit(cache=True)
    def _inv_mod(a, p):
        result = 1
        base = a % p
        e = p - 2
        while e > 0:
            if e & 1:
                result = result * base % p
            base = base * base % p
            e >>= 1
        return result

    @njit(cache=True)
    def _rref_kernel(A, p):
        m, ncols = A.shape
        piv = np.empty(min(m, ncols), np.int64)
        nzj = np.empty(ncols, np.int64)
        r = 0
        for c in range(ncols):
            if r == m:
                break
            k = -1
            for i in range(r, m):
                if A[i, c] != 0:
                    k = i
                    break
            if k < 0:
                continue
            if k != r:
                for j in range(c, ncols):
                    t = A[r, j]
                    A[r, j] = A[k, j]
                    A[k, j] = t
            inv = _inv_mod(A[r, c], p)
            cnt = 0
            for j in range(c, ncols):
                if A[r, j] != 0:
                    if inv != 1:
                        A[r, j] = A[r, j] * inv % p
                    nzj[cnt] = j
                    cnt += 1
            for i in range(m):
                if i != r:
                    f = A[i, c]
                    if f != 0:
                        for t in range(cnt):
                            j = nzj[t]
                            v = (A[i, j] - f * A[r, j]) % p
                            if v < 0:
                                v += p
                            A[i, j] = v
            piv[r] = c
            r += 1
        return r, piv


def rref(A, p: int):
    """(R, pivots): reduced row echelon form of A mod p, zero rows dropped."""
    A = np.array(A, dtype=np.int64) % p
    if A.ndim != 2 or A.size == 0:
        return A.reshape(0, A.shape[1] if A.ndim == 2 else 0), []
    if HAVE_NUMBA:
        r, piv = _rref_kernel(A, p)
        return A[:r], [int(c) for c in piv[:r]]
    r, piv = _rref_numpy(A, p)
    return A[:r], piv


def rank(A, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    if A.shape[0] > A.shape[1]:
        A = A.T
    return len(rref(A, p)[1])


def nullspace(A, p: int) -> np.ndarray:
    """Basis of {v : A v = 0} as the rows of the returned array."""
    A = np.asarray(A, dtype=np.int64)
    ncols = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    R, piv = rref(A, p)
    pset = set(piv)
    free = [c for c in range(ncols) if c not in pset]
    N = np.zeros((len(free), ncols), dtype=np.int64)
    if free:
        fr = np.array(free)
        N[np.arange(len(free)), fr] = 1
        if piv:
            N[:, piv] = (-R[:, fr].T) % p
    return N


def pivot_columns(A, p: int) -> list[int]:
    """Indices of a greedy (left-to-right) maximal independent set of columns."""
    A = np.asarray(A, dtype=np.int64)
    if A.size == 0:
        return []
    return rref(A, p)[1]
