"""Exhaustive operator searches over GF(p).

All p^(n^2) matrices are enumerated in lexicographic order of their
row-major entries and tested in int64 batches.  Hits are returned as GF(p)
object matrices, in enumeration order.
"""

from __future__ import annotations

import itertools

import numpy as np

from . import linalg as la
from .field import GF

MAX_DIM = 3
CHUNK = 4096


def _ints(arr):
    return la.gf_int_array(arr)


def _prime_of(D):
    p = getattr(D.field, "p", None)
    if p is None:
        raise ValueError("operator searches run over GF(p); convert the algebra first")
    return p


def candidates(n: int, p: int, chunk: int = CHUNK):
    """Yield int64 batches of shape (b, n, n) covering all matrices over GF(p)."""
    total = p ** (n * n)
    weights = p ** np.arange(n * n - 1, -1, -1, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        digits = (idx[:, None] // weights[None, :]) % p
        yield digits.reshape(-1, n, n)


def _commuting(M, A, B, p):
    c1 = (np.einsum("bij,jk->bik", M, A) - np.einsum("ij,bjk->bik", A, M)) % p
    c2 = (np.einsum("bij,jk->bik", M, B) - np.einsum("ij,bjk->bik", B, M)) % p
    return ~(c1.any(axis=(1, 2)) | c2.any(axis=(1, 2)))


def _tw(T, X, Y):
    """Batched (x, y) -> T(Xx, Yy); X or Y may be unbatched (2-d)."""
    sx = "bpi" if X.ndim == 3 else "pi"
    sy = "bqj" if Y.ndim == 3 else "qj"
    return np.einsum(f"{sx},{sy},pqk->bijk", X, Y, T)


def _post(M, T):
    """Batched (x, y) -> M T(x, y) where T is batched or not."""
    st = "bijr" if T.ndim == 4 else "ijr"
    return np.einsum(f"bkr,{st}->bijk", M, T)


def _zero(res, p):
    return ~((res % p).reshape(res.shape[0], -1).any(axis=1))


def _det(M, p):
    n = M.shape[1]
    total = np.zeros(M.shape[0], dtype=np.int64)
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = np.ones(M.shape[0], dtype=np.int64)
        for i, j in enumerate(perm):
            term = term * M[:, i, j] % p
        total = (total + sign * term) % p
    return total


def _run(D, test, maxdim=MAX_DIM):
    p = _prime_of(D)
    if D.n > maxdim:
        raise ValueError(f"exhaustive search is capped at dimension {maxdim}")
    A, B = _ints(D.alpha), _ints(D.beta)
    L, R = _ints(D.left), _ints(D.right)
    hits = []
    for M in candidates(D.n, p):
        keep = _commuting(M, A, B, p)
        if not keep.any():
            continue
        M = M[keep]
        ok = test(M, L, R, A, B, p)
        hits.extend(M[ok])
    F = GF(p)
    return [la.array(h.tolist(), F) for h in hits]


def _derived(T, X):
    n = X.shape[1]
    I = np.eye(n, dtype=np.int64)
    return _tw(T, X, I) + _tw(T, I, X)


def rota_baxter_operators(D):
    def test(M, L, R, A, B, p):
        ok = np.ones(M.shape[0], dtype=bool)
        for T in (L, R):
            ok &= _zero(_tw(T, M, M) - _post(M, _derived(T, M)), p)
        return ok

    return _run(D, test)


def nijenhuis_operators(D):
    def test(M, L, R, A, B, p):
        ok = np.ones(M.shape[0], dtype=bool)
        for T in (L, R):
            twisted = _derived(T, M) - _post(M, T)
            ok &= _zero(_tw(T, M, M) - _post(M, twisted), p)
        return ok

    return _run(D, test)


def _power_ints(D, k, l):
    return _ints(D.power(k, l))


def centroid_operators(D, k: int = 0, l: int = 0):
    P = _power_ints(D, k, l)

    def test(M, L, R, A, B, p):
        ok = np.ones(M.shape[0], dtype=bool)
        for T in (L, R):
            tt = _tw(T, M, M)
            ok &= _zero(_tw(T, M, P) - tt, p) & _zero(tt - _tw(T, P, M), p)
        return ok

    return _run(D, test)


def averaging_operators(D, k: int = 0, l: int = 0, injective: bool = True):
    P = _power_ints(D, k, l)

    def test(M, L, R, A, B, p):
        ok = _det(M, p) != 0 if injective else np.ones(M.shape[0], dtype=bool)
        for T in (L, R):
            tt = _tw(T, M, M)
            ok &= _zero(tt - _post(M, _tw(T, P, M)), p) & _zero(tt - _post(M, _tw(T, M, P)), p)
        return ok

    return _run(D, test)


def lie_nijenhuis_operators(Lb, maxdim: int = 4):
    """Nijenhuis operators of a bracket algebra (searched over GF(p), n <= maxdim)."""
    p = getattr(Lb.field, "p", None)
    if p is None:
        raise ValueError("operator searches run over GF(p); convert the algebra first")
    if Lb.n > maxdim:
        raise ValueError(f"exhaustive search is capped at dimension {maxdim}")
    A, B, T = _ints(Lb.alpha), _ints(Lb.beta), _ints(Lb.bracket)
    hits = []
    for M in candidates(Lb.n, p, chunk=1024):
        keep = _commuting(M, A, B, p)
        if not keep.any():
            continue
        M = M[keep]
        twisted = _derived(T, M) - _post(M, T)
        ok = _zero(_tw(T, M, M) - _post(M, twisted), p)
        hits.extend(M[ok])
    F = GF(p)
    return [la.array(h.tolist(), F) for h in hits]


def commuting_pairs(ops):
    """All ordered pairs (phi, psi) from ``ops`` with phi psi = psi phi."""
    return [(a, b) for a in ops for b in ops if la.commutes(a, b)]
