"""A fleet of regular test algebras (invertible multiplicative structure maps)."""

from __future__ import annotations

from . import linalg as la
from .constructions import yau_twist
from .core import Dialgebra, direct_sum, matrix_dialgebra
from .field import QQ


def diag(values, field=QQ):
    n = len(values)
    M = la.zeros((n, n), field)
    for i, v in enumerate(values):
        M[i, i] = field(v)
    return M


def zero_algebra(n: int, field=QQ, alpha=None, beta=None) -> Dialgebra:
    return Dialgebra.zero(n, field, alpha, beta, label=f"zero{n}")


def unit_algebra(field=QQ) -> Dialgebra:
    """K with e1 e1 = e1 for both products and identity maps."""
    T = la.zeros((1, 1, 1), field)
    T[0, 0, 0] = field.one
    I = la.identity(1, field)
    return Dialgebra(T, T, I, I, "unit")


def matrix_algebra(k: int, field=QQ) -> Dialgebra:
    """M_k(K) with matrix multiplication as both products, identity maps (dimension k^2)."""
    return matrix_dialgebra(unit_algebra(field), k, label=f"M{k}")


def epsilon_dialgebra(n: int, field=QQ) -> Dialgebra:
    """x -| y = e(y) x and x |- y = e(x) y with e the first coordinate functional."""
    L = la.zeros((n, n, n), field)
    R = la.zeros((n, n, n), field)
    for i in range(n):
        L[i, 0, i] = field.one
        R[0, i, i] = field.one
    I = la.identity(n, field)
    return Dialgebra(L, R, I, I, f"eps{n}")


def matrix_bimodule_dialgebra(k: int, field=QQ) -> Dialgebra:
    """Dialgebra on M_k (+) M_k from the module map (m, m') -> m.

    (m, m') -| (n, n') = (m n, m' n) and (m, m') |- (n, n') = (m n, m n'),
    which has two different products.
    """
    A = matrix_algebra(k, field)
    d = A.n
    n = 2 * d
    L = la.zeros((n, n, n), field)
    R = la.zeros((n, n, n), field)
    mu = A.left
    for i in range(d):
        for j in range(d):
            for r in range(d):
                c = mu[i, j, r]
                if c:
                    L[i, j, r] += c
                    L[d + i, j, d + r] += c
                    R[i, j, r] += c
                    R[i, d + j, d + r] += c
    I = la.identity(n, field)
    return Dialgebra(L, R, I, I, f"bimod-M{k}")


def conjugation(g):
    """Matrix of x -> g x g^-1 on M_k in the basis E_ab at index a*k + b."""
    gi = la.invert(g)
    k = g.shape[0]
    field = la.field_of(g)
    out = la.zeros((k * k, k * k), field)
    for a in range(k):
        for b in range(k):
            # g E_ab g^-1 = sum_{c,d} g[c,a] gi[b,d] E_cd
            for c in range(k):
                for d in range(k):
                    out[c * k + d, a * k + b] = g[c, a] * gi[b, d]
    return out


def _scales(field):
    """Two distinct nonzero scalars other than 1 when the field has them."""
    p = getattr(field, "p", 0)
    if p == 2:
        return 1, 1
    if p == 3:
        return 2, 2
    return 2, 3


def twisted_matrix_algebra(k: int = 2, field=QQ) -> Dialgebra:
    """Yau twist of M_k by conjugations with two commuting diagonal matrices."""
    s, t = _scales(field)
    g = diag([1] + [s] * (k - 1), field)
    h = diag([1] + [t] * (k - 1), field)
    return yau_twist(matrix_algebra(k, field), conjugation(g), conjugation(h), label=f"yau-M{k}")


def twisted_epsilon(n: int = 2, field=QQ) -> Dialgebra:
    """Yau twist of the epsilon dialgebra by diagonal automorphisms fixing e1."""
    s, t = _scales(field)
    D = epsilon_dialgebra(n, field)
    return yau_twist(D, diag([1] + [s] * (n - 1), field), diag([1] + [t] * (n - 1), field), label=f"yau-eps{n}")


def diagonal_zero(field=QQ) -> Dialgebra:
    s, t = _scales(field)
    D = zero_algebra(2, field, diag([1, s], field), diag([1, t], field))
    return D.with_(label="diag-zero2")


def regular_fleet(field=QQ, max_matrix: int = 2) -> list[Dialgebra]:
    """Regular algebras used throughout the tests; every member passes check_axioms and is_regular."""
    fleet = [
        zero_algebra(1, field),
        zero_algebra(3, field),
        diagonal_zero(field),
        unit_algebra(field),
        epsilon_dialgebra(2, field),
        epsilon_dialgebra(3, field),
        twisted_epsilon(2, field),
        twisted_epsilon(3, field),
    ]
    for k in range(1, max_matrix + 1):
        fleet.append(matrix_algebra(k, field))
    fleet.append(twisted_matrix_algebra(2, field))
    fleet.append(matrix_bimodule_dialgebra(1, field))
    fleet.append(matrix_bimodule_dialgebra(2, field))
    fleet.append(direct_sum(unit_algebra(field), epsilon_dialgebra(2, field)))
    return fleet
