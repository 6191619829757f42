"""(alpha^k, beta^l)-derivations as exact nullspaces."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg as la
from .core import Dialgebra, check_morphism
from .errors import ConstructionFailed, DimensionMismatch, NotADerivation, NotAnIsomorphism
from .report import CheckReport, result_from_residual

DEFAULT_EXPONENTS = tuple((k, l) for k in range(3) for l in range(3))


def _as_square(T, n):
    T = np.asarray(T, dtype=object)
    if T.shape != (n, n):
        raise DimensionMismatch(f"operator of shape {T.shape} on a {n}-dimensional algebra")
    return T


def derivation_residuals(T, D: Dialgebra, k: int, l: int) -> dict:
    """Residual arrays of the four defining identities, keyed by id."""
    P = D.power(k, l)
    out = {
        "commute-alpha": (la.matmul(T, D.alpha) - la.matmul(D.alpha, T)).T,
        "commute-beta": (la.matmul(T, D.beta) - la.matmul(D.beta, T)).T,
    }
    for side in ("left", "right"):
        M = D.product(side)
        out[f"leibniz-{side}"] = la.post_compose(T, M) - la.twist_inputs(M, P, T) - la.twist_inputs(M, T, P)
    return out


def check_derivation(T, k: int, l: int, D: Dialgebra) -> CheckReport:
    T = _as_square(T, D.n)
    res = derivation_residuals(T, D, k, l)
    return CheckReport(f"derivation({k},{l})[{D.label}]", tuple(result_from_residual(a, r) for a, r in res.items()))


def is_derivation(T, k: int, l: int, D: Dialgebra) -> bool:
    return check_derivation(T, k, l, D).passed


def derivation_matrix(D: Dialgebra, k: int, l: int) -> np.ndarray:
    """Stacked linear system in the n^2 entries of T (column r*n + c is T[r, c])."""
    n, F = D.n, D.field
    cols = []
    for r in range(n):
        for c in range(n):
            T = la.zeros((n, n), F)
            T[r, c] = F.one
            res = derivation_residuals(T, D, k, l)
            cols.append(np.concatenate([v.reshape(-1) for v in res.values()]))
    if not cols:
        return la.zeros((0, 0), F)
    return np.stack(cols, axis=1)


@dataclass(frozen=True)
class DerivationSpace:
    k: int
    l: int
    basis: tuple
    label: str = ""

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return self.dim

    def __iter__(self):
        return iter(self.basis)


def derivation_space(D: Dialgebra, k: int = 0, l: int = 0) -> DerivationSpace:
    n = D.n
    if n == 0:
        return DerivationSpace(k, l, (), D.label)
    A = derivation_matrix(D, k, l)
    basis = tuple(la.frozen(v.reshape(n, n)) for v in la.nullspace(A, D.field))
    return DerivationSpace(k, l, basis, D.label)


def derivation_spaces(D: Dialgebra, exponents=DEFAULT_EXPONENTS) -> dict:
    return {(k, l): derivation_space(D, k, l) for k, l in exponents}


def derivation_bracket(T1, e1, T2, e2, D: Dialgebra) -> np.ndarray:
    """[T1, T2] for T1 in Der_e1 and T2 in Der_e2, verified to lie in Der_(e1 + e2)."""
    for T, (k, l) in ((T1, e1), (T2, e2)):
        if not is_derivation(T, k, l, D):
            raise NotADerivation(f"operator is not an (alpha^{k}, beta^{l})-derivation of {D.label}")
    out = la.matmul(T1, T2) - la.matmul(T2, T1)
    k, l = e1[0] + e2[0], e1[1] + e2[1]
    rep = check_derivation(out, k, l, D)
    if not rep.passed:
        raise ConstructionFailed(f"bracket left Der({k},{l}) at {rep.first_failure().axiom}", rep)
    return out


def conjugate_derivation(sigma, T, k: int, l: int, source: Dialgebra, target: Dialgebra) -> np.ndarray:
    """sigma T sigma^-1 for an isomorphism sigma: source -> target."""
    sigma = np.asarray(sigma, dtype=object)
    if sigma.shape != (target.n, source.n) or not la.is_invertible(sigma):
        raise NotAnIsomorphism("sigma is not invertible")
    if not check_morphism(sigma, source, target).passed:
        raise NotAnIsomorphism("sigma is not a dialgebra morphism")
    if not is_derivation(T, k, l, source):
        raise NotADerivation(f"operator is not an (alpha^{k}, beta^{l})-derivation of {source.label}")
    out = la.matmul(sigma, T, la.invert(sigma))
    rep = check_derivation(out, k, l, target)
    if not rep.passed:
        raise ConstructionFailed("conjugated operator is not a derivation of the target", rep)
    return out
