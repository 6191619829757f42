"""Bracket algebras: BiHom-Lie, BiHom-Leibniz and BiHom-Poisson structures.

A bracket tensor uses the same convention as a product:
``[e_i, e_j] = sum_k bracket[i, j, k] e_k``.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass

import numpy as np

from . import linalg as la
from .core import Dialgebra, assoc_residual, check_axioms, commute_residual, is_regular, multiplicative_residual
from .errors import (
    ConstructionFailed,
    DimensionMismatch,
    MapsDoNotCommute,
    NotAMorphism,
    NotNijenhuis,
    NotRegular,
    ProductsDiffer,
)
from .report import AxiomResult, CheckReport, result_from_residual

KINDS = ("lie", "leibniz")


@dataclass(frozen=True, eq=False)
class BracketAlgebra:
    bracket: np.ndarray
    alpha: np.ndarray
    beta: np.ndarray
    kind: str = "leibniz"
    label: str = ""
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, not {self.kind!r}")
        n = np.shape(self.alpha)[0] if np.ndim(self.alpha) == 2 else -1
        for name, shape in (("bracket", (n, n, n)), ("alpha", (n, n)), ("beta", (n, n))):
            if np.shape(getattr(self, name)) != shape:
                raise DimensionMismatch(f"{name} has shape {np.shape(getattr(self, name))}, expected {shape}")
            object.__setattr__(self, name, la.frozen(getattr(self, name)))
        object.__setattr__(self, "field", la.field_of(self.bracket, self.alpha, self.beta))
        if validate and not la.commutes(self.alpha, self.beta):
            raise MapsDoNotCommute(f"{self.label or 'bracket algebra'}: alpha beta != beta alpha")

    @property
    def n(self) -> int:
        return self.alpha.shape[0]

    def __repr__(self):
        return f"BracketAlgebra({self.label!r}, n={self.n}, kind={self.kind})"

    def br(self, x, y):
        return la.contract_product(self.bracket, x, y)

    def as_kind(self, kind: str) -> "BracketAlgebra":
        return BracketAlgebra(self.bracket, self.alpha, self.beta, kind, self.label, validate=False)

    def with_bracket(self, bracket, label=None) -> "BracketAlgebra":
        return BracketAlgebra(bracket, self.alpha, self.beta, self.kind, label or self.label, validate=False)

    def convert(self, field) -> "BracketAlgebra":
        return BracketAlgebra(
            la.convert(self.bracket, field), la.convert(self.alpha, field), la.convert(self.beta, field),
            self.kind, self.label, validate=False,
        )

    def same_as(self, other: "BracketAlgebra") -> bool:
        return all(la.equal(getattr(self, k), getattr(other, k)) for k in ("bracket", "alpha", "beta"))


# ---------------------------------------------------------------------------
# residuals
# ---------------------------------------------------------------------------


def skew_residual(T, A, B):
    """[b(x), a(y)] + [b(y), a(x)], indexed [i, j, r]."""
    S = la.twist_inputs(T, B, A)
    return S + S.transpose(1, 0, 2)


def jacobi_residual(T, A, B):
    """Cyclic sum of [b^2(x), [b(y), a(z)]], indexed [i, j, k, r]."""
    S = la.twist_inputs(T, B, A)
    J = la.einsum("pi,jkq,pqr->ijkr", la.matmul(B, B), S, T)
    return J + J.transpose(2, 0, 1, 3) + J.transpose(1, 2, 0, 3)


def leibniz_residual(T, A, B):
    """[[x, y], ab(z)] - [[x, b(z)], a(y)] - [a(x), [y, a(z)]], indexed [i, j, k, r]."""
    n = A.shape[0]
    I = la.identity(n, la.field_of(A, T))
    t1 = la.einsum("ijp,qk,pqr->ijkr", T, la.matmul(A, B), T)
    U = la.twist_inputs(T, I, B)
    t2 = la.einsum("ikp,qj,pqr->ijkr", U, A, T)
    V = la.twist_inputs(T, I, A)
    t3 = la.einsum("pi,jkq,pqr->ijkr", A, V, T)
    return t1 - t2 - t3


def _mult_results(L: BracketAlgebra):
    return [
        result_from_residual("mult-alpha", multiplicative_residual(L.alpha, L.bracket)),
        result_from_residual("mult-beta", multiplicative_residual(L.beta, L.bracket)),
    ]


def check_bihom_lie(L: BracketAlgebra) -> CheckReport:
    results = [result_from_residual("commute", commute_residual(L.alpha, L.beta))]
    results += _mult_results(L)
    results.append(result_from_residual("skew", skew_residual(L.bracket, L.alpha, L.beta)))
    results.append(result_from_residual("jacobi", jacobi_residual(L.bracket, L.alpha, L.beta)))
    return CheckReport(f"bihom-lie[{L.label}]", tuple(results))


def check_bihom_leibniz(L: BracketAlgebra) -> CheckReport:
    results = [
        result_from_residual("commute", commute_residual(L.alpha, L.beta)),
        result_from_residual("leibniz", leibniz_residual(L.bracket, L.alpha, L.beta)),
    ]
    return CheckReport(f"bihom-leibniz[{L.label}]", tuple(results))


def check_bracket(L: BracketAlgebra) -> CheckReport:
    """Run the checker matching the algebra's kind."""
    return check_bihom_lie(L) if L.kind == "lie" else check_bihom_leibniz(L)


def check_bracket_morphism(f, source: BracketAlgebra, target: BracketAlgebra) -> CheckReport:
    f = np.asarray(f, dtype=object)
    if f.shape != (target.n, source.n):
        raise DimensionMismatch(f"map of shape {f.shape} from dim {source.n} to dim {target.n}")
    res = la.post_compose(f, source.bracket) - la.twist_inputs(target.bracket, f, f)
    results = [
        result_from_residual("intertwine-alpha", (la.matmul(f, source.alpha) - la.matmul(target.alpha, f)).T),
        result_from_residual("intertwine-beta", (la.matmul(f, source.beta) - la.matmul(target.beta, f)).T),
        result_from_residual("preserve-bracket", res),
    ]
    return CheckReport("bracket-morphism", tuple(results))


# ---------------------------------------------------------------------------
# commutator functors
# ---------------------------------------------------------------------------


def _twist_pair(alpha, beta):
    """(alpha^-1 beta, alpha beta^-1)."""
    ai, bi = la.invert(alpha), la.invert(beta)
    return la.matmul(ai, beta), la.matmul(alpha, bi)


def commutator_tensor(first, second, alpha, beta):
    """x first y - a^-1 b(y) second a b^-1(x)."""
    P, Q = _twist_pair(alpha, beta)
    return first - la.einsum("pj,qi,pqk->ijk", P, Q, second)


def _require_regular(D: Dialgebra, what: str):
    if not is_regular(D):
        raise NotRegular(f"{what} needs a regular algebra; {D.label} is not")


def _verified(L: BracketAlgebra, what: str) -> BracketAlgebra:
    rep = check_bracket(L)
    if not rep.passed:
        raise ConstructionFailed(f"{what} produced a bracket failing {rep.first_failure().axiom}", rep)
    return L


def lie_from_associative(A: Dialgebra, label: str | None = None, verify: bool = True) -> BracketAlgebra:
    """[x, y] = x y - a^-1 b(y) a b^-1(x) on a regular algebra with one product."""
    if not A.has_equal_products:
        raise ProductsDiffer(f"{A.label} has two different products")
    _require_regular(A, "the commutator bracket")
    L = BracketAlgebra(commutator_tensor(A.left, A.left, A.alpha, A.beta), A.alpha, A.beta, "lie", label or f"L({A.label})")
    return _verified(L, "commutator bracket") if verify else L


def lb_functor(D: Dialgebra, label: str | None = None, verify: bool = True) -> BracketAlgebra:
    """[x, y] = x -| y - a^-1 b(y) |- a b^-1(x)."""
    _require_regular(D, "the Leibniz functor")
    L = BracketAlgebra(
        commutator_tensor(D.left, D.right, D.alpha, D.beta), D.alpha, D.beta, "leibniz", label or f"Lb({D.label})"
    )
    return _verified(L, "Leibniz functor") if verify else L


def check_lie_nijenhuis(L: BracketAlgebra, N) -> CheckReport:
    from .constructions import nijenhuis_product

    N = np.asarray(N, dtype=object)
    if N.shape != (L.n, L.n):
        raise DimensionMismatch(f"operator of shape {N.shape} on a {L.n}-dimensional algebra")
    results = [
        result_from_residual("commute-alpha", (la.matmul(N, L.alpha) - la.matmul(L.alpha, N)).T),
        result_from_residual("commute-beta", (la.matmul(N, L.beta) - la.matmul(L.beta, N)).T),
        result_from_residual(
            "nijenhuis",
            la.twist_inputs(L.bracket, N, N) - la.post_compose(N, nijenhuis_product(L.bracket, N)),
        ),
    ]
    return CheckReport(f"lie-nijenhuis[{L.label}]", tuple(results))


def nijenhuis_bracket(L: BracketAlgebra, N, label: str | None = None) -> BracketAlgebra:
    """[x, y]_N = [Nx, y] + [x, Ny] - N[x, y]."""
    from .constructions import nijenhuis_product

    rep = check_lie_nijenhuis(L, N)
    if not rep.passed:
        raise NotNijenhuis(f"operator fails {rep.first_failure().axiom}")
    out = L.with_bracket(nijenhuis_product(L.bracket, np.asarray(N, dtype=object)), label or f"{L.label}_N")
    return _verified(out, "Nijenhuis bracket")


@dataclass(frozen=True)
class TensorComparison:
    equal: bool
    witness: tuple | None
    residual: tuple
    left: np.ndarray
    right: np.ndarray


def compare_tensors(left, right, name="difference") -> TensorComparison:
    res = result_from_residual(name, np.asarray(left, dtype=object) - np.asarray(right, dtype=object))
    return TensorComparison(res.passed, res.witness, res.residual, left, right)


def nijenhuis_orders_agree(A: Dialgebra, N) -> TensorComparison:
    """Compare the two ways of combining the commutator bracket with a Nijenhuis operator.

    Left: Nijenhuis-twist the bracket of A.  Right: take the bracket of the
    Nijenhuis-twisted product.  Both are built without validity checks.
    """
    from .constructions import nijenhuis_product

    if not A.has_equal_products:
        raise ProductsDiffer(f"{A.label} has two different products")
    N = np.asarray(N, dtype=object)
    bracket = commutator_tensor(A.left, A.left, A.alpha, A.beta)
    first = nijenhuis_product(bracket, N)
    twisted = nijenhuis_product(A.left, N)
    second = commutator_tensor(twisted, twisted, A.alpha, A.beta)
    return compare_tensors(first, second, "nijenhuis-order")


def check_lr_conditions(D: Dialgebra) -> CheckReport:
    """a(x) -| (y |- z) = (x -| y) |- b(z) and a(x) -| (y -| z) = (x |- y) |- b(z)."""
    L, R = D.left, D.right
    dil1 = -assoc_residual(L, R, L, R, D.alpha, D.beta)
    dil2 = -assoc_residual(R, R, L, L, D.alpha, D.beta)
    return CheckReport(
        f"lr-conditions[{D.label}]",
        (result_from_residual("dil1", dil1), result_from_residual("dil2", dil2)),
    )


def lr_bracket_conditions(D: Dialgebra) -> bool:
    return check_lr_conditions(D).passed


def lr_bracket(D: Dialgebra, label: str | None = None, verify: bool = True) -> BracketAlgebra:
    """[x, y]_L + [x, y]_R built from both products."""
    _require_regular(D, "the two-sided bracket")
    T = commutator_tensor(D.left, D.left, D.alpha, D.beta) + commutator_tensor(D.right, D.right, D.alpha, D.beta)
    out = BracketAlgebra(T, D.alpha, D.beta, "lie", label or f"LR({D.label})")
    return _verified(out, "two-sided bracket") if verify else out


# ---------------------------------------------------------------------------
# Poisson dialgebras
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class PoissonDialgebra:
    dialgebra: Dialgebra
    bracket: BracketAlgebra
    label: str = ""

    def __post_init__(self):
        D, L = self.dialgebra, self.bracket
        if D.n != L.n:
            raise DimensionMismatch(f"dialgebra of dim {D.n} with bracket of dim {L.n}")
        if not (la.equal(D.alpha, L.alpha) and la.equal(D.beta, L.beta)):
            raise ValueError("dialgebra and bracket must share their structure maps")

    @property
    def n(self) -> int:
        return self.dialgebra.n


def poisson_residuals(D: Dialgebra, T):
    A, B = D.alpha, D.beta
    AB = la.matmul(A, B)
    n = D.n
    I = la.identity(n, D.field)
    V = la.twist_inputs(T, I, A)  # [y, a(z)]
    U = la.twist_inputs(T, I, B)  # [x, b(z)]
    W = la.twist_inputs(T, A, I)  # [a(x), z]
    X = la.twist_inputs(T, B, I)  # [b(x), y]
    out = {}
    for name, P in (("p1", D.left), ("p2", D.right)):
        a = la.einsum("ijp,qk,pqr->ijkr", P, AB, T)
        b = la.einsum("pi,jkq,pqr->ijkr", A, V, P)
        c = la.einsum("ikp,qj,pqr->ijkr", U, A, P)
        out[name] = a - b - c
    b = la.einsum("pj,ikq,pqr->ijkr", B, W, D.right)
    c = la.einsum("ijp,qk,pqr->ijkr", X, B, D.left)
    for name, P in (("p3", D.left), ("p4", D.right)):
        a = la.einsum("pi,jkq,pqr->ijkr", AB, P, T)
        out[name] = a - b - c
    return out


def check_poisson(P: PoissonDialgebra) -> CheckReport:
    D, L = P.dialgebra, P.bracket
    results = [result_from_residual(k, v) for k, v in poisson_residuals(D, L.bracket).items()]
    results.append(result_from_residual("leibniz", leibniz_residual(L.bracket, L.alpha, L.beta)))
    return CheckReport(f"poisson[{P.label}]", tuple(results))


def check_poisson_full(P: PoissonDialgebra) -> CheckReport:
    """Poisson identities together with the dialgebra axioms."""
    return check_axioms(P.dialgebra).merged(check_poisson(P), f"poisson[{P.label}]")


def poisson_functor(D: Dialgebra, printed: bool = False, label: str | None = None, verify: bool = True) -> PoissonDialgebra:
    """P(D) with the twisted commutator bracket.

    ``printed=True`` uses the untwisted x -| y - y |- x instead; it is only a
    BiHom-Leibniz bracket in special cases and is offered for comparison.
    """
    _require_regular(D, "the Poisson functor")
    if printed:
        T = D.left - D.right.transpose(1, 0, 2)
    else:
        T = commutator_tensor(D.left, D.right, D.alpha, D.beta)
    L = BracketAlgebra(T, D.alpha, D.beta, "leibniz", f"Lb({D.label})")
    out = PoissonDialgebra(D, L, label or f"P({D.label})")
    if verify:
        rep = check_poisson(out)
        if not rep.passed:
            raise ConstructionFailed(f"Poisson functor output fails {rep.first_failure().axiom}", rep)
    return out


def poisson_yau_twist(P: PoissonDialgebra, a2, b2, label: str | None = None) -> PoissonDialgebra:
    from .constructions import yau_twist

    D, L = P.dialgebra, P.bracket
    for name, M in (("first", a2), ("second", b2)):
        rep = check_bracket_morphism(M, L, L)
        if not rep.passed:
            raise NotAMorphism(f"{name} twisting map does not preserve the bracket: {rep.first_failure().axiom}")
    D2 = yau_twist(D, a2, b2)
    L2 = BracketAlgebra(la.twist_inputs(L.bracket, a2, b2), D2.alpha, D2.beta, L.kind, f"{L.label}'")
    out = PoissonDialgebra(D2, L2, label or f"yau({P.label})")
    rep = check_poisson(out)
    if not rep.passed:
        raise ConstructionFailed(f"twisted Poisson dialgebra fails {rep.first_failure().axiom}", rep)
    return out


def zero_bracket(D: Dialgebra, kind="leibniz") -> BracketAlgebra:
    return BracketAlgebra(la.zeros((D.n,) * 3, D.field), D.alpha, D.beta, kind, f"0({D.label})")


def leibniz_as_lie_check(L: BracketAlgebra) -> AxiomResult:
    """Skew-symmetry alone, for comparing Leibniz outputs against Lie ones."""
    return result_from_residual("skew", skew_residual(L.bracket, L.alpha, L.beta))
