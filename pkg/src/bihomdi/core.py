"""BiHom-associative dialgebras given by structure constants.

A dialgebra stores two product tensors (``left`` for x -| y, ``right`` for
x |- y) and the matrices of its two structure maps.  Every identity is
checked on basis triples by exact tensor contraction; bilinearity makes this
sufficient for all vectors.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass

import numpy as np

from . import linalg as la
from .errors import (
    DimensionMismatch,
    MapsDoNotCommute,
    NegativePowerOnSingularMap,
    NotAnIdeal,
    SingularMatrix,
)
from .field import QQ
from .report import CheckReport, result_from_residual

AXIOM_IDS = ("commute", "eq4", "eq5", "eq6", "eq7", "eq8")

# (first inner product, outer product) on the left-hand side
# (x p1 y) p2 beta(z), and (outer, inner) on the right alpha(x) p3 (y p4 z).
_AXIOM_SHAPES = {
    "eq4": ("left", "left", "left", "left"),
    "eq5": ("left", "left", "left", "right"),
    "eq6": ("right", "left", "right", "left"),
    "eq7": ("left", "right", "right", "right"),
    "eq8": ("right", "right", "right", "right"),
}

_AXIOM_TEXT = {
    "commute": "alpha beta = beta alpha",
    "eq4": "(x-|y)-|b(z) = a(x)-|(y-|z)",
    "eq5": "(x-|y)-|b(z) = a(x)-|(y|-z)",
    "eq6": "(x|-y)-|b(z) = a(x)|-(y-|z)",
    "eq7": "(x-|y)|-b(z) = a(x)|-(y|-z)",
    "eq8": "(x|-y)|-b(z) = a(x)|-(y|-z)",
}


@dataclass(frozen=True, eq=False)
class Dialgebra:
    left: np.ndarray
    right: np.ndarray
    alpha: np.ndarray
    beta: np.ndarray
    label: str = ""
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        n = np.shape(self.alpha)[0] if np.ndim(self.alpha) == 2 else -1
        for name, shape in (("left", (n, n, n)), ("right", (n, n, n)), ("alpha", (n, n)), ("beta", (n, n))):
            if np.shape(getattr(self, name)) != shape:
                raise DimensionMismatch(f"{name} has shape {np.shape(getattr(self, name))}, expected {shape}")
        field = la.field_of(self.left, self.right, self.alpha, self.beta)
        for name in ("left", "right", "alpha", "beta"):
            object.__setattr__(self, name, la.frozen(getattr(self, name)))
        object.__setattr__(self, "field", field)
        if validate and not la.commutes(self.alpha, self.beta):
            raise MapsDoNotCommute(f"{self.label or 'dialgebra'}: alpha beta != beta alpha")

    @property
    def n(self) -> int:
        return self.alpha.shape[0]

    def __repr__(self):
        return f"Dialgebra({self.label!r}, n={self.n}, field={self.field!r})"

    @classmethod
    def zero(cls, n: int, field=QQ, alpha=None, beta=None, label="zero"):
        alpha = la.identity(n, field) if alpha is None else alpha
        beta = la.identity(n, field) if beta is None else beta
        return cls(la.zeros((n, n, n), field), la.zeros((n, n, n), field), alpha, beta, label)

    @classmethod
    def associative(cls, product, alpha, beta, label="", validate=True):
        """A BiHom-associative algebra seen as a dialgebra with equal products."""
        return cls(product, product, alpha, beta, label, validate)

    def with_(self, **changes) -> "Dialgebra":
        kw = dict(left=self.left, right=self.right, alpha=self.alpha, beta=self.beta, label=self.label)
        validate = changes.pop("validate", True)
        kw.update(changes)
        return Dialgebra(validate=validate, **kw)

    def convert(self, field) -> "Dialgebra":
        return Dialgebra(
            la.convert(self.left, field),
            la.convert(self.right, field),
            la.convert(self.alpha, field),
            la.convert(self.beta, field),
            self.label,
            validate=False,
        )

    def mul_left(self, x, y):
        return la.contract_product(self.left, x, y)

    def mul_right(self, x, y):
        return la.contract_product(self.right, x, y)

    def product(self, which: str) -> np.ndarray:
        return self.left if which == "left" else self.right

    @property
    def has_equal_products(self) -> bool:
        return la.equal(self.left, self.right)

    def same_as(self, other: "Dialgebra") -> bool:
        """Tensor-identical structure constants and structure maps."""
        return all(
            la.equal(getattr(self, k), getattr(other, k)) for k in ("left", "right", "alpha", "beta")
        )

    def basis(self) -> list[np.ndarray]:
        return [la.unit_vector(self.n, i, self.field) for i in range(self.n)]

    def power(self, k: int, l: int) -> np.ndarray:
        """Matrix of alpha^k beta^l (negative exponents need invertible maps)."""
        try:
            return la.matmul(la.matrix_power(self.alpha, k), la.matrix_power(self.beta, l))
        except SingularMatrix as exc:
            raise NegativePowerOnSingularMap(f"alpha^{k} beta^{l} on {self.label or 'dialgebra'}") from exc


def describe_axiom(axiom: str) -> str:
    return _AXIOM_TEXT.get(axiom, axiom)


# ---------------------------------------------------------------------------
# residual tensors
# ---------------------------------------------------------------------------


def assoc_residual(p1, p2, p3, p4, alpha, beta) -> np.ndarray:
    """``(x p1 y) p2 beta(z) - alpha(x) p3 (y p4 z)`` on basis triples, indexed [i,j,k,r]."""
    return la.einsum_diff(("ijp,qk,pqr->ijkr", p1, beta, p2), ("pi,jkq,pqr->ijkr", alpha, p4, p3))


def commute_residual(A, B) -> np.ndarray:
    """Column j is alpha(beta(e_j)) - beta(alpha(e_j)); indexed [j, r]."""
    return (la.matmul(A, B) - la.matmul(B, A)).T


def multiplicative_residual(M, T) -> np.ndarray:
    """``M(x*y) - M(x)*M(y)`` on basis pairs, indexed [i, j, r]."""
    return la.post_compose(M, T) - la.twist_inputs(T, M, M)


def check_axioms(D: Dialgebra) -> CheckReport:
    results = [result_from_residual("commute", commute_residual(D.alpha, D.beta))]
    for ax, names in _AXIOM_SHAPES.items():
        p1, p2, p3, p4 = (D.product(k) for k in names)
        results.append(result_from_residual(ax, assoc_residual(p1, p2, p3, p4, D.alpha, D.beta)))
    return CheckReport(f"axioms[{D.label}]", tuple(results))


def check_associative(product, alpha, beta, label="") -> CheckReport:
    """BiHom-associativity of a single product (the five axioms collapse to one)."""
    results = [
        result_from_residual("commute", commute_residual(alpha, beta)),
        result_from_residual("assoc", assoc_residual(product, product, product, product, alpha, beta)),
    ]
    return CheckReport(f"bihom-associative[{label}]", tuple(results))


def check_multiplicative(D: Dialgebra) -> CheckReport:
    results = []
    for mname, M in (("alpha", D.alpha), ("beta", D.beta)):
        for pname in ("left", "right"):
            results.append(result_from_residual(f"mult-{mname}-{pname}", multiplicative_residual(M, D.product(pname))))
    return CheckReport(f"multiplicative[{D.label}]", tuple(results))


def is_multiplicative(D: Dialgebra) -> bool:
    return check_multiplicative(D).passed


def is_regular(D: Dialgebra) -> bool:
    return la.is_invertible(D.alpha) and la.is_invertible(D.beta) and is_multiplicative(D)


def check_morphism(f, source: Dialgebra, target: Dialgebra) -> CheckReport:
    """f o alpha = alpha' o f, f o beta = beta' o f and f preserves both products."""
    f = np.asarray(f, dtype=object)
    if f.shape != (target.n, source.n):
        raise DimensionMismatch(f"map of shape {f.shape} from dim {source.n} to dim {target.n}")
    results = [
        result_from_residual("intertwine-alpha", (la.matmul(f, source.alpha) - la.matmul(target.alpha, f)).T),
        result_from_residual("intertwine-beta", (la.matmul(f, source.beta) - la.matmul(target.beta, f)).T),
    ]
    for pname in ("left", "right"):
        res = la.post_compose(f, source.product(pname)) - la.twist_inputs(target.product(pname), f, f)
        results.append(result_from_residual(f"preserve-{pname}", res))
    return CheckReport(f"morphism[{source.label}->{target.label}]", tuple(results))


def is_morphism(f, source: Dialgebra, target: Dialgebra) -> bool:
    return check_morphism(f, source, target).passed


# ---------------------------------------------------------------------------
# subspaces, ideals, quotients
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Subspace:
    n: int
    basis: tuple

    def __post_init__(self):
        vecs = [np.asarray(v, dtype=object) for v in self.basis]
        for v in vecs:
            if v.shape != (self.n,):
                raise DimensionMismatch(f"vector of shape {v.shape} in a subspace of dim-{self.n} space")
        if vecs and la.rank(np.array(vecs, dtype=object)) != len(vecs):
            raise ValueError("subspace basis vectors are linearly dependent")
        object.__setattr__(self, "basis", tuple(la.frozen(v) for v in vecs))

    @classmethod
    def spanned_by(cls, n: int, vectors, field=QQ) -> "Subspace":
        return cls(n, tuple(la.row_basis(vectors, n, field)))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, ())

    @classmethod
    def whole(cls, n: int, field=QQ) -> "Subspace":
        return cls(n, tuple(la.unit_vector(n, i, field) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        return la.in_span(list(self.basis), v)

    def contains_all(self, vectors) -> bool:
        return la.span_contains(list(self.basis), vectors)


def kernel(f, field=None) -> Subspace:
    f = np.asarray(f, dtype=object)
    return Subspace(f.shape[1], tuple(la.nullspace(f, field)))


def image(f, field=None) -> Subspace:
    f = np.asarray(f, dtype=object)
    field = field or la.field_of(f)
    return Subspace.spanned_by(f.shape[0], la.columns(f), field)


def _map_images(S: Subspace, M) -> list:
    return [la.apply(M, v) for v in S.basis]


def is_subalgebra(S: Subspace, D: Dialgebra) -> bool:
    if S.n != D.n:
        raise DimensionMismatch(f"subspace of dim-{S.n} space in a dim-{D.n} algebra")
    images = _map_images(S, D.alpha) + _map_images(S, D.beta)
    for x in S.basis:
        for y in S.basis:
            images.append(D.mul_left(x, y))
            images.append(D.mul_right(x, y))
    return S.contains_all(images)


def is_ideal(S: Subspace, D: Dialgebra, side: str = "two-sided") -> bool:
    """BiHom-ideal test; stability under beta is required as well as under alpha."""
    if side not in ("left", "right", "two-sided"):
        raise ValueError(f"side must be left, right or two-sided, not {side!r}")
    if S.n != D.n:
        raise DimensionMismatch(f"subspace of dim-{S.n} space in a dim-{D.n} algebra")
    images = _map_images(S, D.alpha) + _map_images(S, D.beta)
    for x in D.basis():
        for y in S.basis:
            if side in ("left", "two-sided"):
                images += [D.mul_left(x, y), D.mul_right(x, y)]
            if side in ("right", "two-sided"):
                images += [D.mul_left(y, x), D.mul_right(y, x)]
    return S.contains_all(images)


def _quotient_coordinates(I: Subspace, field):
    """Echelon data for reducing vectors modulo I: (pivot rows, complement columns)."""
    if I.dim:
        R, pivots = la.rref(np.array(I.basis, dtype=object))
        rows = {c: R[r] for r, c in enumerate(pivots)}
    else:
        rows = {}
    complement = [c for c in range(I.n) if c not in rows]
    return rows, complement


def _reduce(v, rows, complement):
    v = np.array(v, dtype=object)
    for c, row in rows.items():
        if v[c] != 0:
            v = v - v[c] * row
    return v[complement]


def quotient(D: Dialgebra, I: Subspace, label: str | None = None) -> Dialgebra:
    """D/I with structure constants on the complement of I's pivot columns."""
    if not is_ideal(I, D, "two-sided"):
        raise NotAnIdeal(f"subspace of dim {I.dim} is not a two-sided BiHom-ideal of {D.label}")
    rows, comp = _quotient_coordinates(I, D.field)
    m = len(comp)
    F = D.field
    left = la.zeros((m, m, m), F)
    right = la.zeros((m, m, m), F)
    alpha = la.zeros((m, m), F)
    beta = la.zeros((m, m), F)
    for a, i in enumerate(comp):
        alpha[:, a] = _reduce(D.alpha[:, i], rows, comp)
        beta[:, a] = _reduce(D.beta[:, i], rows, comp)
        for b, j in enumerate(comp):
            left[a, b] = _reduce(D.left[i, j], rows, comp)
            right[a, b] = _reduce(D.right[i, j], rows, comp)
    return Dialgebra(left, right, alpha, beta, label or f"{D.label}/I{I.dim}")


def quotient_projection(D: Dialgebra, I: Subspace) -> np.ndarray:
    """Matrix of the canonical map D -> D/I in the coordinates used by :func:`quotient`."""
    rows, comp = _quotient_coordinates(I, D.field)
    P = la.zeros((len(comp), D.n), D.field)
    for j in range(D.n):
        P[:, j] = _reduce(la.unit_vector(D.n, j, D.field), rows, comp)
    return P


def direct_sum(A: Dialgebra, B: Dialgebra, label: str | None = None) -> Dialgebra:
    F = la.field_of(A.alpha, B.alpha, default=A.field if A.n else B.field)
    n, m = A.n, B.n
    N = n + m
    left = la.zeros((N, N, N), F)
    right = la.zeros((N, N, N), F)
    left[:n, :n, :n] = A.left
    left[n:, n:, n:] = B.left
    right[:n, :n, :n] = A.right
    right[n:, n:, n:] = B.right
    return Dialgebra(
        left, right, la.block_diag(A.alpha, B.alpha, F), la.block_diag(A.beta, B.beta, F),
        label or f"{A.label}+{B.label}",
    )


def graph(xi, A: Dialgebra, B: Dialgebra) -> Subspace:
    xi = np.asarray(xi, dtype=object)
    if xi.shape != (B.n, A.n):
        raise DimensionMismatch(f"map of shape {xi.shape} from dim {A.n} to dim {B.n}")
    vecs = [np.concatenate([e, la.apply(xi, e)]) for e in A.basis()]
    return Subspace(A.n + B.n, tuple(vecs))


def graph_is_subalgebra(xi, A: Dialgebra, B: Dialgebra) -> bool:
    return is_subalgebra(graph(xi, A, B), direct_sum(A, B))


def matrix_dialgebra(D: Dialgebra, k: int, label: str | None = None) -> Dialgebra:
    """M_k(D): basis E_ab (x) e_i at index (a*k + b)*n + i, row-by-column products."""
    if k < 1:
        raise ValueError("matrix size must be at least 1")
    n, F = D.n, D.field
    N = k * k * n

    def idx(a, b, i):
        return (a * k + b) * n + i

    left = la.zeros((N, N, N), F)
    right = la.zeros((N, N, N), F)
    alpha = la.zeros((N, N), F)
    beta = la.zeros((N, N), F)
    for a in range(k):
        for b in range(k):
            blk = slice(idx(a, b, 0), idx(a, b, 0) + n)
            alpha[blk, blk] = D.alpha
            beta[blk, blk] = D.beta
            for d in range(k):
                out = slice(idx(a, d, 0), idx(a, d, 0) + n)
                for i in range(n):
                    for j in range(n):
                        left[idx(a, b, i), idx(b, d, j), out] = D.left[i, j]
                        right[idx(a, b, i), idx(b, d, j), out] = D.right[i, j]
    return Dialgebra(left, right, alpha, beta, label or f"M{k}({D.label})")


def transport(D: Dialgebra, g, label: str | None = None) -> Dialgebra:
    """The algebra structure carried over by an invertible g, so that g: D -> result is an isomorphism."""
    g = np.asarray(g, dtype=object)
    gi = la.invert(g)
    left = la.post_compose(g, la.twist_inputs(D.left, gi, gi))
    right = la.post_compose(g, la.twist_inputs(D.right, gi, gi))
    return Dialgebra(
        left, right, la.matmul(g, D.alpha, gi), la.matmul(g, D.beta, gi), label or f"g.{D.label}",
    )
