"""Degree-two cohomology of a dialgebra with coefficients in a trivial module.

A cochain is a pair of bilinear maps D x D -> M stored as tensors of shape
(n, n, m).  Central extensions are built on D (+) M with D first.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass

import numpy as np

from . import linalg as la
from .core import Dialgebra, Subspace, assoc_residual, check_morphism
from .errors import DimensionMismatch, MapsDoNotCommute, NotCocycles, NotExact
from .field import QQ
from .report import CheckReport, result_from_residual

COCYCLE_IDS = ("cc1", "cc2", "cc3", "cc4", "cc5")

# theta_a(x p y, b(z)) = theta_b(a(x), y q z) as (a, p, b, q); 1 and 2 pick theta
_COCYCLE_SHAPES = {
    "cc1": (1, "left", 1, "left"),
    "cc2": (1, "left", 1, "right"),
    "cc3": (2, "right", 2, "right"),
    "cc4": (2, "left", 2, "right"),
    "cc5": (1, "right", 2, "left"),
}

# which dialgebra axiom of the extension carries each cocycle identity
AXIOM_OF = {"cc1": "eq4", "cc2": "eq5", "cc3": "eq8", "cc4": "eq7", "cc5": "eq6"}


@dataclass(frozen=True, eq=False)
class BiHomModule:
    alpha: np.ndarray
    beta: np.ndarray
    label: str = "M"
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        if np.shape(self.alpha) != np.shape(self.beta) or np.ndim(self.alpha) != 2:
            raise DimensionMismatch("module maps must be square of equal size")
        object.__setattr__(self, "alpha", la.frozen(self.alpha))
        object.__setattr__(self, "beta", la.frozen(self.beta))
        if validate and not la.commutes(self.alpha, self.beta):
            raise MapsDoNotCommute(f"{self.label}: alpha_M beta_M != beta_M alpha_M")

    @property
    def m(self) -> int:
        return self.alpha.shape[0]

    @classmethod
    def trivial(cls, m: int = 1, field=QQ) -> "BiHomModule":
        """m-dimensional module with identity structure maps."""
        I = la.identity(m, field)
        return cls(I, I, f"K^{m}")


@dataclass(frozen=True, eq=False)
class CochainPair:
    theta1: np.ndarray
    theta2: np.ndarray

    def __post_init__(self):
        if np.shape(self.theta1) != np.shape(self.theta2) or np.ndim(self.theta1) != 3:
            raise DimensionMismatch("both cochains must be tensors of the same shape (n, n, m)")
        object.__setattr__(self, "theta1", la.frozen(self.theta1))
        object.__setattr__(self, "theta2", la.frozen(self.theta2))

    @property
    def n(self) -> int:
        return self.theta1.shape[0]

    @property
    def m(self) -> int:
        return self.theta1.shape[2]

    def theta(self, which: int):
        return self.theta1 if which == 1 else self.theta2

    def __add__(self, other: "CochainPair") -> "CochainPair":
        return CochainPair(self.theta1 + other.theta1, self.theta2 + other.theta2)

    def __sub__(self, other: "CochainPair") -> "CochainPair":
        return CochainPair(self.theta1 - other.theta1, self.theta2 - other.theta2)

    def scale(self, c) -> "CochainPair":
        return CochainPair(self.theta1 * c, self.theta2 * c)

    def flat(self) -> np.ndarray:
        return np.concatenate([self.theta1.reshape(-1), self.theta2.reshape(-1)])

    @classmethod
    def from_flat(cls, vec, n: int, m: int) -> "CochainPair":
        vec = np.asarray(vec, dtype=object)
        k = n * n * m
        return cls(vec[:k].reshape(n, n, m), vec[k:].reshape(n, n, m))

    @classmethod
    def zero(cls, n: int, m: int, field=QQ) -> "CochainPair":
        return cls(la.zeros((n, n, m), field), la.zeros((n, n, m), field))


def _check_shapes(T: CochainPair, D: Dialgebra, M: BiHomModule):
    if T.n != D.n or T.m != M.m:
        raise DimensionMismatch(f"cochain of shape ({T.n},{T.n},{T.m}) for dim {D.n} and module dim {M.m}")


def cocycle_residuals(T: CochainPair, D: Dialgebra) -> dict:
    out = {}
    for cid, (a, p, b, q) in _COCYCLE_SHAPES.items():
        out[cid] = assoc_residual(D.product(p), T.theta(a), T.theta(b), D.product(q), D.alpha, D.beta)
    return out


def is_cocycle(T: CochainPair, D: Dialgebra, M: BiHomModule) -> CheckReport:
    _check_shapes(T, D, M)
    res = cocycle_residuals(T, D)
    return CheckReport(f"cocycle[{D.label}]", tuple(result_from_residual(c, res[c]) for c in COCYCLE_IDS))


def coboundary(nu, D: Dialgebra) -> CochainPair:
    """(nu(x -| y), nu(x |- y)) for a linear map nu: D -> M of shape (m, n)."""
    nu = np.asarray(nu, dtype=object)
    if nu.ndim != 2 or nu.shape[1] != D.n:
        raise DimensionMismatch(f"nu of shape {nu.shape} on a {D.n}-dimensional algebra")
    return CochainPair(la.post_compose(nu, D.left), la.post_compose(nu, D.right))


def central_extension(D: Dialgebra, M: BiHomModule, T: CochainPair, label: str | None = None) -> Dialgebra:
    """D_T on D (+) M: (x + u) -| (y + v) = x -| y + theta1(x, y), likewise for |-."""
    _check_shapes(T, D, M)
    n, m = D.n, M.m
    N = n + m
    F = la.field_of(D.left, D.alpha, M.alpha, T.theta1)
    prods = {}
    for side, theta in (("left", T.theta1), ("right", T.theta2)):
        P = la.zeros((N, N, N), F)
        P[:n, :n, :n] = D.product(side)
        P[:n, :n, n:] = theta
        prods[side] = P
    return Dialgebra(
        prods["left"], prods["right"],
        la.block_diag(D.alpha, M.alpha, F), la.block_diag(D.beta, M.beta, F),
        label or f"{D.label}_theta", validate=False,
    )


def check_compatibility(T: CochainPair, D: Dialgebra, M: BiHomModule) -> CheckReport:
    """theta o (a x a) = a_M o theta and the beta analogue, for both cochains.

    Not part of the cocycle conditions; it is what multiplicativity of D_T
    needs on the M component.
    """
    _check_shapes(T, D, M)
    results = []
    for mname, A, AM in (("alpha", D.alpha, M.alpha), ("beta", D.beta, M.beta)):
        for k in (1, 2):
            th = T.theta(k)
            results.append(result_from_residual(f"compat-{mname}-{k}", la.twist_inputs(th, A, A) - la.post_compose(AM, th)))
    return CheckReport(f"compatibility[{D.label}]", tuple(results))


# ---------------------------------------------------------------------------
# the linear systems
# ---------------------------------------------------------------------------


def _unit_cochains(n: int, m: int, field):
    k = 2 * n * n * m
    for u in range(k):
        vec = la.zeros((k,), field)
        vec[u] = field.one
        yield CochainPair.from_flat(vec, n, m)


def cocycle_matrix(D: Dialgebra, M: BiHomModule) -> np.ndarray:
    """Matrix of Theta -> (cc1..cc5 residuals); columns follow CochainPair.flat order."""
    F = la.field_of(D.left, D.alpha, M.alpha)
    cols = []
    for T in _unit_cochains(D.n, M.m, F):
        res = cocycle_residuals(T, D)
        cols.append(np.concatenate([res[c].reshape(-1) for c in COCYCLE_IDS]))
    if not cols:
        return la.zeros((0, 0), F)
    return np.stack(cols, axis=1)


def coboundary_matrix(D: Dialgebra, M: BiHomModule) -> np.ndarray:
    """Matrix of nu -> flat(d nu); column r * n + c is the unit nu with nu[r, c] = 1."""
    F = la.field_of(D.left, D.alpha, M.alpha)
    n, m = D.n, M.m
    cols = []
    for r in range(m):
        for c in range(n):
            nu = la.zeros((m, n), F)
            nu[r, c] = F.one
            cols.append(coboundary(nu, D).flat())
    if not cols:
        return la.zeros((2 * n * n * m, 0), F)
    return np.stack(cols, axis=1)


@dataclass(frozen=True)
class CohomologyDims:
    z2: int
    b2: int
    h2: int

    def as_tuple(self):
        return (self.z2, self.b2, self.h2)

    def __iter__(self):
        return iter(self.as_tuple())


def cohomology_dims(D: Dialgebra, M: BiHomModule | None = None) -> CohomologyDims:
    M = M or BiHomModule.trivial(1, D.field)
    unknowns = 2 * D.n * D.n * M.m
    C = cocycle_matrix(D, M)
    z2 = unknowns - (la.rank(C) if C.size else 0)
    B = coboundary_matrix(D, M)
    b2 = la.rank(B) if B.size else 0
    return CohomologyDims(z2, b2, z2 - b2)


def cocycle_basis(D: Dialgebra, M: BiHomModule) -> list[CochainPair]:
    C = cocycle_matrix(D, M)
    return [CochainPair.from_flat(v, D.n, M.m) for v in la.nullspace(C, la.field_of(D.left, D.alpha))]


def intertwining_maps(D: Dialgebra, M: BiHomModule) -> list[np.ndarray]:
    """Basis of nu: D -> M with nu alpha = alpha_M nu and nu beta = beta_M nu."""
    F = la.field_of(D.left, D.alpha, M.alpha)
    n, m = D.n, M.m
    cols = []
    for r in range(m):
        for c in range(n):
            nu = la.zeros((m, n), F)
            nu[r, c] = F.one
            cols.append(np.concatenate([_intertwine_defect(nu, D, M, k).reshape(-1) for k in ("alpha", "beta")]))
    if not cols:
        return []
    A = np.stack(cols, axis=1)
    return [v.reshape(m, n) for v in la.nullspace(A, F)]


def _intertwine_defect(nu, D, M, which):
    A, AM = (D.alpha, M.alpha) if which == "alpha" else (D.beta, M.beta)
    return la.matmul(nu, A) - la.matmul(AM, nu)


# ---------------------------------------------------------------------------
# extensions
# ---------------------------------------------------------------------------


def center(D: Dialgebra) -> Subspace:
    """{z : z -| x = x -| z = z |- x = x |- z = 0 for all x}."""
    n, F = D.n, D.field
    blocks = []
    for T in (D.left, D.right):
        # rows indexed by (x, r), columns by the z coordinate
        blocks.append(T.transpose(1, 2, 0).reshape(n * n, n))
        blocks.append(T.transpose(0, 2, 1).reshape(n * n, n))
    A = np.concatenate(blocks, axis=0) if n else la.zeros((0, 0), F)
    return Subspace(n, tuple(la.nullspace(A, F))) if n else Subspace.zero(0)


@dataclass(frozen=True, eq=False)
class ExtensionTriple:
    """0 -> D1 -phi-> D2 -psi-> D3 -> 0, checked for exactness."""

    D1: Dialgebra
    D2: Dialgebra
    D3: Dialgebra
    phi: np.ndarray
    psi: np.ndarray
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        phi = np.asarray(self.phi, dtype=object)
        psi = np.asarray(self.psi, dtype=object)
        if phi.shape != (self.D2.n, self.D1.n) or psi.shape != (self.D3.n, self.D2.n):
            raise DimensionMismatch("phi must map D1 -> D2 and psi D2 -> D3")
        object.__setattr__(self, "phi", la.frozen(phi))
        object.__setattr__(self, "psi", la.frozen(psi))
        if validate:
            problem = self.exactness_problem()
            if problem:
                raise NotExact(problem)

    def exactness_problem(self) -> str:
        rphi = la.rank(self.phi) if self.phi.size else 0
        rpsi = la.rank(self.psi) if self.psi.size else 0
        if rphi != self.D1.n:
            return "phi is not injective"
        if rpsi != self.D3.n:
            return "psi is not surjective"
        if self.phi.size and self.psi.size and not la.is_zero(la.matmul(self.psi, self.phi)):
            return "psi o phi != 0"
        if rphi != self.D2.n - rpsi:
            return "image of phi is smaller than the kernel of psi"
        return ""

    def check_morphisms(self) -> CheckReport:
        a = check_morphism(self.phi, self.D1, self.D2)
        b = check_morphism(self.psi, self.D2, self.D3)
        return a.merged(b, "extension-morphisms")


def is_central(e: ExtensionTriple) -> bool:
    K = la.nullspace(e.psi, e.D2.field) if e.psi.size else [la.unit_vector(e.D2.n, i, e.D2.field) for i in range(e.D2.n)]
    return center(e.D2).contains_all(K)


def zero_module_algebra(M: BiHomModule) -> Dialgebra:
    F = la.field_of(M.alpha)
    m = M.m
    return Dialgebra(la.zeros((m, m, m), F), la.zeros((m, m, m), F), M.alpha, M.beta, M.label)


def extension_from_cochain(D: Dialgebra, M: BiHomModule, T: CochainPair) -> ExtensionTriple:
    """0 -> M -> D_T -> D -> 0 with the inclusion of M and the projection onto D."""
    n, m = D.n, M.m
    F = la.field_of(D.left, D.alpha, M.alpha)
    phi = la.zeros((n + m, m), F)
    phi[n:, :] = la.identity(m, F)
    psi = la.zeros((n, n + m), F)
    psi[:, :n] = la.identity(n, F)
    return ExtensionTriple(zero_module_algebra(M), central_extension(D, M, T), D, phi, psi)


def extension_map(nu, D: Dialgebra, M: BiHomModule) -> np.ndarray:
    """f(x + v) = x + nu(x) + v on D (+) M."""
    n, m = D.n, M.m
    F = la.field_of(D.left, D.alpha, M.alpha)
    f = la.identity(n + m, F)
    f[n:, :n] = np.asarray(nu, dtype=object)
    return f


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    cohomologous: bool  # T2 - T1 is a coboundary of some (not necessarily intertwining) nu
    nu: np.ndarray | None = None
    f: np.ndarray | None = None
    note: str = ""

    def __bool__(self):
        return self.equivalent


def extensions_equivalent(T1: CochainPair, T2: CochainPair, D: Dialgebra, M: BiHomModule) -> EquivalenceResult:
    """Decide whether D_T1 and D_T2 are equivalent extensions of D by M.

    The witness is f(x + v) = x + nu(x) + v with T2 - T1 = d nu; f is required
    to intertwine the structure maps, so nu must intertwine them as well.
    """
    for name, T in (("first", T1), ("second", T2)):
        rep = is_cocycle(T, D, M)
        if not rep.passed:
            raise NotCocycles(f"the {name} cochain fails {rep.first_failure().axiom}")
    F = la.field_of(D.left, D.alpha, M.alpha)
    n, m = D.n, M.m
    diff = (T2 - T1).flat()
    B = coboundary_matrix(D, M)
    if B.size == 0:
        cohomologous = la.is_zero(diff)
    else:
        cohomologous = la.solve(B, diff, F) is not None
    # augmented system: coboundary plus intertwining with alpha and beta
    rows = [B]
    targets = [diff]
    for which in ("alpha", "beta"):
        cols = []
        for r in range(m):
            for c in range(n):
                nu = la.zeros((m, n), F)
                nu[r, c] = F.one
                cols.append(_intertwine_defect(nu, D, M, which).reshape(-1))
        if cols:
            rows.append(np.stack(cols, axis=1))
            targets.append(la.zeros((n * m,), F))
    sol = None
    if n * m:
        sol = la.solve(np.concatenate(rows, axis=0), np.concatenate(targets), F)
    elif la.is_zero(diff):
        sol = la.zeros((0,), F)
    if sol is None:
        note = "cohomologous, but no structure-preserving witness" if cohomologous else "difference is not a coboundary"
        return EquivalenceResult(False, cohomologous, note=note)
    nu = np.asarray(sol, dtype=object).reshape(m, n)
    f = extension_map(nu, D, M)
    e1 = extension_from_cochain(D, M, T1)
    e2 = extension_from_cochain(D, M, T2)
    ok = (
        check_morphism(f, e1.D2, e2.D2).passed
        and la.equal(la.matmul(f, e1.phi), e2.phi)
        and la.equal(la.matmul(e2.psi, f), e1.psi)
    )
    return EquivalenceResult(ok, True, nu, f, "" if ok else "witness failed verification")


def random_cochain(n: int, m: int, field, rng) -> CochainPair:
    """Uniform random cochain pair (for finite fields) or small-integer entries over Q."""
    p = getattr(field, "p", None)
    hi = p if p else 5
    vals = rng.integers(0, hi, size=2 * n * n * m)
    if not p:
        vals = vals - 2
    return CochainPair.from_flat([field(int(v)) for v in vals], n, m)

