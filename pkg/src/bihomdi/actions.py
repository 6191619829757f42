"""Actions of one algebra on another and the semidirect products they define.

Semidirect products live on L (+) D with the acted-on algebra L first, so
index ``i < m`` is ``e_i`` of L and ``m + a`` is ``e_a`` of D.  All mixed
products take values in L.

The identities an action must satisfy are exactly the identities of the
semidirect product evaluated on triples that mix the two summands.  They are
reported per triple type, with witnesses given in local (per-summand) 1-based
indices.
"""

from __future__ import annotations

from dataclasses import InitVar, dataclass

import numpy as np

from . import linalg as la
from .brackets import BracketAlgebra, TensorComparison, _twist_pair, commutator_tensor, compare_tensors, leibniz_residual, lb_functor
from .core import _AXIOM_SHAPES, Dialgebra, assoc_residual, check_morphism, is_regular
from .errors import ActionAxiomFails, DimensionMismatch, NotAMorphism, NotRegular
from .report import CheckReport, result_from_residual

# Mixed triple types, in reporting order.  "D" is the acting algebra.
TRIPLE_TYPES = ("DLL", "LDL", "LLD", "LDD", "DLD", "DDL")
LEIBNIZ_IDS = tuple(f"la{i}" for i in range(1, 7))
MIXED_TAGS = ("dl_l", "ld_l", "dl_r", "ld_r")


def action_id(group: int, axiom_index: int) -> str:
    """Label "(01)".."(30)": five dialgebra axioms inside each triple type."""
    return f"({5 * group + axiom_index + 1:02d})"


ACTION_IDS = tuple(action_id(g, a) for g in range(6) for a in range(5))


def _slices(m: int, n: int):
    return {"L": slice(0, m), "D": slice(m, m + n)}


def _restrict(residual, kind: str, m: int, n: int):
    s = _slices(m, n)
    return residual[s[kind[0]], s[kind[1]], s[kind[2]], s["L"]]


def _shape_check(name, arr, shape):
    if np.shape(arr) != shape:
        raise DimensionMismatch(f"{name} has shape {np.shape(arr)}, expected {shape}")


# ---------------------------------------------------------------------------
# Leibniz actions
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class LeibnizAction:
    """D acts on L through [a, x] (act_dl, D x L -> L) and [x, a] (act_ld, L x D -> L)."""

    D: BracketAlgebra
    L: BracketAlgebra
    act_dl: np.ndarray
    act_ld: np.ndarray
    label: str = ""
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        n, m = self.D.n, self.L.n
        _shape_check("act_dl", self.act_dl, (n, m, m))
        _shape_check("act_ld", self.act_ld, (m, n, m))
        object.__setattr__(self, "act_dl", la.frozen(self.act_dl))
        object.__setattr__(self, "act_ld", la.frozen(self.act_ld))
        if validate:
            rep = check_leibniz_action(self)
            if not rep.passed:
                bad = rep.first_failure()
                raise ActionAxiomFails(f"Leibniz action fails {bad.axiom} at {bad.witness} ({bad.note})", rep)


def _leibniz_semidirect_tensor(a: LeibnizAction):
    m, n = a.L.n, a.D.n
    N = m + n
    F = la.field_of(a.L.bracket, a.D.bracket, a.L.alpha, a.D.alpha)
    T = la.zeros((N, N, N), F)
    T[:m, :m, :m] = a.L.bracket
    T[m:, m:, m:] = a.D.bracket
    T[m:, :m, :m] = a.act_dl
    T[:m, m:, :m] = a.act_ld
    A = la.block_diag(a.L.alpha, a.D.alpha, F)
    B = la.block_diag(a.L.beta, a.D.beta, F)
    return T, A, B


def check_leibniz_action(a: LeibnizAction) -> CheckReport:
    T, A, B = _leibniz_semidirect_tensor(a)
    res = leibniz_residual(T, A, B)
    m, n = a.L.n, a.D.n
    results = tuple(
        result_from_residual(aid, _restrict(res, kind, m, n), note=",".join(kind))
        for aid, kind in zip(LEIBNIZ_IDS, TRIPLE_TYPES)
    )
    return CheckReport(f"leibniz-action[{a.label or a.D.label + ' on ' + a.L.label}]", results)


def leibniz_semidirect(a: LeibnizAction, label: str | None = None) -> BracketAlgebra:
    """[(x, a), (y, b)] = ([x, y] + [x, b] + [a, y], [a, b]) on L (+) D."""
    T, A, B = _leibniz_semidirect_tensor(a)
    return BracketAlgebra(T, A, B, "leibniz", label or f"{a.L.label}x|{a.D.label}")


def trivial_leibniz_action(D: BracketAlgebra, L: BracketAlgebra) -> LeibnizAction:
    F = la.field_of(D.bracket, L.bracket)
    n, m = D.n, L.n
    return LeibnizAction(D, L, la.zeros((n, m, m), F), la.zeros((m, n, m), F), "trivial")


def leibniz_self_action(D: BracketAlgebra) -> LeibnizAction:
    return LeibnizAction(D, D, D.bracket, D.bracket, "self")


# ---------------------------------------------------------------------------
# dialgebra actions
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class DialgebraAction:
    """Four mixed products, all valued in L.

    ``dl_l[a, x, r]`` is the coefficient of e_r in a -| x for a in D, x in L;
    ``ld_l`` is x -| a; ``dl_r`` and ``ld_r`` are the |- versions.
    """

    D: Dialgebra
    L: Dialgebra
    dl_l: np.ndarray
    ld_l: np.ndarray
    dl_r: np.ndarray
    ld_r: np.ndarray
    label: str = ""
    validate: InitVar[bool] = True

    def __post_init__(self, validate):
        n, m = self.D.n, self.L.n
        for tag in MIXED_TAGS:
            shape = (n, m, m) if tag.startswith("dl") else (m, n, m)
            _shape_check(tag, getattr(self, tag), shape)
            object.__setattr__(self, tag, la.frozen(getattr(self, tag)))
        if validate:
            rep = check_dialgebra_action(self)
            if not rep.passed:
                bad = rep.first_failure()
                raise ActionAxiomFails(f"action fails {bad.axiom} at {bad.witness} ({bad.note})", rep)

    def mixed(self, tag: str) -> np.ndarray:
        return getattr(self, tag)


def dialgebra_semidirect(a: DialgebraAction, label: str | None = None, validate: bool = False) -> Dialgebra:
    """Block products on L (+) D; D-valued only on D x D."""
    m, n = a.L.n, a.D.n
    N = m + n
    F = la.field_of(a.L.left, a.D.left, a.L.alpha, a.D.alpha)
    out = {}
    for side, dl, ld in (("left", a.dl_l, a.ld_l), ("right", a.dl_r, a.ld_r)):
        T = la.zeros((N, N, N), F)
        T[:m, :m, :m] = a.L.product(side)
        T[m:, m:, m:] = a.D.product(side)
        T[m:, :m, :m] = dl
        T[:m, m:, :m] = ld
        out[side] = T
    return Dialgebra(
        out["left"], out["right"],
        la.block_diag(a.L.alpha, a.D.alpha, F), la.block_diag(a.L.beta, a.D.beta, F),
        label or f"{a.L.label}x|{a.D.label}", validate=validate,
    )


def check_dialgebra_action(a: DialgebraAction) -> CheckReport:
    S = dialgebra_semidirect(a)
    m, n = a.L.n, a.D.n
    residuals = [
        assoc_residual(*(S.product(k) for k in names), S.alpha, S.beta) for names in _AXIOM_SHAPES.values()
    ]
    results = []
    for g, kind in enumerate(TRIPLE_TYPES):
        for ai, (ax, res) in enumerate(zip(_AXIOM_SHAPES, residuals)):
            results.append(result_from_residual(action_id(g, ai), _restrict(res, kind, m, n), note=f"{ax} on {','.join(kind)}"))
    return CheckReport(f"dialgebra-action[{a.label or a.D.label + ' on ' + a.L.label}]", tuple(results))


def trivial_action(D: Dialgebra, L: Dialgebra) -> DialgebraAction:
    F = la.field_of(D.left, L.left, D.alpha, L.alpha)
    n, m = D.n, L.n
    z1, z2 = la.zeros((n, m, m), F), la.zeros((m, n, m), F)
    return DialgebraAction(D, L, z1, z2, z1, z2, "trivial")


def self_action(D: Dialgebra) -> DialgebraAction:
    return DialgebraAction(D, D, D.left, D.left, D.right, D.right, "self")


def morphism_action(phi, D: Dialgebra, L: Dialgebra, printed: bool = False, validate: bool = True) -> DialgebraAction:
    """Action through a morphism phi: D -> L, e.g. x -| a := phi(x) -| a.

    Every mixed product is the product of L after pushing the D argument
    through phi, on whichever side it sits.  With ``printed`` the product
    a -| x is replaced by a |- phi(x), which generally breaks the action.
    """
    phi = np.asarray(phi, dtype=object)
    if not check_morphism(phi, D, L).passed:
        raise NotAMorphism("the inducing map is not a dialgebra morphism")
    I = la.identity(L.n, la.field_of(phi, L.left))
    tensors = {}
    for side in ("left", "right"):
        T = L.product(side)
        tensors[f"dl_{side[0]}"] = la.twist_inputs(T, phi, I)
        tensors[f"ld_{side[0]}"] = la.twist_inputs(T, I, phi)
    if printed:
        tensors["ld_l"] = tensors["ld_r"]
    return DialgebraAction(D, L, label="morphism", validate=validate, **tensors)


# ---------------------------------------------------------------------------
# from dialgebra actions to Leibniz actions
# ---------------------------------------------------------------------------


def mixed_brackets(a: DialgebraAction, printed: bool = False):
    """Mixed commutators ([x, a] with x in D, and [a, x]) of the semidirect product.

    The default is the commutator of the Leibniz functor restricted to mixed
    pairs: [x, a] = x -| a - P(a) |- Q(x) with P = alpha^-1 beta and
    Q = alpha beta^-1 on the relevant summand.  ``printed`` uses -| in the
    subtracted term of [x, a] and |- in both terms of [a, x] instead.
    """
    P_L, Q_L = _twist_pair(a.L.alpha, a.L.beta)
    P_D, Q_D = _twist_pair(a.D.alpha, a.D.beta)
    if printed:
        dl = a.dl_l - la.einsum("pa,qi,pqr->iar", P_L, Q_D, a.ld_l)
        ld = a.ld_r - la.einsum("pi,qa,pqr->air", P_D, Q_L, a.dl_r)
    else:
        dl = a.dl_l - la.einsum("pa,qi,pqr->iar", P_L, Q_D, a.ld_r)
        ld = a.ld_l - la.einsum("pi,qa,pqr->air", P_D, Q_L, a.dl_r)
    return dl, ld


def _require_regular(*algebras):
    for D in algebras:
        if not is_regular(D):
            raise NotRegular(f"{D.label} is not regular")


def action_to_leibniz_action(a: DialgebraAction, printed: bool = False, validate: bool = True) -> LeibnizAction:
    _require_regular(a.D, a.L)
    dl, ld = mixed_brackets(a, printed)
    return LeibnizAction(
        lb_functor(a.D, verify=False), lb_functor(a.L, verify=False), dl, ld,
        f"Lb({a.label})", validate=validate,
    )


@dataclass(frozen=True)
class CommutationResult:
    equal: bool
    comparison: TensorComparison
    direct: BracketAlgebra  # Lb of the semidirect product
    assembled: BracketAlgebra  # semidirect product of the Lb's

    def __bool__(self):
        return self.equal


def functor_commutes(a: DialgebraAction, printed: bool = False) -> CommutationResult:
    """Compare Lb(L x| D) with Lb(L) x| Lb(D) as bracket tensors on L (+) D."""
    _require_regular(a.D, a.L)
    S = dialgebra_semidirect(a)
    direct = BracketAlgebra(
        commutator_tensor(S.left, S.right, S.alpha, S.beta), S.alpha, S.beta, "leibniz", f"Lb({S.label})",
        validate=False,
    )
    assembled = leibniz_semidirect(action_to_leibniz_action(a, printed, validate=False))
    cmp = compare_tensors(direct.bracket, assembled.bracket, "bracket")
    return CommutationResult(cmp.equal, cmp, direct, assembled)

