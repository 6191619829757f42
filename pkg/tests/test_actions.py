import pytest

from bihomdi import linalg as la
from bihomdi.actions import (
    ACTION_IDS,
    DialgebraAction,
    LeibnizAction,
    action_to_leibniz_action,
    check_dialgebra_action,
    check_leibniz_action,
    dialgebra_semidirect,
    functor_commutes,
    leibniz_self_action,
    leibniz_semidirect,
    morphism_action,
    self_action,
    trivial_action,
    trivial_leibniz_action,
)
from bihomdi.brackets import check_bihom_leibniz, lb_functor
from bihomdi.core import check_axioms
from bihomdi.errors import ActionAxiomFails, NotAMorphism, NotRegular
from bihomdi.field import GF, QQ
from bihomdi.fleet import epsilon_dialgebra, regular_fleet, twisted_epsilon, unit_algebra
from oracles import naive_commutator, naive_leibniz_ok, naive_passes

FLEET = regular_fleet(QQ, max_matrix=1)
SMALL = [D for D in FLEET if D.n <= 4]  # the naive oracles are cubic in the semidirect dimension


def test_thirty_identities_labelled():
    assert len(ACTION_IDS) == 30
    assert ACTION_IDS[0] == "(01)" and ACTION_IDS[-1] == "(30)"


@pytest.mark.parametrize("D", FLEET, ids=lambda D: D.label)
def test_self_action_semidirect_is_a_dialgebra(D):
    a = self_action(D)
    assert check_dialgebra_action(a).passed
    S = dialgebra_semidirect(a)
    assert check_axioms(S).passed
    if D.n <= 4:
        assert naive_passes(S)


@pytest.mark.parametrize("D", FLEET, ids=lambda D: D.label)
def test_functor_commutes_for_self_and_trivial(D):
    for a in (self_action(D), trivial_action(D, twisted_epsilon(2))):
        res = functor_commutes(a)
        assert res.equal, (D.label, res.comparison.witness)
        # independent check of the direct side
        if D.n <= 4:
            assert res.direct.bracket.tolist() == naive_commutator(dialgebra_semidirect(a))


@pytest.mark.parametrize("D", FLEET, ids=lambda D: D.label)
def test_morphism_actions(D):
    for phi in (D.alpha, D.beta, la.matmul(D.alpha, D.beta)):
        a = morphism_action(phi, D, D)
        assert check_dialgebra_action(a).passed
        assert functor_commutes(a).equal


def test_action_semidirect_with_naive_oracle_over_gf3():
    D = twisted_epsilon(2, GF(3))
    a = self_action(D)
    assert check_dialgebra_action(a).passed == naive_passes(dialgebra_semidirect(a))


def test_printed_morphism_action_fails():
    D = epsilon_dialgebra(2)
    a = morphism_action(la.identity(2), D, D, printed=True, validate=False)
    rep = check_dialgebra_action(a)
    bad = rep.first_failure()
    assert bad.axiom == "(06)" and bad.witness == (1, 2, 1)
    assert bad.note == "eq4 on L,D,L"
    with pytest.raises(ActionAxiomFails):
        morphism_action(la.identity(2), D, D, printed=True)


def test_morphism_action_refuses_non_morphism():
    D = epsilon_dialgebra(2)
    with pytest.raises(NotAMorphism):
        morphism_action(la.scalar_matrix(2, 2), D, D)


def test_random_mixed_products_usually_fail():
    D = epsilon_dialgebra(2)
    t = la.zeros((2, 2, 2))
    t[0, 0, 1] = la.QQ(1)
    z = la.zeros((2, 2, 2))
    with pytest.raises(ActionAxiomFails):
        DialgebraAction(D, D, t, z, z, z)


def test_leibniz_self_action_and_semidirect():
    for D in SMALL:
        L = lb_functor(D)
        a = leibniz_self_action(L)
        assert check_leibniz_action(a).passed
        S = leibniz_semidirect(a)
        assert check_bihom_leibniz(S).passed
        A = la.block_diag(D.alpha, D.alpha).tolist()
        B = la.block_diag(D.beta, D.beta).tolist()
        assert naive_leibniz_ok(S.bracket.tolist(), A, B), D.label


def test_trivial_leibniz_action():
    L = lb_functor(twisted_epsilon(3))
    K = lb_functor(unit_algebra())
    assert check_leibniz_action(trivial_leibniz_action(L, K)).passed


def test_action_to_leibniz_action_needs_regular(alg3):
    with pytest.raises(NotRegular):
        action_to_leibniz_action(self_action(alg3))


def test_leibniz_action_shapes_checked():
    L = lb_functor(unit_algebra())
    with pytest.raises(Exception):
        LeibnizAction(L, L, la.zeros((2, 1, 1)), la.zeros((1, 1, 1)))


def test_semidirect_of_self_action_passes_checker():
    D = twisted_epsilon(3)
    assert check_axioms(dialgebra_semidirect(self_action(D))).passed
