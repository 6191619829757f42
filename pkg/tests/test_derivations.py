from itertools import product

import pytest

from bihomdi import linalg as la
from bihomdi.core import Dialgebra, transport
from bihomdi.corpus import corpus_build, corpus_ids
from bihomdi.derivations import (
    check_derivation,
    conjugate_derivation,
    derivation_bracket,
    derivation_space,
    derivation_spaces,
    is_derivation,
)
from bihomdi.errors import DimensionMismatch, NotADerivation, NotAnIsomorphism
from bihomdi.field import GF
from bihomdi.fleet import epsilon_dialgebra, twisted_epsilon, unit_algebra
import oracles


@pytest.mark.parametrize("n", [1, 2, 3])
def test_zero_algebra_all_operators(n):
    assert derivation_space(Dialgebra.zero(n), 0, 0).dim == n * n


def test_alg3_only_zero(alg3):
    S = derivation_space(alg3, 0, 0)
    assert S.dim == 0 and list(S) == []


def test_alg3_commuting_but_not_leibniz(alg3):
    # T = [[1, 0], [0, 1]] commutes with the nilpotent maps but e1 -| e2 = e1 breaks the rule
    rep = check_derivation(la.identity(2), 0, 0, alg3)
    assert rep["commute-alpha"].passed and not rep["leibniz-left"].passed


@pytest.mark.parametrize("eid", [e for e in corpus_ids() if not e.startswith("dim4")])
@pytest.mark.parametrize("k,l", [(0, 0), (1, 0), (0, 1), (1, 1), (2, 1)])
def test_dims_match_oracle(eid, k, l):
    D = corpus_build(eid)
    assert derivation_space(D, k, l).dim == oracles.derivation_dim(D, k, l)


def test_dims_match_oracle_gf3():
    for D in (corpus_build("dim2/Alg2", field=GF(3)), twisted_epsilon(3, GF(3))):
        for k, l in [(0, 0), (1, 1)]:
            assert derivation_space(D, k, l).dim == oracles.derivation_dim(D, k, l)


def test_basis_elements_are_derivations():
    D = epsilon_dialgebra(3)
    for (k, l), S in derivation_spaces(D).items():
        for T in S:
            assert is_derivation(T, k, l, D)


@pytest.mark.parametrize("D", [twisted_epsilon(2), epsilon_dialgebra(3), corpus_build("dim3/Alg2")], ids=lambda D: D.label)
def test_bracket_closure(D):
    exps = [(0, 0), (0, 1), (1, 0), (1, 1)]
    spaces = {e: derivation_space(D, *e) for e in exps}
    for e1, e2 in product(exps, repeat=2):
        for T1 in spaces[e1]:
            for T2 in spaces[e2]:
                out = derivation_bracket(T1, e1, T2, e2, D)
                assert is_derivation(out, e1[0] + e2[0], e1[1] + e2[1], D)


def test_bracket_refuses_non_derivation(alg3):
    with pytest.raises(NotADerivation):
        derivation_bracket(la.identity(2), (0, 0), la.zeros((2, 2)), (0, 0), alg3)


def test_conjugation_preserves_membership_and_dimension():
    D = epsilon_dialgebra(3)
    g = la.array([[1, 0, 0], [1, 1, 0], [0, 2, 1]])
    E = transport(D, g)
    for k, l in [(0, 0), (1, 1)]:
        S, S2 = derivation_space(D, k, l), derivation_space(E, k, l)
        assert S.dim == S2.dim
        for T in S:
            assert is_derivation(conjugate_derivation(g, T, k, l, D, E), k, l, E)


def test_permutation_conjugation_on_zero_algebra():
    D = Dialgebra.zero(3)
    P = la.array([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    T = la.array([[1, 2, 0], [0, 0, 3], [4, 0, 0]])
    out = conjugate_derivation(P, T, 0, 0, D, D)
    assert la.equal(out, la.matmul(P, T, la.invert(P)))


def test_conjugation_refusals():
    D = epsilon_dialgebra(2)
    with pytest.raises(NotAnIsomorphism):
        conjugate_derivation(la.zeros((2, 2)), la.zeros((2, 2)), 0, 0, D, D)
    with pytest.raises(NotAnIsomorphism):
        conjugate_derivation(la.scalar_matrix(2, 2), la.zeros((2, 2)), 0, 0, D, D)


def test_shape_mismatch(alg3):
    with pytest.raises(DimensionMismatch):
        check_derivation(la.zeros((3, 3)), 0, 0, alg3)


def test_unit_algebra_has_no_derivations():
    assert derivation_space(unit_algebra(), 0, 0).dim == 0
