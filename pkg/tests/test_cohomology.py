import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from bihomdi import linalg as la
from bihomdi.cohomology import (
    AXIOM_OF,
    COCYCLE_IDS,
    BiHomModule,
    CochainPair,
    center,
    central_extension,
    check_compatibility,
    coboundary,
    cocycle_basis,
    cohomology_dims,
    extension_from_cochain,
    extensions_equivalent,
    intertwining_maps,
    is_central,
    is_cocycle,
    random_cochain,
)
from bihomdi.core import Dialgebra, check_axioms, check_morphism
from bihomdi.corpus import corpus_build, corpus_ids
from bihomdi.errors import DimensionMismatch, NotCocycles
from bihomdi.field import GF, QQ
import oracles

SMALL_IDS = [e for e in corpus_ids() if not e.startswith("dim4")]


@pytest.mark.parametrize("n,m", [(1, 1), (2, 1), (2, 2), (3, 1)])
def test_zero_algebra_dims(n, m):
    D = Dialgebra.zero(n)
    assert cohomology_dims(D, BiHomModule.trivial(m)).as_tuple() == (2 * n * n * m, 0, 2 * n * n * m)


@pytest.mark.parametrize("eid", SMALL_IDS)
def test_corpus_dims_match_oracle(eid):
    D = corpus_build(eid)
    assert cohomology_dims(D).as_tuple() == oracles.cohomology_dims(D)


def test_alg3_dims(alg3):
    assert tuple(cohomology_dims(alg3)) == (6, 1, 5)


def test_ids_and_axiom_correspondence():
    assert COCYCLE_IDS == ("cc1", "cc2", "cc3", "cc4", "cc5")
    assert sorted(AXIOM_OF.values()) == ["eq4", "eq5", "eq6", "eq7", "eq8"]


def test_coboundary_of_projection(alg3):
    nu = la.array([[1, 0]])  # e1 coefficient
    T = coboundary(nu, alg3)
    assert T.theta1[0, 1, 0] == 1  # e1 -| e2 = e1
    assert [T.theta2[i, j, 0] for i in range(2) for j in range(2)] == [0, 1, 1, 1]
    assert is_cocycle(T, alg3, BiHomModule.trivial(1)).passed


@given(st.integers(0, 2**32 - 1), st.sampled_from([GF(2), GF(3)]))
def test_cocycle_iff_extension_is_dialgebra(seed, F):
    D = corpus_build("dim2/Alg3", field=F)
    M = BiHomModule.trivial(1, F)
    T = random_cochain(2, 1, F, np.random.default_rng(seed))
    E = central_extension(D, M, T)
    assert is_cocycle(T, D, M).passed == check_axioms(E).passed == oracles.naive_passes(E)


def test_random_cochain_usually_fails_cc1(alg3):
    F = GF(2)
    D = alg3.convert(F)
    M = BiHomModule.trivial(1, F)
    rng = np.random.default_rng(7)
    fails = [is_cocycle(random_cochain(2, 1, F, rng), D, M) for _ in range(20)]
    assert any(not r["cc1"].passed and r["cc1"].witness is not None for r in fails)


def test_cocycle_failure_maps_to_axiom(alg3):
    M = BiHomModule.trivial(1)
    rng = np.random.default_rng(3)
    for _ in range(10):
        T = random_cochain(2, 1, QQ, rng)
        rep = is_cocycle(T, alg3, M)
        ext = check_axioms(central_extension(alg3, M, T))
        for cc in COCYCLE_IDS:
            assert rep[cc].passed == ext[AXIOM_OF[cc]].passed


def test_cocycle_basis_spans_z2():
    D = corpus_build("dim3/Alg2")
    M = BiHomModule.trivial(1)
    basis = cocycle_basis(D, M)
    assert len(basis) == cohomology_dims(D, M).z2
    for T in basis:
        assert is_cocycle(T, D, M).passed


def test_extension_triple_is_exact_and_central(alg3):
    M = BiHomModule.trivial(1)
    T = coboundary(la.array([[1, 1]]), alg3)
    e = extension_from_cochain(alg3, M, T)
    assert e.exactness_problem() == ""
    assert is_central(e)
    assert e.check_morphisms().passed


def test_center_of_zero_algebra():
    assert center(Dialgebra.zero(3)).dim == 3


def test_equivalence_with_intertwining_witness():
    D = corpus_build("dim3/Alg2")
    M = BiHomModule(D.alpha, D.beta, "self")
    T1 = cocycle_basis(D, M)[0]
    nus = intertwining_maps(D, M)
    assert nus
    nu = sum(nus[1:], nus[0])
    T2 = T1 + coboundary(nu, D)
    res = extensions_equivalent(T1, T2, D, M)
    assert res.equivalent and res.cohomologous
    e1 = extension_from_cochain(D, M, T1)
    e2 = extension_from_cochain(D, M, T2)
    assert check_morphism(res.f, e1.D2, e2.D2).passed


def test_non_intertwining_coboundary_is_not_an_equivalence(alg3):
    M = BiHomModule.trivial(1)
    T1 = CochainPair.zero(2, 1)
    nu = la.array([[1, 0]])
    assert intertwining_maps(alg3, M) == []
    res = extensions_equivalent(T1, coboundary(nu, alg3), alg3, M)
    assert res.cohomologous and not res.equivalent
    assert "witness" in res.note


def test_equivalence_refuses_non_cocycles(alg3):
    M = BiHomModule.trivial(1)
    bad = CochainPair(la.array([[[1], [0]], [[0], [0]]]), la.zeros((2, 2, 1)))
    assert not is_cocycle(bad, alg3, M).passed
    with pytest.raises(NotCocycles):
        extensions_equivalent(bad, bad, alg3, M)


def test_compatibility_of_coboundaries():
    D = corpus_build("dim2/Alg1")
    M = BiHomModule(D.alpha, D.beta)
    nu = intertwining_maps(D, M)[0]
    assert check_compatibility(coboundary(nu, D), D, M).passed


def test_shape_errors(alg3):
    with pytest.raises(DimensionMismatch):
        is_cocycle(CochainPair.zero(3, 1), alg3, BiHomModule.trivial(1))
    with pytest.raises(DimensionMismatch):
        coboundary(la.zeros((1, 3)), alg3)


def test_cochain_arithmetic_roundtrip():
    rng = np.random.default_rng(0)
    T = random_cochain(2, 2, QQ, rng)
    assert CochainPair.from_flat(T.flat(), 2, 2).flat().tolist() == T.flat().tolist()
    assert la.is_zero((T - T).flat())
