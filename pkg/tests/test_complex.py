import pytest
from hypothesis import given

from conftest import small_posets
from oracles import Rel, core_size, count_chains as brute_chains
from finitetc.complex import (SimplicialComplex, barycentric_subdivision, count_chains, face_poset,
                              order_complex, sd_complex, tau, tau_k)
from finitetc.errors import SizeLimitExceeded
from finitetc.formats import zoo_complex
from finitetc.homotopy import is_contractible
from finitetc.poset import is_monotone, power, sphere


@given(small_posets(max_size=7))
def test_chain_count_matches_oracle(P):
    assert count_chains(P) == brute_chains(Rel.from_poset(P))
    assert len(barycentric_subdivision(P)) == count_chains(P)


@given(small_posets(max_size=6))
def test_sd_is_face_poset_of_order_complex(P):
    sdP = barycentric_subdivision(P)
    K = order_complex(P)
    assert len(sdP) == len(K.simplices())
    for a in range(len(sdP)):
        for b in range(len(sdP)):
            assert sdP.leq(a, b) == set(sdP.keys[a]).issubset(sdP.keys[b])


@given(small_posets(max_size=6))
def test_tau_is_monotone_and_preserves_contractibility(P):
    t = tau(P)
    assert is_monotone(t.domain, P, t.assignment)
    for key, v in zip(t.domain.keys, t.assignment):
        assert v in key and all(P.leq(x, v) for x in key)
    assert is_contractible(barycentric_subdivision(P)) == is_contractible(P)


def test_circle_subdivisions():
    S = sphere(1)
    assert len(barycentric_subdivision(S)) == 8
    assert core_size(Rel.from_poset(barycentric_subdivision(S))) == 8
    S2 = power(S, 2)
    assert len(barycentric_subdivision(S2)) == 96
    assert len(barycentric_subdivision(S2).maximal_elements()) == 32
    t2 = tau_k(S, 2)
    assert len(t2.domain) == 16 and t2.codomain == S
    assert tau_k(S, 0).assignment == (0, 1, 2, 3)


def test_face_poset_of_cycle():
    K = zoo_complex("cycle:4")
    X = face_poset(K)
    assert len(X) == 8 and X.height() == 1
    assert not is_contractible(X)
    assert len(sd_complex(K).vertices) == 8
    assert "{v0,v1}" in X.labels


def test_complex_validation():
    K = SimplicialComplex.from_facets([["a", "b", "c"], ["c", "d"]])
    assert K.dimension == 2 and K.is_simplex([0, 1]) and not K.is_simplex([0, 3])
    with pytest.raises(SizeLimitExceeded):
        barycentric_subdivision(power(sphere(1), 2), cap=50)
