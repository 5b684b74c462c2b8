import itertools

import pytest

import oracles as O
from finitetc.complex import SimplicialComplex, face_poset, order_complex
from finitetc.enumerate import all_posets
from finitetc.errors import DomainMismatch, UNKNOWN
from finitetc.formats import zoo_complex
from finitetc.homotopy import homotopic
from finitetc.poset import MonotoneMap, sphere
from finitetc.simplicial import (K_functor, SimplicialMap, X_functor, contiguous_neighbors,
                                 contiguous_one_step, same_contiguity_class, simplicial_maps)

COMPLEXES = [zoo_complex(n) for n in ("simplex:1", "boundary:2", "cycle:4", "simplex:2")] + [
    SimplicialComplex(["a", "b"], [[0], [1]]),
    SimplicialComplex(["a", "b", "c"], [[0, 1], [1, 2]]),
]


@pytest.mark.parametrize("K", COMPLEXES, ids=repr)
@pytest.mark.parametrize("L", COMPLEXES, ids=repr)
def test_contiguity_classes_match_oracle(K, L):
    classes = O.contiguity_classes(len(K.vertices), K.facets, len(L.vertices), L.facets)
    maps = {phi.assignment: phi for phi in simplicial_maps(K, L)}
    assert set(maps) == set(classes)
    for a in maps:
        nbs = {nb.assignment for nb in contiguous_neighbors(maps[a])}
        for b in maps:
            assert (b in nbs) == contiguous_one_step(maps[a], maps[b])
    for a, b in itertools.combinations(sorted(maps), 2):
        assert same_contiguity_class(maps[a], maps[b]) is (classes[a] == classes[b])


def test_cycle_maps():
    C = zoo_complex("cycle:4")
    assert len(list(simplicial_maps(C, C))) == 84
    ident = SimplicialMap.identity(C)
    flip = SimplicialMap(C, C, [2, 1, 0, 3])
    assert not contiguous_one_step(ident, flip)
    assert same_contiguity_class(ident, flip) is False
    assert same_contiguity_class(ident, SimplicialMap.constant(C, C, 0)) is False
    assert same_contiguity_class(SimplicialMap.constant(C, C, 0), SimplicialMap.constant(C, C, 2)) is True
    with pytest.raises(ValueError):
        SimplicialMap(C, C, [0, 2, 0, 2])


def test_budget_exhaustion_is_unknown():
    C = zoo_complex("cycle:4")
    ident = SimplicialMap.identity(C)
    # the constant's class is large, the identity is alone in its own
    assert same_contiguity_class(SimplicialMap.constant(C, C, 0), ident, budget=1) is UNKNOWN
    assert same_contiguity_class(ident, SimplicialMap.constant(C, C, 0), budget=1) is False


def test_functors():
    S = sphere(1)
    K = order_complex(S)
    swap = MonotoneMap(S, S, [1, 0, 2, 3])
    phi = K_functor(swap, K, K)
    assert phi.assignment == (1, 0, 2, 3)
    X = face_poset(K)
    psi = X_functor(phi, X, X)
    assert len(psi.domain) == 8
    ident = X_functor(SimplicialMap.identity(K), X, X)
    assert homotopic(psi, ident) is False
    with pytest.raises(DomainMismatch):
        same_contiguity_class(phi, SimplicialMap.identity(zoo_complex("cycle:4")))


@pytest.mark.parametrize("P", [P for k in (2, 3) for P in all_posets(k)], ids=str)
def test_homotopic_maps_go_to_one_contiguity_class(P):
    classes = O.homotopy_classes(O.Rel.from_poset(P), O.Rel.from_poset(P))
    K = order_complex(P)
    for f, g in itertools.combinations(sorted(classes), 2):
        if classes[f] == classes[g]:
            a = K_functor(MonotoneMap(P, P, f), K, K)
            b = K_functor(MonotoneMap(P, P, g), K, K)
            assert same_contiguity_class(a, b) is True
