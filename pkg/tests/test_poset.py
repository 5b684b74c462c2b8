import pytest
from hypothesis import given

from conftest import small_posets
from oracles import Rel, down_sets
from finitetc.errors import CycleDetected, DuplicateLabel, IndexOutOfRange, SizeLimitExceeded
from finitetc.poset import (DownSet, FinitePoset, MonotoneMap, antichain, build_poset, chain, fence,
                            is_connected, power, projection, sphere, wedge_fence, wedge_node)


def test_sphere_model():
    S = sphere(1)
    assert S.labels == ("e0+", "e0-", "e1+", "e1-")
    assert S.lt(0, 2) and S.lt(1, 3) and not S.comparable(0, 1) and not S.comparable(2, 3)
    assert len(sphere(2)) == 6 and sphere(2).height() == 2


def test_fences():
    J = fence(4)
    assert J.leq(0, 1) and J.leq(2, 1) and J.leq(2, 3) and J.leq(4, 3)
    assert not J.comparable(0, 2)
    W = wedge_fence(3, 2)
    assert len(W) == 7
    for j in (1, 2, 3):
        assert W.leq(0, wedge_node(2, j, 1)) and W.leq(wedge_node(2, j, 2), wedge_node(2, j, 1))
    with pytest.raises(ValueError):
        wedge_fence(1, 2)


def test_chain_antichain_connectivity():
    assert is_connected(chain(4)) and not is_connected(antichain(2))
    assert chain(3).height() == 2 and antichain(3).height() == 0


def test_bad_input():
    with pytest.raises(DuplicateLabel):
        FinitePoset(["a", "a"])
    with pytest.raises(CycleDetected):
        build_poset(["a", "b"], [("a", "b"), ("b", "a")])
    with pytest.raises(IndexOutOfRange):
        FinitePoset(["a"], [(0, 3)])


def test_size_cap(monkeypatch):
    monkeypatch.setenv("FINITETC_SIZE_CAP", "10")
    with pytest.raises(SizeLimitExceeded):
        power(sphere(1), 2)


@given(small_posets())
def test_order_matches_transitive_closure(P):
    edges = P.hasse_edges
    R = Rel.from_pairs(len(P), edges)
    for a in range(len(P)):
        for b in range(len(P)):
            assert P.leq(a, b) == R.leq[a][b]
    # the Hasse edges are exactly the covers
    for a, b in edges:
        assert not any(P.lt(a, c) and P.lt(c, b) for c in range(len(P)))


@given(small_posets(max_size=6))
def test_down_sets_and_minimal_opens(P):
    opens = {frozenset(DownSet(P, m).members) for m in range(1 << len(P)) if P.is_down_closed(m)}
    assert opens == set(down_sets(Rel.from_poset(P)))
    for x in range(len(P)):
        U = P.minimal_open(x)
        assert set(U) == {y for y in range(len(P)) if P.leq(y, x)}


@given(small_posets(max_size=4))
def test_power_and_projection(P):
    P2 = power(P, 2)
    assert len(P2) == len(P) ** 2
    R, elems = Rel.from_poset(P).power(2)
    for a in range(len(P2)):
        for b in range(len(P2)):
            i, j = elems.index(P2.keys[a]), elems.index(P2.keys[b])
            assert P2.leq(a, b) == R.leq[i][j]
    for j in (1, 2):
        pi = projection(P2, P, j)
        assert isinstance(pi, MonotoneMap)


def test_monotone_map_checks():
    C = chain(2)
    with pytest.raises(ValueError):
        MonotoneMap(C, C, [1, 0])
    f = MonotoneMap(C, C, [0, 0])
    assert f <= MonotoneMap.identity(C)


@given(small_posets(max_size=6))
def test_open_subspace_matches_induced(P):
    for m in range(1 << len(P)):
        if P.is_down_closed(m):
            A, ma = P.open_subspace(m)
            B, mb = P.induced(m)
            assert ma == mb
            assert all(A.leq(a, b) == B.leq(a, b) for a in range(len(A)) for b in range(len(A)))
