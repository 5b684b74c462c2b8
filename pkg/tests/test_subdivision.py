import pytest

from finitetc.complexity import EXACT
from finitetc.errors import IndexOutOfRange
from finitetc.poset import chain, fence, is_monotone, sphere
from finitetc.subdivision import SubdivisionTower, cc_inf_n, cc_k_n, rho


def test_tower_shapes_and_taus():
    T = SubdivisionTower.build(sphere(1), 2, 2)
    assert [len(L) for L in T.levels] == [16, 96, 576]
    assert [len(L.maximal_elements()) for L in T.levels] == [4, 32, 192]
    for i in (1, 2):
        t = T.tau(i)
        assert is_monotone(t.domain, t.codomain, t.assignment)
    assert T.tau_k(2).codomain == T.base
    r1 = rho(T, 2, 1)
    assert is_monotone(r1.domain, sphere(1), r1.assignment)
    with pytest.raises(IndexOutOfRange):
        T.rho_values(3, 1)
    with pytest.raises(IndexOutOfRange):
        T.rho_values(1, 3)


def test_pull_back_is_preimage():
    T = SubdivisionTower.build(sphere(1), 2, 1)
    mask = T.base.down[T.base.key_index((2, 3))]
    pulled = T.pull_back(1, mask)
    for x, v in enumerate(T.taus[1]):
        assert bool(pulled >> x & 1) == bool(mask >> v & 1)


def test_levels_of_circle():
    S = sphere(1)
    assert cc_k_n(S, 2, 0).value == 4
    T = SubdivisionTower.build(S, 2, 1)
    one = cc_k_n(S, 2, 1, tower=T, want_witness=True)
    assert one.value == 2
    for w in one.witnesses:
        w.check()


def test_cc_inf_of_circle():
    rep = cc_inf_n(sphere(1), 2, 2, want_witness=True)
    assert rep.value == 2 and rep.certified == EXACT
    assert [r.value for r in rep.per_k] == [4, 2]
    assert len(rep.cover) == 2


def test_cc_inf_contractible():
    for P in (chain(2), fence(2)):
        rep = cc_inf_n(P, 2, 2)
        assert rep.value == 1 and rep.exact and len(rep.per_k) == 1


def test_argument_checks():
    with pytest.raises(ValueError):
        cc_inf_n(sphere(1), 1, 1)
    with pytest.raises(ValueError):
        cc_k_n(sphere(1), 2, -1)
