import pytest

from oracles import Rel, section_exists
from finitetc.enumerate import all_posets
from finitetc.errors import InvalidWitness
from finitetc.poset import DownSet, fence, is_monotone, power, sphere, wedge_fence, wedge_node
from finitetc.sections import (LINEAR, WEDGE, linear_retraction, linear_to_wedge, path_space_shape,
                               section_exists_bounded, transport_R, transport_f, transport_g,
                               wedge_retraction, wedge_to_linear)

SMALL = [P for k in range(1, 4) for P in all_posets(k) if len(P) > 1] + [sphere(1)]


def _opens(A):
    return [m for m in range(1, 1 << len(A)) if A.is_down_closed(m)]


@pytest.mark.parametrize("P", SMALL, ids=str)
@pytest.mark.parametrize("variant", [WEDGE, LINEAR])
def test_bounded_sections_match_oracle(P, variant):
    P2 = power(P, 2)
    R, elems = Rel.from_poset(P).power(2)
    idx = [elems.index(k) for k in P2.keys]
    R2 = R.sub(idx)
    keyed = [elems[i] for i in idx]
    opens = _opens(P2) if len(P2) <= 9 else [P2.down[x] for x in range(len(P2))] + [P2.full_mask]
    for m in range(3):
        for mask in opens:
            members = [x for x in range(len(P2)) if mask >> x & 1]
            want = section_exists(Rel.from_poset(P), 2, m, variant, members, keyed, R2)
            got, w = section_exists_bounded(DownSet(P2, mask), P, 2, m, variant, want_witness=True)
            assert got is want
            if got:
                w.check()


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("m", range(0, 9))
def test_reindexing_maps_are_monotone_with_endpoints(n, m):
    src, src_ends = path_space_shape(n, m + 1, WEDGE)
    dst, dst_ends = path_space_shape(n, m, WEDGE)
    r = wedge_retraction(n, m)
    assert is_monotone(src, dst, r) and [r[e] for e in src_ends] == dst_ends
    src, src_ends = path_space_shape(n, m + 1, LINEAR)
    dst, dst_ends = path_space_shape(n, m, LINEAR)
    r = linear_retraction(n, m)
    assert is_monotone(src, dst, r) and [r[e] for e in src_ends] == dst_ends
    if m % 2 == 0:
        lin, lin_ends = path_space_shape(n, 2 * m, LINEAR)
        w, w_ends = path_space_shape(n, m, WEDGE)
        f = wedge_to_linear(n, m)
        assert is_monotone(lin, w, f) and [f[e] for e in lin_ends] == w_ends
    if m % 4 == 0:
        k, g = linear_to_wedge(n, m)
        w, w_ends = path_space_shape(n, k, WEDGE)
        lin, lin_ends = path_space_shape(n, m, LINEAR)
        assert k == (n - 1) * m // 2
        assert is_monotone(w, lin, g) and [g[e] for e in w_ends] == lin_ends


def test_transports_on_circle_witnesses():
    S = sphere(1)
    S2 = power(S, 2)
    top = S2.key_index((2, 2))
    U = DownSet(S2, S2.down[top])
    for variant in (WEDGE, LINEAR):
        ok, w = section_exists_bounded(U, S, 2, 2, variant, want_witness=True)
        assert ok
        up = transport_R(w)
        assert up.m == 3 and up.is_valid()
        if variant == WEDGE:
            lin = transport_f(w)
            assert lin.variant == LINEAR and lin.m == 4 and lin.is_valid()
            back = transport_g(lin)
            assert back.variant == WEDGE and back.m == 2 and back.is_valid()
        else:
            with pytest.raises(InvalidWitness):
                transport_f(w)


def test_broken_witness_is_rejected():
    S = sphere(1)
    S2 = power(S, 2)
    U = DownSet(S2, S2.down[S2.key_index((2, 2))])
    assert section_exists_bounded(U, S, 2, 1, WEDGE) is False
    ok, w = section_exists_bounded(U, S, 2, 2, WEDGE, want_witness=True)
    x = next(iter(w.assignment))
    w.assignment[x] = tuple(3 for _ in w.assignment[x])
    assert not w.is_valid()
    with pytest.raises(InvalidWitness):
        transport_R(w)


def test_shapes():
    J, ends = path_space_shape(3, 2, WEDGE)
    assert len(J) == 7 and ends == [wedge_node(2, j, 2) for j in (1, 2, 3)]
    J, ends = path_space_shape(3, 2, LINEAR)
    assert len(J) == 5 and ends == [0, 2, 4]
    assert len(wedge_fence(2, 0)) == 1 and len(fence(0)) == 1
