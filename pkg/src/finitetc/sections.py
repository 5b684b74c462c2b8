"""Sections of the path-space maps ``q_{n,m}`` and ``q'_{n,m}`` over opens.

A section over an open ``Q`` assigns to every point ``x`` of ``Q`` a path:

* wedge variant: a monotone map ``J_{n,m} -> P`` with ``gamma(m_j) = x_j``;
* linear variant: a monotone map ``J_{(n-1)m} -> P`` with
  ``alpha((j-1)m) = x_j``;

and comparable points get pointwise comparable paths.  ``x_j`` is read off
a *base* map ``Q -> P^n``: the identity on ``P^n`` itself, or ``tau^k`` on a
subdivision.

The transports re-index a section along the fence maps used to compare the
two variants and different path lengths; each is precomposition with an
order-preserving map between fences.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .csp import OrderCSP
from .errors import BudgetExceeded, InvalidWitness, ParityViolation, UNKNOWN
from .poset import DownSet, FinitePoset, bits, fence, is_monotone, wedge_fence, wedge_node

WEDGE = "wedge"
LINEAR = "linear"
VARIANTS = (WEDGE, LINEAR)


def path_space_shape(n: int, m: int, variant: str) -> tuple[FinitePoset, list[int]]:
    """The fence carrying the paths and the nodes read off by the endpoint map."""
    if variant == WEDGE:
        return wedge_fence(n, m), [wedge_node(m, j, m) for j in range(1, n + 1)]
    if variant == LINEAR:
        return fence((n - 1) * m), [(j - 1) * m for j in range(1, n + 1)]
    raise ValueError(f"unknown variant {variant!r}")


def power_base(ambient: FinitePoset) -> Callable[[int], tuple]:
    return lambda x: ambient.keys[x]


@dataclass
class SectionWitness:
    """Paths over an open, one per point, as node-value tuples."""

    variant: str
    n: int
    m: int
    target: FinitePoset
    domain: DownSet
    endpoints: dict
    assignment: dict = field(default_factory=dict)

    def path(self, x: int) -> tuple:
        return self.assignment[x]

    def branches(self, x: int) -> list[tuple]:
        """Wedge variant: the ``n`` paths ``0, 1_j, ..., m_j`` sharing the centre."""
        if self.variant != WEDGE:
            raise ValueError("branches only exist for the wedge variant")
        vals = self.assignment[x]
        return [tuple(vals[wedge_node(self.m, j, i)] for i in range(self.m + 1))
                for j in range(1, self.n + 1)]

    def check(self) -> None:
        J, ends = path_space_shape(self.n, self.m, self.variant)
        P = self.target
        members = list(self.domain)
        if set(self.assignment) != set(members):
            raise InvalidWitness("assignment does not cover the open exactly")
        for x in members:
            vals = self.assignment[x]
            if len(vals) != len(J):
                raise InvalidWitness(f"path at {x} has {len(vals)} nodes, expected {len(J)}")
            if not is_monotone(J, P, vals):
                raise InvalidWitness(f"path at {x} is not order preserving")
            want = tuple(self.endpoints[x])
            got = tuple(vals[e] for e in ends)
            if got != want:
                raise InvalidWitness(f"endpoint condition fails at {x}: {got} != {want}")
        amb = self.domain.ambient
        leq = P.leq
        for x in members:
            for y in bits(amb.lower_covers[x] & self.domain.mask):
                if not all(leq(a, b) for a, b in zip(self.assignment[y], self.assignment[x])):
                    raise InvalidWitness(f"section not monotone across {y} < {x}")

    def is_valid(self) -> bool:
        try:
            self.check()
        except InvalidWitness:
            return False
        return True

    def to_json(self) -> dict:
        amb = self.domain.ambient
        return {"variant": self.variant, "n": self.n, "m": self.m,
                "paths": {amb.labels[x]: [self.target.labels[v] for v in vals]
                          for x, vals in sorted(self.assignment.items())}}


def section_csp(Q: DownSet, P: FinitePoset, n: int, m: int, variant: str, base=None):
    J, ends = path_space_shape(n, m, variant)
    base = base or power_base(Q.ambient)
    members = list(Q)
    pos = {x: i for i, x in enumerate(members)}
    width = len(J)
    csp = OrderCSP(P, len(members) * width)
    jedges = J.hasse_edges
    amb = Q.ambient
    for i, x in enumerate(members):
        off = i * width
        point = base(x)
        for j, node in enumerate(ends):
            csp.fix(off + node, point[j])
        for a, b in jedges:
            csp.add_leq(off + a, off + b)
        for y in bits(amb.lower_covers[x] & Q.mask):
            offy = pos[y] * width
            for node in range(width):
                csp.add_leq(offy + node, off + node)
    return csp, members, width


def section_exists_bounded(Q: DownSet, P: FinitePoset, n: int, m: int, variant: str = WEDGE,
                           base=None, budget: int | None = 20_000, want_witness: bool = False):
    """Exact existence of a section of ``q_{n,m}`` / ``q'_{n,m}`` over ``Q``.

    Returns True / False / UNKNOWN, or ``(answer, SectionWitness | None)``.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    base = base or power_base(Q.ambient)
    csp, members, width = section_csp(Q, P, n, m, variant, base)
    try:
        sol = csp.solve(budget)
    except BudgetExceeded:
        return (UNKNOWN, None) if want_witness else UNKNOWN
    ok = sol is not None
    if not want_witness:
        return ok
    if not ok:
        return False, None
    w = SectionWitness(variant, n, m, P, Q, {x: tuple(base(x)) for x in members},
                       {x: tuple(sol[i * width:(i + 1) * width]) for i, x in enumerate(members)})
    return True, w


def section_from_homotopies(Q: DownSet, P: FinitePoset, n: int, homotopies: Sequence, base=None) -> SectionWitness:
    """Linear section obtained by concatenating homotopies ``rho_j ~ rho_{j+1}``.

    ``homotopies[j]`` is a list of frames (value tuples over the points of
    ``Q`` in ascending order).  All are padded with stationary frames to one
    common even length so the concatenation hits ``x_j`` at ``(j-1)m``.
    """
    base = base or power_base(Q.ambient)
    members = list(Q)
    longest = max((len(h) - 1 for h in homotopies), default=0)
    m = longest + (longest % 2)
    padded = [list(h) + [h[-1]] * (m + 1 - len(h)) for h in homotopies]
    assignment = {}
    for i, x in enumerate(members):
        vals = [padded[0][0][i]] if padded else [base(x)[0]]
        for h in padded:
            vals.extend(frame[i] for frame in h[1:])
        assignment[x] = tuple(vals)
    w = SectionWitness(LINEAR, n, m, P, Q, {x: tuple(base(x)) for x in members}, assignment)
    w.check()
    return w


# -- fence re-indexing maps ---------------------------------------------------

def wedge_retraction(n: int, m: int) -> list[int]:
    """``R : J_{n,m+1} -> J_{n,m}``, sending ``(m+1)_j`` to ``m_j``."""
    out = [0]
    for j in range(1, n + 1):
        for i in range(1, m + 2):
            out.append(wedge_node(m, j, min(i, m)))
    return out


def linear_retraction(n: int, m: int) -> list[int]:
    """``R : J_{(n-1)(m+1)} -> J_{(n-1)m}`` keeping ``R(i(m+1)) = im``.

    Around ``i(m+1)`` for odd ``i`` three consecutive nodes collapse onto
    ``im``; elsewhere ``R`` is a shift, by an even amount so the zigzag
    parity is kept.
    """
    L = (n - 1) * (m + 1)
    out = []
    for t in range(L + 1):
        shift = 0
        for i in range(1, n, 2):
            c = i * (m + 1)
            if t == c:
                shift = i
            elif t > c:
                shift = i + 1
        out.append(min(t - shift, (n - 1) * m))
    return out


def wedge_to_linear(n: int, m: int) -> list[int]:
    """``f : J_{(n-1)2m} -> J_{n,m}`` for even ``m``.

    Walks branch 1 back to the centre, then out and back along branches
    2..n-1, and finally out along branch n.
    """
    if m % 2:
        raise ParityViolation("the wedge-to-linear map needs m even")
    if m == 0:
        return [0]
    walk = [wedge_node(m, 1, i) for i in range(m, 0, -1)] + [0]
    for j in range(2, n + 1):
        walk += [wedge_node(m, j, i) for i in range(1, m + 1)]
        if j < n:
            walk += [wedge_node(m, j, i) for i in range(m - 1, 0, -1)] + [0]
    return walk


def linear_to_wedge(n: int, m: int) -> tuple[int, list[int]]:
    """``g : J_{n,k} -> J_{(n-1)m}`` with ``k = (n-1)m/2``, for ``m`` divisible by 4.

    The centre goes to ``k``; branch ``j`` walks from ``k`` toward
    ``(j-1)m`` and then idles there.
    """
    if m % 4:
        raise ParityViolation("the linear-to-wedge map needs m divisible by 4")
    k = (n - 1) * m // 2
    out = [k]
    for j in range(1, n + 1):
        target = (j - 1) * m
        step = 1 if target >= k else -1
        dist = abs(target - k)
        for i in range(1, k + 1):
            out.append(k + step * i if i <= dist else target)
    return k, out


def _reindex(w: SectionWitness, node_map: Sequence[int], variant: str, m: int) -> SectionWitness:
    out = SectionWitness(variant, w.n, m, w.target, w.domain, dict(w.endpoints),
                         {x: tuple(vals[node_map[t]] for t in range(len(node_map)))
                          for x, vals in w.assignment.items()})
    return out


def transport_R(w: SectionWitness) -> SectionWitness:
    """Section at ``m`` -> section at ``m + 1`` (same variant)."""
    w.check()
    if w.variant == WEDGE:
        out = _reindex(w, wedge_retraction(w.n, w.m), WEDGE, w.m + 1)
    else:
        out = _reindex(w, linear_retraction(w.n, w.m), LINEAR, w.m + 1)
    out.check()
    return out


def transport_f(w: SectionWitness) -> SectionWitness:
    """Wedge section at even ``m`` -> linear section at ``2m``."""
    if w.variant != WEDGE:
        raise InvalidWitness("transport_f takes a wedge section")
    w.check()
    out = _reindex(w, wedge_to_linear(w.n, w.m), LINEAR, 2 * w.m)
    out.check()
    return out


def transport_g(w: SectionWitness) -> SectionWitness:
    """Linear section at ``m = 0 mod 4`` -> wedge section at ``(n-1)m/2``."""
    if w.variant != LINEAR:
        raise InvalidWitness("transport_g takes a linear section")
    w.check()
    k, node_map = linear_to_wedge(w.n, w.m)
    out = _reindex(w, node_map, WEDGE, k)
    out.check()
    return out
