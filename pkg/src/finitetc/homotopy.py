"""Homotopy of maps between finite spaces.

Two monotone maps ``f, g : Q -> P`` are homotopic iff they lie in one
component of the mapping poset ``Hom(Q, P)`` (pointwise order): a homotopy
``H : Q x J_m -> P`` is the same thing as a zigzag ``f = h_0 <= h_1 >= h_2
<= ... h_m = g`` of its slices.

``homotopic`` decides this exactly where it can and answers ``UNKNOWN``
when its budgets run out.  The decision runs in stages:

1. both sides are reduced to cores (beat-point removal).  For the domain
   this is restriction along the core inclusion, for the codomain
   composition with the core retraction; neither changes the answer;
2. if the codomain core has height <= 1 its order complex is a graph, and
   images of closed fences in the domain core are compared as free
   homotopy classes of closed walks.  A mismatch rules out even a
   continuous homotopy of realisations, so it certifies "no";
3. short zigzags are searched for with the constraint solver;
4. the component of ``f`` in ``Hom`` is explored breadth first from both
   ends under a node budget (exact when it finishes);
5. longer zigzags are searched for.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .csp import OrderCSP
from .errors import BudgetExceeded, DomainMismatch, EndpointMismatch, InvalidWitness, UNKNOWN
from .poset import (DownSet, FinitePoset, MonotoneMap, bits, connected_components,
                    is_monotone)

DEFAULT_NODE_BUDGET = 20_000
DEFAULT_CSP_BUDGET = 5_000
SHORT_ZIGZAGS = (2, 3, 4)
LONG_ZIGZAGS = (6, 8, 12, 16)


# -- combinatorial paths ----------------------------------------------

@dataclass(frozen=True)
class CombinatorialPath:
    """A monotone map ``J_m -> P``: ``x_0 <= x_1 >= x_2 <= ...``."""

    target: FinitePoset
    values: tuple

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if not self.values:
            raise ValueError("a path has at least one point")
        leq = self.target.leq
        for i in range(1, len(self.values)):
            a, b = self.values[i - 1], self.values[i]
            ok = leq(a, b) if i % 2 == 1 else leq(b, a)
            if not ok:
                raise ValueError(f"zigzag broken between positions {i - 1} and {i}")

    @property
    def length(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, i):
        return self.values[i]

    def labels(self) -> list[str]:
        return [self.target.labels[v] for v in self.values]


def concatenate(g1: CombinatorialPath, g2: CombinatorialPath) -> CombinatorialPath:
    """Concatenation; an odd-length first path gets its endpoint repeated once."""
    if g1.values[-1] != g2.values[0]:
        raise EndpointMismatch("first path must end where the second starts")
    m1 = g1.length
    if m1 % 2 == 0:
        values = g1.values + g2.values[1:]
    else:
        values = g1.values + (g1.values[-1],) + g2.values[1:]
    return CombinatorialPath(g1.target, values)


# -- homotopy witnesses ------------------------------------------------

@dataclass
class HomotopyWitness:
    """Slices ``h_0, ..., h_m`` of a homotopy ``Q x J_m -> P``.

    ``h_{i-1} <= h_i`` for odd ``i`` and ``h_{i-1} >= h_i`` for even ``i``.
    """

    domain: FinitePoset
    codomain: FinitePoset
    frames: list = field(default_factory=list)

    @property
    def length(self) -> int:
        return len(self.frames) - 1

    def check(self) -> None:
        if not self.frames:
            raise InvalidWitness("no frames")
        leq = self.codomain.leq
        for t, h in enumerate(self.frames):
            if len(h) != len(self.domain) or not is_monotone(self.domain, self.codomain, h):
                raise InvalidWitness(f"frame {t} is not a monotone map")
            if t:
                prev = self.frames[t - 1]
                if t % 2 == 1:
                    ok = all(leq(a, b) for a, b in zip(prev, h))
                else:
                    ok = all(leq(b, a) for a, b in zip(prev, h))
                if not ok:
                    raise InvalidWitness(f"frames {t - 1} and {t} break the fence pattern")

    def is_valid(self) -> bool:
        try:
            self.check()
        except InvalidWitness:
            return False
        return True

    def maps(self) -> list[MonotoneMap]:
        return [MonotoneMap(self.domain, self.codomain, h, check=False) for h in self.frames]

    def to_json(self) -> dict:
        return {"length": self.length,
                "frames": [[self.codomain.labels[v] for v in h] for h in self.frames]}


def fence_normalise(frames: Sequence[tuple], leq) -> list[tuple]:
    """Pad a sequence of pairwise-comparable frames into the ``<= >= <= ...`` pattern."""
    out = [tuple(frames[0])]
    for h in frames[1:]:
        h = tuple(h)
        prev = out[-1]
        if h == prev:
            continue
        up = all(leq(a, b) for a, b in zip(prev, h))
        down = all(leq(b, a) for a, b in zip(prev, h))
        if not (up or down):
            raise InvalidWitness("consecutive frames are not comparable")
        want_up = len(out) % 2 == 1
        if (want_up and not up) or (not want_up and not down):
            out.append(prev)
        out.append(h)
    return out


# -- enumeration in the mapping poset ----------------------------------

def monotone_maps(domain: FinitePoset, codomain: FinitePoset, bound=None, direction=None) -> Iterator[tuple]:
    """All monotone maps as value tuples, lexicographic in ascending domain index.

    With ``bound`` and ``direction`` in {"down", "up"} only maps pointwise
    below / above ``bound`` are produced.
    """
    n = len(domain)
    ddown = domain.down
    cdown = codomain.down
    full = codomain.full_mask
    if bound is None:
        allowed = [full] * n
    elif direction == "down":
        allowed = [cdown[bound[x]] for x in range(n)]
    elif direction == "up":
        allowed = [codomain.up[bound[x]] for x in range(n)]
    else:
        raise ValueError("direction must be 'down' or 'up'")
    values = [0] * n

    def rec(x):
        if x == n:
            yield tuple(values)
            return
        cand = allowed[x]
        below = ddown[x] & ((1 << x) - 1)
        above = domain.up[x] & ((1 << x) - 1)
        for y in bits(below):
            cand &= codomain.up[values[y]]
        for y in bits(above):
            cand &= cdown[values[y]]
        for v in bits(cand):
            values[x] = v
            yield from rec(x + 1)

    return rec(0)


def neighbors_in_mapping_poset(f: MonotoneMap, direction: str) -> Iterator[MonotoneMap]:
    """Every monotone ``g <= f`` (direction "down") or ``g >= f`` ("up"), ``f`` included."""
    for vals in monotone_maps(f.domain, f.codomain, f.assignment, direction):
        yield MonotoneMap(f.domain, f.codomain, vals, check=False)


# -- cores ---------------------------------------------------------------

def _beat_target(P: FinitePoset, x: int, mask: int):
    bit = 1 << x
    sd = P.down[x] & mask & ~bit
    if P.index_is_linear_extension():
        # a maximum of the strict down-set has to be its highest index
        if sd:
            y = sd.bit_length() - 1
            if sd & ~P.down[y] == 0:
                return y
        su = P.up[x] & mask & ~bit
        if su:
            y = (su & -su).bit_length() - 1
            if su & ~P.up[y] == 0:
                return y
        return None
    if sd:
        for y in bits(sd):
            if sd & ~P.down[y] == 0:
                return y
    su = P.up[x] & mask & ~bit
    if su:
        for y in bits(su):
            if su & ~P.up[y] == 0:
                return y
    return None


def beat_point_removals(P: FinitePoset, mask: int | None = None) -> tuple[int, list[tuple[int, int]]]:
    """Remove beat points (lowest index first) until none remain.

    Returns the core mask and the removal log ``[(removed, retracted_to), ...]``.
    """
    mask = P.full_mask if mask is None else mask
    heap = list(bits(mask))
    heapq.heapify(heap)
    queued = mask
    log = []
    while heap:
        x = heapq.heappop(heap)
        queued &= ~(1 << x)
        if not (mask >> x) & 1:
            continue
        y = _beat_target(P, x, mask)
        if y is None:
            continue
        mask &= ~(1 << x)
        log.append((x, y))
        for z in bits((P.down[x] | P.up[x]) & mask & ~queued):
            heapq.heappush(heap, z)
            queued |= 1 << z
    return mask, log


def retraction_from_log(n: int, log) -> list[int]:
    r = list(range(n))
    for x, y in log:
        for z in range(n):
            if r[z] == x:
                r[z] = y
    return r


def _retraction_chain(n: int, log) -> list[list[int]]:
    """``id = rho_0, rho_1, ...``; consecutive entries are pointwise comparable."""
    cur = list(range(n))
    out = [list(cur)]
    for x, y in log:
        cur = [y if v == x else v for v in cur]
        out.append(list(cur))
    return out


def core(P: FinitePoset) -> FinitePoset:
    mask, _ = beat_point_removals(P)
    return P.induced(mask)[0]


def is_contractible(P: FinitePoset) -> bool:
    mask, _ = beat_point_removals(P)
    return mask.bit_count() <= 1


# -- loop obstruction ------------------------------------------------------

def _cyclic_class(walk: Sequence[int]) -> tuple:
    st: list[int] = []
    for v in walk:
        if st and st[-1] == v:
            continue
        if len(st) >= 2 and st[-2] == v:
            st.pop()
            continue
        st.append(v)
    while len(st) >= 3 and st[1] == st[-2]:
        st = st[1:-1]
    cyc = st[:-1]
    if len(cyc) <= 1:
        return ()
    return min(tuple(cyc[i:] + cyc[:i]) for i in range(len(cyc)))


def fundamental_cycles(C: FinitePoset) -> list[list[int]]:
    """Closed walks in the Hasse graph, one per non-tree edge of a BFS forest."""
    n = len(C)
    parent = [-1] * n
    seen = [False] * n
    tree = set()
    for root in range(n):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in bits(C.lower_covers[u] | C.upper_covers[u]):
                if not seen[v]:
                    seen[v] = True
                    parent[v] = u
                    tree.add((min(u, v), max(u, v)))
                    queue.append(v)

    def to_root(u):
        path = [u]
        while parent[path[-1]] != -1:
            path.append(parent[path[-1]])
        return path

    cycles = []
    for x in range(n):
        for y in bits(C.lower_covers[x]):
            if (min(x, y), max(x, y)) in tree:
                continue
            px, py = to_root(x), to_root(y)
            cycles.append(list(reversed(px)) + py)
    return cycles


def loop_obstruction(C: FinitePoset, D: FinitePoset, f, g) -> bool:
    """True when some closed fence in ``C`` has non-freely-homotopic images.

    Only meaningful for ``D`` of height <= 1, whose order complex is a graph.
    """
    for cyc in fundamental_cycles(C):
        if _cyclic_class([f[v] for v in cyc]) != _cyclic_class([g[v] for v in cyc]):
            return True
    return False


# -- the decision procedure --------------------------------------------------

def _single_point_moves(h, C: FinitePoset, D: FinitePoset):
    dup, ddown = D.up, D.down
    for x in range(len(C)):
        hx = h[x]
        allowed = (ddown[hx] | dup[hx]) & ~(1 << hx)
        for y in bits(C.lower_covers[x]):
            allowed &= dup[h[y]]
        for z in bits(C.upper_covers[x]):
            allowed &= ddown[h[z]]
        for v in bits(allowed):
            yield h[:x] + (v,) + h[x + 1:]


def _bfs_path(C, D, f, g, budget):
    """Bidirectional search in Hom(C, D): path of maps, None if disconnected.

    Raises BudgetExceeded past ``budget`` visited maps.
    """
    if f == g:
        return [f]
    parents = [{f: None}, {g: None}]
    frontiers = [[f], [g]]
    visited = 2
    while frontiers[0] and frontiers[1]:
        side = 0 if len(frontiers[0]) <= len(frontiers[1]) else 1
        mine, other = parents[side], parents[1 - side]
        nxt = []
        for h in frontiers[side]:
            for k in _single_point_moves(h, C, D):
                if k in mine:
                    continue
                mine[k] = h
                if k in other:
                    left = _walk(parents[0], k)
                    right = _walk(parents[1], k)
                    return list(reversed(left)) + right[1:]
                nxt.append(k)
                visited += 1
                if visited > budget:
                    raise BudgetExceeded(f"mapping-poset search exceeded {budget} maps")
        frontiers[side] = nxt
    return None


def _walk(parents, k):
    out = [k]
    while parents[out[-1]] is not None:
        out.append(parents[out[-1]])
    return out


def zigzag_csp(C: FinitePoset, D: FinitePoset, f, g, m: int) -> OrderCSP:
    """Variables ``(t, x) -> t * |C| + x`` for the slices of a homotopy of length ``m``."""
    n = len(C)
    csp = OrderCSP(D, (m + 1) * n)
    for x in range(n):
        csp.fix(x, f[x])
        csp.fix(m * n + x, g[x])
    edges = C.hasse_edges
    for t in range(m + 1):
        base = t * n
        for y, x in edges:
            csp.add_leq(base + y, base + x)
        if t:
            for x in range(n):
                if t % 2 == 1:
                    csp.add_leq((t - 1) * n + x, base + x)
                else:
                    csp.add_leq(base + x, (t - 1) * n + x)
    return csp


def _zigzag_frames(C, D, f, g, m, budget):
    n = len(C)
    sol = zigzag_csp(C, D, f, g, m).solve(budget)
    if sol is None:
        return None
    return [tuple(sol[t * n:(t + 1) * n]) for t in range(m + 1)]


@dataclass
class _Reduction:
    C: FinitePoset
    D: FinitePoset
    c_members: list
    d_members: list
    q_chain: list
    p_chain: list

    def push(self, h):
        pos = {old: new for new, old in enumerate(self.d_members)}
        rp = self.p_chain[-1]
        return tuple(pos[rp[h[x]]] for x in self.c_members)

    def lift(self, h):
        rq = self.q_chain[-1]
        cpos = {old: new for new, old in enumerate(self.c_members)}
        return tuple(self.d_members[h[cpos[rq[x]]]] for x in range(len(rq)))


_codomain_cores: dict = {}


def _codomain_core(P: FinitePoset):
    """Core of a codomain with its retraction chain, cached (codomains repeat a lot)."""
    hit = _codomain_cores.get(id(P))
    if hit is not None and hit[0] is P:
        return hit[1]
    dmask, plog = beat_point_removals(P)
    D, dm = P.induced(dmask)
    val = (D, dm, _retraction_chain(len(P), plog))
    if len(_codomain_cores) > 64:
        _codomain_cores.clear()
    _codomain_cores[id(P)] = (P, val)
    return val


def _reduce(Q: FinitePoset, P: FinitePoset) -> _Reduction:
    cmask, qlog = beat_point_removals(Q)
    C, cm = Q.induced(cmask)
    D, dm, p_chain = _codomain_core(P)
    return _Reduction(C, D, cm, dm, _retraction_chain(len(Q), qlog), p_chain)


def _core_decide(C, D, f, g, budget, csp_budget, want_path):
    """Returns (answer, path-of-comparable-frames-or-None)."""
    if f == g:
        return True, [f]
    if len(D) == 1 or len(C) == 0:
        return True, [f, g]
    dcomp = {}
    for i, comp in enumerate(connected_components(D)):
        for v in comp:
            dcomp[v] = i
    for comp in connected_components(C):
        if dcomp[f[comp[0]]] != dcomp[g[comp[0]]]:
            return False, None
    if D.height() <= 1 and loop_obstruction(C, D, f, g):
        return False, None
    leq = D.leq
    if all(leq(a, b) for a, b in zip(f, g)) or all(leq(b, a) for a, b in zip(f, g)):
        return True, [f, g]
    for m in SHORT_ZIGZAGS:
        try:
            frames = _zigzag_frames(C, D, f, g, m, csp_budget)
        except BudgetExceeded:
            frames = None
        if frames is not None:
            return True, frames
    try:
        path = _bfs_path(C, D, f, g, budget)
    except BudgetExceeded:
        pass
    else:
        return (path is not None), path
    for m in LONG_ZIGZAGS:
        try:
            frames = _zigzag_frames(C, D, f, g, m, csp_budget)
        except BudgetExceeded:
            continue
        if frames is not None:
            return True, frames
    return UNKNOWN, None


def continuous_obstruction(Q: FinitePoset, P: FinitePoset, f, g) -> bool:
    """True when the realisations of ``f`` and ``g`` are certainly not homotopic.

    Uses only invariants of the realisations (components, and loops when the
    core of ``P`` has height <= 1), so a True answer also rules out a
    homotopy after any subdivision of the domain.
    """
    f, g = tuple(f), tuple(g)
    if f == g:
        return False
    red = _reduce(Q, P)
    C, D = red.C, red.D
    fc, gc = red.push(f), red.push(g)
    dcomp = {}
    for i, comp in enumerate(connected_components(D)):
        for v in comp:
            dcomp[v] = i
    for comp in connected_components(C):
        if dcomp[fc[comp[0]]] != dcomp[gc[comp[0]]]:
            return True
    return D.height() <= 1 and loop_obstruction(C, D, fc, gc)


def _check_pair(f: MonotoneMap, g: MonotoneMap):
    if f.domain != g.domain or f.codomain != g.codomain:
        raise DomainMismatch("maps must share domain and codomain")


def decide_homotopy(Q: FinitePoset, P: FinitePoset, f, g, *, budget=DEFAULT_NODE_BUDGET,
                    csp_budget=DEFAULT_CSP_BUDGET, want_witness=False):
    """Core routine on raw value tuples: ``(answer, HomotopyWitness | None)``."""
    f, g = tuple(f), tuple(g)
    if f == g:
        return True, (HomotopyWitness(Q, P, [f]) if want_witness else None)
    red = _reduce(Q, P)
    fc, gc = red.push(f), red.push(g)
    answer, core_path = _core_decide(red.C, red.D, fc, gc, budget, csp_budget, want_witness)
    if answer is not True or not want_witness:
        return answer, None
    frames = []
    for rp in red.p_chain:
        frames.append(tuple(rp[v] for v in f))
    last_p = red.p_chain[-1]
    for rq in red.q_chain:
        frames.append(tuple(last_p[f[rq[x]]] for x in range(len(Q))))
    frames.extend(red.lift(h) for h in core_path)
    back = []
    for rp in red.p_chain:
        back.append(tuple(rp[v] for v in g))
    for rq in red.q_chain:
        back.append(tuple(last_p[g[rq[x]]] for x in range(len(Q))))
    frames.extend(reversed(back))
    w = HomotopyWitness(Q, P, fence_normalise(frames, P.leq))
    w.check()
    return True, w


def homotopic(f: MonotoneMap, g: MonotoneMap, budget: int = DEFAULT_NODE_BUDGET,
              csp_budget: int = DEFAULT_CSP_BUDGET):
    """True / False / UNKNOWN."""
    _check_pair(f, g)
    return decide_homotopy(f.domain, f.codomain, f.assignment, g.assignment,
                           budget=budget, csp_budget=csp_budget)[0]


def homotopy_witness(f: MonotoneMap, g: MonotoneMap, budget: int = DEFAULT_NODE_BUDGET,
                     csp_budget: int = DEFAULT_CSP_BUDGET):
    """A checked HomotopyWitness, ``None`` if not homotopic, or UNKNOWN."""
    _check_pair(f, g)
    answer, w = decide_homotopy(f.domain, f.codomain, f.assignment, g.assignment,
                                budget=budget, csp_budget=csp_budget, want_witness=True)
    if answer is True:
        return w
    return None if answer is False else UNKNOWN


def homotopic_bounded(f: MonotoneMap, g: MonotoneMap, m: int, budget: int | None = DEFAULT_CSP_BUDGET,
                      want_witness: bool = False):
    """Is there a zigzag with exactly the ``J_m`` pattern from ``f`` to ``g``?

    Returns True / False / UNKNOWN, or ``(answer, witness)`` with ``want_witness``.
    """
    _check_pair(f, g)
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        ans = f.assignment == g.assignment
        w = HomotopyWitness(f.domain, f.codomain, [f.assignment]) if ans else None
        return (ans, w) if want_witness else ans
    try:
        frames = _zigzag_frames(f.domain, f.codomain, f.assignment, g.assignment, m, budget)
    except BudgetExceeded:
        return (UNKNOWN, None) if want_witness else UNKNOWN
    ans = frames is not None
    if want_witness:
        return ans, (HomotopyWitness(f.domain, f.codomain, frames) if ans else None)
    return ans


def contractible_in(Q: DownSet, budget: int = DEFAULT_NODE_BUDGET, csp_budget: int = DEFAULT_CSP_BUDGET):
    """Is the inclusion of the open ``Q`` into its ambient space null-homotopic?"""
    P = Q.ambient
    if Q.mask == 0:
        return True
    sub, members = P.induced(Q.mask)
    comps = connected_components(P)
    touched = [c for c in comps if any((Q.mask >> v) & 1 for v in c)]
    if len(touched) > 1:
        return False
    inclusion = tuple(members)
    return decide_homotopy(sub, P, inclusion, (touched[0][0],) * len(members),
                           budget=budget, csp_budget=csp_budget)[0]
