"""Brute force reference implementations for the tests.

Everything here works on plain relation matrices and exhaustive
enumeration: no cores, no constraint propagation, no cover heuristics.
Only usable on very small inputs.
"""

from __future__ import annotations

import itertools
from collections import deque


class Rel:
    """A finite order as an explicit ``leq`` matrix."""

    def __init__(self, n, leq):
        self.n = n
        self.leq = leq

    @classmethod
    def from_poset(cls, P):
        n = len(P)
        return cls(n, [[P.leq(a, b) for b in range(n)] for a in range(n)])

    @classmethod
    def from_pairs(cls, n, pairs):
        """Reflexive transitive closure of ``pairs`` (Floyd-Warshall)."""
        leq = [[a == b for b in range(n)] for a in range(n)]
        for a, b in pairs:
            leq[a][b] = True
        for k in range(n):
            for i in range(n):
                if leq[i][k]:
                    for j in range(n):
                        if leq[k][j]:
                            leq[i][j] = True
        return cls(n, leq)

    def sub(self, members):
        members = list(members)
        return Rel(len(members), [[self.leq[a][b] for b in members] for a in members])

    def power(self, k):
        elems = list(itertools.product(range(self.n), repeat=k))
        leq = [[all(self.leq[a[i]][b[i]] for i in range(k)) for b in elems] for a in elems]
        return Rel(len(elems), leq), elems


def monotone(A: Rel, B: Rel, f) -> bool:
    return all(B.leq[f[a]][f[b]] for a in range(A.n) for b in range(A.n) if A.leq[a][b])


def all_maps(A: Rel, B: Rel):
    return [f for f in itertools.product(range(B.n), repeat=A.n) if monotone(A, B, f)]


def _comparable(B: Rel, f, g) -> bool:
    return all(B.leq[a][b] for a, b in zip(f, g)) or all(B.leq[b][a] for a, b in zip(f, g))


def homotopy_classes(A: Rel, B: Rel) -> dict:
    """Component id of every monotone map, by union-find on comparable pairs."""
    maps = all_maps(A, B)
    parent = list(range(len(maps)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(maps)):
        for j in range(i + 1, len(maps)):
            if _comparable(B, maps[i], maps[j]):
                parent[find(i)] = find(j)
    return {f: find(i) for i, f in enumerate(maps)}


def homotopic_bfs(A: Rel, B: Rel, f, g) -> bool:
    """Search the component of ``f`` by changing one value at a time."""
    f, g = tuple(f), tuple(g)
    seen = {f}
    queue = deque([f])
    while queue:
        h = queue.popleft()
        if h == g:
            return True
        for x in range(A.n):
            for v in range(B.n):
                if v == h[x] or not (B.leq[v][h[x]] or B.leq[h[x]][v]):
                    continue
                k = h[:x] + (v,) + h[x + 1:]
                if k not in seen and monotone(A, B, k):
                    seen.add(k)
                    queue.append(k)
    return False


def down_sets(A: Rel):
    """Every down-closed subset as a frozenset."""
    out = []
    for bits in range(1 << A.n):
        S = {i for i in range(A.n) if bits >> i & 1}
        if all(b in S for a in S for b in range(A.n) if A.leq[b][a]):
            out.append(frozenset(S))
    return out


def _is_beat(A: Rel, alive, x) -> bool:
    below = [y for y in alive if y != x and A.leq[y][x]]
    above = [y for y in alive if y != x and A.leq[x][y]]
    if below and any(all(A.leq[z][y] for z in below) for y in below):
        return True
    return bool(above) and any(all(A.leq[y][z] for z in above) for y in above)


def core_size(A: Rel) -> int:
    alive = set(range(A.n))
    changed = True
    while changed:
        changed = False
        for x in sorted(alive):
            if _is_beat(A, alive, x):
                alive.discard(x)
                changed = True
                break
    return len(alive)


def contractible(A: Rel) -> bool:
    return core_size(A) == 1


def components(A: Rel, members=None) -> int:
    members = list(range(A.n)) if members is None else list(members)
    parent = {x: x for x in members}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for a in members:
        for b in members:
            if A.leq[a][b]:
                parent[find(a)] = find(b)
    return len({find(x) for x in members})


def min_cover(universe, sets) -> int | None:
    """Fewest of ``sets`` covering ``universe`` (None when impossible)."""
    universe = frozenset(universe)
    sets = [s for s in set(sets) if not any(s < t for t in sets)]
    for k in range(1, len(sets) + 1):
        for combo in itertools.combinations(sets, k):
            if frozenset().union(*combo) >= universe:
                return k
    return None if universe else 0


def cover_invariant(A: Rel, passes) -> float | int:
    opens = [U for U in down_sets(A) if U and passes(U)]
    v = min_cover(range(A.n), opens)
    return float("inf") if v is None else v


def cat(A: Rel) -> int:
    def passes(U):
        S = A.sub(sorted(U))
        members = sorted(U)
        incl = tuple(members)
        return any(homotopic_bfs(S, A, incl, (c,) * len(members)) for c in range(A.n))
    return cover_invariant(A, passes)


def cc_n(A: Rel, n: int):
    Pn, elems = A.power(n)

    def passes(U):
        members = sorted(U)
        S = Pn.sub(members)
        projs = [tuple(elems[x][j] for x in members) for j in range(n)]
        return all(homotopic_bfs(S, A, projs[0], p) for p in projs[1:])
    return cover_invariant(Pn, passes)


# -- bounded sections -----------------------------------------------------------

def fence_rel(m: int) -> Rel:
    pairs = [(i, i + 1) if i % 2 == 0 else (i + 1, i) for i in range(m)]
    return Rel.from_pairs(m + 1, pairs)


def wedge_rel(n: int, m: int):
    """``J_{n,m}`` with its endpoint nodes; node 0 is the centre."""
    nodes = [(0, 0)] + [(j, i) for j in range(1, n + 1) for i in range(1, m + 1)]
    idx = {v: k for k, v in enumerate(nodes)}
    pairs = []
    for j in range(1, n + 1):
        for i in range(1, m + 1):
            a = idx[(0, 0)] if i == 1 else idx[(j, i - 1)]
            b = idx[(j, i)]
            pairs.append((a, b) if (i - 1) % 2 == 0 else (b, a))
    ends = [idx[(j, m)] if m else 0 for j in range(1, n + 1)]
    return Rel.from_pairs(len(nodes), pairs), ends


def section_exists(A: Rel, n: int, m: int, variant: str, U_members, elems, Pn: Rel) -> bool:
    """Monotone ``s`` from ``U`` to the path poset with the right endpoints."""
    if variant == "wedge":
        J, ends = wedge_rel(n, m)
    else:
        J = fence_rel((n - 1) * m)
        ends = [(j - 1) * m for j in range(1, n + 1)]
    paths = all_maps(J, A)
    members = list(U_members)
    cands = [[p for p in paths if tuple(p[e] for e in ends) == tuple(elems[x])] for x in members]
    chosen = []

    def rec(i):
        if i == len(members):
            return True
        for p in cands[i]:
            ok = True
            for k in range(i):
                a, b = members[k], members[i]
                if Pn.leq[a][b] and not all(A.leq[u][v] for u, v in zip(chosen[k], p)):
                    ok = False
                    break
                if Pn.leq[b][a] and not all(A.leq[v][u] for u, v in zip(chosen[k], p)):
                    ok = False
                    break
            if ok:
                chosen.append(p)
                if rec(i + 1):
                    return True
                chosen.pop()
        return False

    return rec(0)


def cc_nm(A: Rel, n: int, m: int, variant: str):
    Pn, elems = A.power(n)
    return cover_invariant(Pn, lambda U: section_exists(A, n, m, variant, sorted(U), elems, Pn))


# -- simplicial -----------------------------------------------------------------

def all_simplices(facets):
    out = set()
    for f in facets:
        for r in range(1, len(f) + 1):
            out.update(frozenset(c) for c in itertools.combinations(f, r))
    return out


def simplicial_maps(nk, k_facets, nl, l_facets):
    ks = all_simplices(k_facets)
    ls = all_simplices(l_facets)
    return [f for f in itertools.product(range(nl), repeat=nk)
            if all(frozenset(f[v] for v in s) in ls for s in ks)]


def contiguity_classes(nk, k_facets, nl, l_facets) -> dict:
    maps = simplicial_maps(nk, k_facets, nl, l_facets)
    ls = all_simplices(l_facets)
    ks = all_simplices(k_facets)
    parent = list(range(len(maps)))

    def find(i):
        while parent[i] != i:
            i = parent[i]
        return i

    for i in range(len(maps)):
        for j in range(i + 1, len(maps)):
            if all(frozenset([maps[i][v] for v in s] + [maps[j][v] for v in s]) in ls for s in ks):
                parent[find(i)] = find(j)
    return {f: find(i) for i, f in enumerate(maps)}


def count_chains(A: Rel) -> int:
    total = 0
    for r in range(1, A.n + 1):
        for c in itertools.combinations(range(A.n), r):
            if all(A.leq[a][b] or A.leq[b][a] for a in c for b in c):
                total += 1
    return total
