"""Minimum covers by opens passing a hereditary test.

Every invariant here is "the fewest opens, each passing some test, that
cover a finite space", and every test used is hereditary: if an open passes,
so does every smaller open (restrict the section, homotopy or contraction).
Two consequences drive the search:

* a cover only has to reach the maximal elements, since any open holding a
  maximal point ``t`` may be shrunk to, or grown from, ``U_t``;
* it suffices to use opens ``down(S)`` for sets ``S`` of maximal points
  that are inclusion-maximal among passing ones.

A minimum cover can moreover be shrunk to a partition of the maximal
points into passing groups, so ``minimum_cover`` searches partitions by
branch and bound.  ``maximal_groups`` lists the inclusion-maximal passing
groups themselves (pair graph, maximal cliques, then maximal passing
subsets inside each clique), and ``exact_min_cover`` is the set cover
over such a list.
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

import networkx as nx

from .errors import BudgetExceeded, Infeasible, UNKNOWN
from .poset import FinitePoset, bits

log = logging.getLogger(__name__)

EXHAUSTIVE_MAXIMA = 16
PAIR_LOWER_BOUND_MAXIMA = 64


# -- exact set cover -----------------------------------------------------

def greedy_cover(universe: int, candidates: Sequence[int]) -> list[int]:
    """Largest-gain greedy cover (ties to the lowest index)."""
    left = universe
    chosen = []
    while left:
        best, gain = None, 0
        for i, c in enumerate(candidates):
            g = (c & left).bit_count()
            if g > gain:
                best, gain = i, g
        if best is None:
            raise Infeasible("candidates do not cover the universe")
        chosen.append(best)
        left &= ~candidates[best]
    return chosen


def exact_min_cover(universe: int, candidates: Sequence[int], budget: int | None = 1_000_000) -> list[int]:
    """Indices of a minimum subfamily of ``candidates`` covering ``universe``.

    Sets are bitmasks.  Branches on the uncovered element lying in the fewest
    candidates, trying those candidates in index order.  Raises Infeasible,
    or BudgetExceeded carrying the greedy answer as ``.greedy``.
    """
    cands = [c & universe for c in candidates]
    union = 0
    for c in cands:
        union |= c
    if union != universe:
        raise Infeasible("candidates do not cover the universe")
    if universe == 0:
        return []
    # drop candidates contained in an earlier-or-larger one; keep original indices
    keep = []
    for i, c in enumerate(cands):
        if not c:
            continue
        dominated = any(j != i and c & ~d == 0 and (c != d or j < i) for j, d in enumerate(cands))
        if not dominated:
            keep.append(i)
    best = greedy_cover(universe, [cands[i] for i in keep])
    best = [keep[i] for i in best]
    biggest = max(cands[i].bit_count() for i in keep)
    containing = {}
    for e in bits(universe):
        containing[e] = [i for i in keep if (cands[i] >> e) & 1]
    nodes = 0

    def search(covered, chosen):
        nonlocal best, nodes
        left = universe & ~covered
        if not left:
            if len(chosen) < len(best):
                best = list(chosen)
            return
        bound = -(-left.bit_count() // biggest)
        if len(chosen) + bound >= len(best):
            return
        nodes += 1
        if budget is not None and nodes > budget:
            raise BudgetExceeded("set cover search exceeded its budget")
        e = min(bits(left), key=lambda v: (len(containing[v]), v))
        for i in containing[e]:
            chosen.append(i)
            search(covered | cands[i], chosen)
            chosen.pop()

    greedy = list(best)
    try:
        search(0, [])
    except BudgetExceeded as exc:
        exc.greedy = sorted(best if len(best) <= len(greedy) else greedy)
        raise
    return sorted(best)


# -- maximal passing groups of maximal elements ---------------------------

class CachedTest:
    """Memoised tri-state test on down-closed masks of ``ambient``."""

    def __init__(self, ambient: FinitePoset, test: Callable[[int], object],
                 deadline: float | None = None):
        self.ambient = ambient
        self.test = test
        self.cache = {}
        self.calls = 0
        self.unknowns = 0
        self.deadline = deadline

    def __call__(self, mask: int):
        r = self.cache.get(mask)
        if r is None:
            if self.deadline is not None and time.monotonic() > self.deadline:
                r = UNKNOWN
            else:
                self.calls += 1
                r = self.test(mask)
            if r is UNKNOWN:
                self.unknowns += 1
            self.cache[mask] = r
        return r


@dataclass
class GroupSearch:
    """Outcome of the search for maximal passing groups.

    ``groups`` are bitmasks over positions in ``maxima``.  ``complete`` means
    every inclusion-maximal passing group is listed (exhaustive path with no
    UNKNOWN answers).  ``lower_bound`` is a proven lower bound on the cover
    size; ``failing`` lists maxima whose own minimal open fails.
    """

    maxima: list
    groups: list = field(default_factory=list)
    complete: bool = False
    strategy: str = ""
    lower_bound: int = 1
    failing: list = field(default_factory=list)
    undecided: list = field(default_factory=list)


def _down_of(ambient: FinitePoset, maxima, group: int) -> int:
    out = 0
    for i in bits(group):
        out |= ambient.down[maxima[i]]
    return out


def _maximal_only(groups):
    groups = sorted(set(groups), key=lambda g: (-g.bit_count(), g))
    out = []
    for g in groups:
        if not any(g & ~h == 0 for h in out):
            out.append(g)
    return sorted(out)


def _clique_lower_bound(conflicts: nx.Graph) -> int:
    if conflicts.number_of_nodes() == 0:
        return 1
    best = max((len(c) for c in nx.find_cliques(conflicts)), default=1)
    return max(best, 1)


def _basis_and_whole(ambient, maxima, passes, res) -> bool:
    """Shared opening: basis opens, then the whole space.  True when settled."""
    M = len(maxima)
    for i in range(M):
        r = passes(1 << i)
        if r is False:
            res.failing.append(i)
        elif r is UNKNOWN:
            res.undecided.append(i)
    if res.failing:
        res.strategy = "basis-open-failure"
        res.complete = not res.undecided
        return True
    full = (1 << M) - 1
    whole = passes(full)
    if whole is True:
        res.groups = [full]
        res.complete = True
        res.strategy = "whole-space"
        return True
    res.lower_bound = 2 if whole is False else 1
    return False


def _pair_graphs(M, passes):
    conflicts = nx.Graph()
    compatible = nx.Graph()
    conflicts.add_nodes_from(range(M))
    compatible.add_nodes_from(range(M))
    unknown = False
    for i in range(M):
        for j in range(i + 1, M):
            r = passes((1 << i) | (1 << j))
            if r is True:
                compatible.add_edge(i, j)
            elif r is False:
                conflicts.add_edge(i, j)
            else:
                unknown = True
    return conflicts, compatible, unknown


def maximal_groups(ambient: FinitePoset, test: CachedTest, *,
                   exhaustive_limit: int = EXHAUSTIVE_MAXIMA,
                   subset_budget: int = 200_000) -> GroupSearch:
    """Inclusion-maximal sets of maximal elements whose down-closure passes ``test``.

    Exhaustive (maximal cliques of the pairwise-compatible graph, then the
    maximal passing subsets of each clique) when there are at most
    ``exhaustive_limit`` maximal elements; otherwise one greedily grown
    group per uncovered point, flagged incomplete.
    """
    maxima = ambient.maximal_elements()
    M = len(maxima)
    res = GroupSearch(maxima)

    def passes(group):
        return test(_down_of(ambient, maxima, group))

    if _basis_and_whole(ambient, maxima, passes, res):
        return res
    if M <= exhaustive_limit:
        res.strategy = "exhaustive"
        conflicts, compatible, unknown = _pair_graphs(M, passes)
        res.lower_bound = max(res.lower_bound, _clique_lower_bound(conflicts))
        complete = not unknown
        found = []
        for clique in sorted(sorted(c) for c in nx.find_cliques(compatible)):
            top = 0
            for i in clique:
                top |= 1 << i
            sub, ok = _maximal_passing_subsets(top, passes, subset_budget)
            found.extend(sub)
            complete = complete and ok
        res.groups = _maximal_only(found)
        res.complete = complete
        return res
    res.strategy = "growth"
    adjacency = _adjacency(ambient, maxima)
    found = []
    covered = 0
    for i in range(M):
        if not (covered >> i) & 1:
            g = _grow(1 << i, passes, adjacency, M) or (1 << i)
            found.append(g)
            covered |= g
    res.groups = _maximal_only(found)
    return res


@dataclass
class CoverSearch:
    """Outcome of ``minimum_cover``: groups of maximal elements (bitmasks over
    positions in ``maxima``) whose down-closures form the cover."""

    maxima: list
    groups: list = field(default_factory=list)
    exact: bool = False
    strategy: str = ""
    lower_bound: int = 1
    failing: list = field(default_factory=list)
    undecided: list = field(default_factory=list)
    complete: bool = False
    nodes: int = 0


def minimum_cover(ambient: FinitePoset, test: CachedTest, *, seeds: Sequence[int] = (),
                  pair_limit: int = PAIR_LOWER_BOUND_MAXIMA, restarts: int = 8,
                  restart_seed: int = 0, node_budget: int = 200_000,
                  grow_result: bool = True) -> CoverSearch:
    """Fewest passing opens covering ``ambient``.

    By heredity a cover can be shrunk to a partition of the maximal points
    into passing groups, so the exact search is a branch and bound over such
    partitions (each point joins an existing group or opens a new one, and
    a branch dies once it needs as many groups as the best found).  Upper
    bounds come first from cheap heuristics: grown seeds, first-fit
    partitions over several fixed orders, and complements.  Lower bounds:
    2 if the whole space fails, and the largest set of pairwise conflicting
    points when pairs are tested.

    UNKNOWN answers count as failures; any met during the exact search
    downgrade the result to an upper bound.
    """
    maxima = ambient.maximal_elements()
    M = len(maxima)
    res = CoverSearch(maxima)
    full = (1 << M) - 1

    def passes(group):
        return test(_down_of(ambient, maxima, group))

    if _basis_and_whole(ambient, maxima, passes, res):
        res.exact = res.complete
        return res

    conflicts = None
    if M <= pair_limit:
        conflicts, _, _ = _pair_graphs(M, passes)
        res.lower_bound = max(res.lower_bound, _clique_lower_bound(conflicts))

    adjacency = _adjacency(ambient, maxima)
    # -- upper bound by heuristics
    candidates = []
    covered = 0
    plain = [s for s in seeds if s and s & ~full == 0 and passes(s) is True]
    if plain and len(plain) <= max(res.lower_bound, 1) and _union(plain) == full and not res.undecided:
        res.groups = plain
        res.exact = res.complete = True
        res.strategy = "seeds meeting the lower bound"
        return res
    for s in plain:
        g = _grow(s, passes, adjacency, M)
        candidates.append(g)
        covered |= g
    for i in range(M):
        if not (covered >> i) & 1:
            g = _grow(1 << i, passes, adjacency, M) or (1 << i)
            candidates.append(g)
            covered |= g
    best = [candidates[i] for i in greedy_cover(full, candidates)]
    rng = random.Random(restart_seed)
    orders = [_bfs_order(adjacency, M), list(range(M))]
    if conflicts is not None:
        orders.insert(0, _conflict_order(conflicts, adjacency, M))
    for _ in range(restarts):
        order = list(range(M))
        rng.shuffle(order)
        orders.append(order)
    for order in orders:
        if len(best) <= res.lower_bound:
            break
        parts = _first_fit(order, passes, limit=len(best))
        if parts is not None and len(parts) < len(best):
            best = parts
    if len(best) > 2 and res.lower_bound <= 2:
        for g in candidates + best:
            comp = full & ~g
            if comp and passes(comp) is True:
                best = [g, comp]
                break
    res.strategy = "heuristic"

    # -- exact search
    if len(best) > res.lower_bound:
        order = orders[0]
        unknown_seen = False
        parts = []
        nodes = 0
        found = None

        def rec(idx):
            nonlocal nodes, unknown_seen, found
            if idx == M:
                found = list(parts)
                return True
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceeded("partition search budget")
            bit = 1 << order[idx]
            for k in range(len(parts)):
                r = passes(parts[k] | bit)
                if r is True:
                    parts[k] |= bit
                    if rec(idx + 1):
                        return True
                    parts[k] &= ~bit
                elif r is UNKNOWN:
                    unknown_seen = True
            if len(parts) + 1 < target:
                parts.append(bit)
                if rec(idx + 1):
                    return True
                parts.pop()
            return False

        finished = True
        try:
            # iterative deepening on the number of groups keeps the search
            # from wandering in large partitions
            for target in range(max(res.lower_bound, 1) + 1, len(best) + 1):
                parts = []
                found = None
                if rec(0):
                    best = found
                    break
        except BudgetExceeded:
            finished = False
        res.nodes = nodes
        res.strategy = "branch-and-bound"
        res.exact = finished and not unknown_seen
        if not finished:
            res.strategy = "heuristic (partition search hit its budget)"
    else:
        res.exact = True
        res.strategy = "heuristic meeting the lower bound"
    if res.undecided:
        res.exact = False
    if grow_result and M <= pair_limit:
        # cosmetic: enlarge the opens, too costly when failing tests are expensive
        best = [_grow(g, passes, adjacency, M) or g for g in best]
    res.groups = best
    res.complete = res.exact
    return res


def _union(groups):
    out = 0
    for g in groups:
        out |= g
    return out


def _conflict_order(conflicts: nx.Graph, adjacency, M):
    """Most conflicted points first (ties in breadth-first order)."""
    bfs = _bfs_order(adjacency, M)
    rank = {v: i for i, v in enumerate(bfs)}
    return sorted(range(M), key=lambda v: (-conflicts.degree(v), rank[v]))


def _cover_size(full, groups):
    try:
        return len(greedy_cover(full, groups))
    except Infeasible:
        return 1 << 30


def _bfs_order(adjacency, M):
    order, seen = [], 0
    for root in range(M):
        if (seen >> root) & 1:
            continue
        seen |= 1 << root
        queue = [root]
        while queue:
            i = queue.pop(0)
            order.append(i)
            for j in adjacency[i]:
                if not (seen >> j) & 1:
                    seen |= 1 << j
                    queue.append(j)
    return order


def _first_fit(order, passes, limit):
    """Put each maximal point into the first group that still passes.

    Gives up (returns None) once ``limit`` groups would be needed.
    """
    parts = []
    for i in order:
        for k, g in enumerate(parts):
            if passes(g | (1 << i)) is True:
                parts[k] = g | (1 << i)
                break
        else:
            if len(parts) + 1 >= limit or passes(1 << i) is not True:
                return None
            parts.append(1 << i)
    return parts


def _adjacency(ambient: FinitePoset, maxima) -> list[list[int]]:
    """Maxima sharing a point below them, each list in index order."""
    M = len(maxima)
    downs = [ambient.down[t] for t in maxima]
    adj = [[] for _ in range(M)]
    for i in range(M):
        for j in range(i + 1, M):
            if downs[i] & downs[j]:
                adj[i].append(j)
                adj[j].append(i)
    return adj


def _grow(seed: int, passes, adjacency, M: int):
    """Add maxima in breadth-first order from the seed while the test keeps passing.

    One pass is enough for maximality: a point rejected against a smaller
    group stays rejected against any larger one (heredity).
    """
    if passes(seed) is not True:
        return None
    group = seed
    seen = seed
    frontier = list(bits(seed))
    while frontier:
        nxt = []
        for i in frontier:
            for j in adjacency[i]:
                if (seen >> j) & 1:
                    continue
                seen |= 1 << j
                if passes(group | (1 << j)) is True:
                    group |= 1 << j
                    nxt.append(j)
        frontier = nxt
    for j in range(M):
        if not (seen >> j) & 1:
            seen |= 1 << j
            if passes(group | (1 << j)) is True:
                group |= 1 << j
    return group


def _maximal_passing_subsets(top: int, passes, budget: int):
    """All maximal passing subsets of ``top``.

    Include/exclude backtracking over the points of ``top`` in index order.
    Two sound cuts, both from heredity: if the group plus every remaining
    point passes, that is the only maximal completion; and leaving a point
    out is pointless when it could be put back into the largest possible
    completion.  Returns ``(groups, complete)``; on budget exhaustion, the
    groups found so far plus singletons for the points they miss.
    """
    r = passes(top)
    if r is True:
        return [top], True
    points = list(bits(top))
    suffix = [0] * (len(points) + 1)
    for i in range(len(points) - 1, -1, -1):
        suffix[i] = suffix[i + 1] | (1 << points[i])
    found = []
    complete = r is False
    steps = 0

    def check(r):
        nonlocal complete
        if r is UNKNOWN:
            complete = False
        return r is True

    def rec(idx, group, left_out):
        nonlocal steps
        steps += 1
        if steps > budget:
            raise BudgetExceeded("subset enumeration budget")
        whole = group | suffix[idx]
        if idx == len(points) or check(passes(whole)):
            if any(check(passes(whole | (1 << j))) for j in bits(left_out)):
                return
            found.append(whole)
            return
        p = 1 << points[idx]
        if check(passes(group | p)):
            rec(idx + 1, group | p, left_out)
        if not check(passes(group | p | suffix[idx + 1])):
            rec(idx + 1, group, left_out | p)

    try:
        rec(0, 0, 0)
    except BudgetExceeded:
        covered = 0
        for g in found:
            covered |= g
        extra = [1 << i for i in bits(top & ~covered)]
        return _maximal_only(found + extra), False
    return _maximal_only(found), complete
