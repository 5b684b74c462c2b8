"""Constraint search for order-preserving assignments.

Every search in this package that asks "is there a monotone map with these
pinned values" has the same shape: variables range over the elements of a
small target poset ``T`` and all constraints are ``var_a <= var_b`` in
``T``.  Domains are bitmasks over ``T``; propagation narrows ``dom(b)`` to
the up-closure of ``dom(a)`` and ``dom(a)`` to the down-closure of
``dom(b)`` until a fixpoint, and backtracking picks the smallest domain
first and tries values in ascending index order.
"""

from __future__ import annotations

from .errors import BudgetExceeded
from .poset import FinitePoset, bits


class _Closures:
    __slots__ = ("down", "up", "_dc", "_uc")

    def __init__(self, T: FinitePoset):
        self.down = T.down
        self.up = T.up
        self._dc = {}
        self._uc = {}

    def down_of(self, m):
        r = self._dc.get(m)
        if r is None:
            r = 0
            for v in bits(m):
                r |= self.down[v]
            self._dc[m] = r
        return r

    def up_of(self, m):
        r = self._uc.get(m)
        if r is None:
            r = 0
            for v in bits(m):
                r |= self.up[v]
            self._uc[m] = r
        return r


_closure_cache: dict[int, _Closures] = {}


def closures_for(T: FinitePoset) -> _Closures:
    c = _closure_cache.get(id(T))
    if c is None or c.down is not T.down:
        if len(_closure_cache) > 256:
            _closure_cache.clear()
        c = _Closures(T)
        _closure_cache[id(T)] = c
    return c


class OrderCSP:
    """Variables valued in ``target`` under ``<=`` constraints."""

    def __init__(self, target: FinitePoset, n_vars: int):
        self.target = target
        full = target.full_mask
        self.domains = [full] * n_vars
        self.succ = [[] for _ in range(n_vars)]
        self.pred = [[] for _ in range(n_vars)]
        self.nodes = 0

    def restrict(self, var: int, mask: int) -> None:
        self.domains[var] &= mask

    def fix(self, var: int, value: int) -> None:
        self.domains[var] &= 1 << value

    def add_leq(self, a: int, b: int) -> None:
        """Require ``value[a] <= value[b]``."""
        if a != b:
            self.succ[a].append(b)
            self.pred[b].append(a)

    def _propagate(self, doms, queue) -> bool:
        cl = closures_for(self.target)
        succ, pred = self.succ, self.pred
        queued = set(queue)
        while queue:
            a = queue.pop()
            queued.discard(a)
            da = doms[a]
            if succ[a]:
                u = cl.up_of(da)
                for b in succ[a]:
                    db = doms[b]
                    nb = db & u
                    if nb != db:
                        if not nb:
                            return False
                        doms[b] = nb
                        if b not in queued:
                            queued.add(b)
                            queue.append(b)
            if pred[a]:
                d = cl.down_of(da)
                for b in pred[a]:
                    db = doms[b]
                    nb = db & d
                    if nb != db:
                        if not nb:
                            return False
                        doms[b] = nb
                        if b not in queued:
                            queued.add(b)
                            queue.append(b)
        return True

    def solve(self, budget: int | None = None) -> list[int] | None:
        """A satisfying assignment, or ``None`` if none exists.

        Raises BudgetExceeded after ``budget`` branching decisions.
        """
        doms = list(self.domains)
        if any(d == 0 for d in doms):
            return None
        if not self._propagate(doms, list(range(len(doms)))):
            return None
        stack = []
        while True:
            var = _pick(doms)
            if var is None:
                return [d.bit_length() - 1 for d in doms]
            stack.append((doms, var, doms[var]))
            while True:
                if not stack:
                    return None
                saved, var, values = stack.pop()
                if not values:
                    continue
                low = values & -values
                stack.append((saved, var, values ^ low))
                self.nodes += 1
                if budget is not None and self.nodes > budget:
                    raise BudgetExceeded(f"constraint search exceeded {budget} decisions")
                doms = list(saved)
                doms[var] = low
                if self._propagate(doms, [var]):
                    break


def _pick(doms):
    best = None
    best_size = 1 << 30
    for i, d in enumerate(doms):
        if d & (d - 1):
            s = d.bit_count()
            if s < best_size:
                best, best_size = i, s
                if s == 2:
                    break
    return best
