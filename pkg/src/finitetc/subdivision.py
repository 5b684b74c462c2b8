"""``CC^k_n`` and ``CC^inf_n`` over barycentric subdivisions of ``P^n``.

At level ``k`` the ambient is ``sd^k(P^n)`` and ``rho_j`` is the composite
``sd^k(P^n) -> P^n -> P`` of ``tau^k`` with the ``j``-th projection.  An open
``Q`` admits a section with ``q_{n,m} s = tau^k`` for some ``m`` exactly when
``rho_1, ..., rho_n`` restricted to ``Q`` are homotopic, so each level reuses
the cover engine with that test.

Levels only get better: the preimage under ``tau`` of a passing open at
level ``k - 1`` passes at level ``k`` (``rho`` at level ``k`` is ``rho`` at
level ``k - 1`` composed with ``tau``).  Level ``k`` is therefore seeded with
the pulled back cover of level ``k - 1``, which makes the reported values
non-increasing in ``k`` by construction and not just by luck of the search.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .complex import barycentric_subdivision, tau
from .complexity import (EXACT, INFINITY, UPPER_BOUND, Budget, ComplexityReport,
                         ProjectionCriterion, cover_report)
from .errors import IndexOutOfRange, UNKNOWN
from .homotopy import continuous_obstruction
from .poset import DownSet, FinitePoset, MonotoneMap, bits, power

DEFAULT_SUBDIVISION_CAP = 20_000


@dataclass
class SubdivisionTower:
    """``P^n = sd^0, sd^1, ..., sd^depth`` with ``tau`` maps between levels.

    ``taus[i]`` is the value list of ``tau : sd^i -> sd^(i-1)`` (``taus[0]``
    is unused).  ``to_base[i]`` is the composite ``tau^i`` into ``P^n``.
    """

    P: FinitePoset
    n: int
    levels: list = field(default_factory=list)
    taus: list = field(default_factory=list)
    to_base: list = field(default_factory=list)
    cap: int = DEFAULT_SUBDIVISION_CAP

    @classmethod
    def build(cls, P: FinitePoset, n: int, depth: int = 0, cap: int | None = DEFAULT_SUBDIVISION_CAP):
        base = power(P, n)
        t = cls(P, n, [base], [None], [tuple(range(len(base)))], cap if cap is not None else DEFAULT_SUBDIVISION_CAP)
        t.extend_to(depth)
        return t

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    @property
    def base(self) -> FinitePoset:
        return self.levels[0]

    def extend_to(self, depth: int) -> None:
        while self.depth < depth:
            prev = self.levels[-1]
            nxt = barycentric_subdivision(prev, self.cap)
            t = tau(prev, nxt).assignment
            self.levels.append(nxt)
            self.taus.append(tuple(t))
            below = self.to_base[-1]
            self.to_base.append(tuple(below[v] for v in t))

    def tau(self, i: int) -> MonotoneMap:
        if not 1 <= i <= self.depth:
            raise IndexOutOfRange(f"no tau map into level {i - 1}")
        return MonotoneMap(self.levels[i], self.levels[i - 1], self.taus[i], check=False)

    def tau_k(self, k: int) -> MonotoneMap:
        self._check_level(k)
        return MonotoneMap(self.levels[k], self.base, self.to_base[k], check=False)

    def _check_level(self, k):
        if not 0 <= k <= self.depth:
            raise IndexOutOfRange(f"level {k} not built (depth {self.depth})")

    def rho_values(self, k: int, j: int) -> tuple:
        self._check_level(k)
        if not 1 <= j <= self.n:
            raise IndexOutOfRange(f"coordinate {j} out of range 1..{self.n}")
        keys = self.base.keys
        return tuple(keys[v][j - 1] for v in self.to_base[k])

    def pull_back(self, k: int, mask: int) -> int:
        """Preimage under ``tau : sd^k -> sd^(k-1)`` of a mask at level ``k - 1``."""
        out = 0
        for x, v in enumerate(self.taus[k]):
            if (mask >> v) & 1:
                out |= 1 << x
        return out


def rho(tower: SubdivisionTower, k: int, j: int) -> MonotoneMap:
    """``rho_j = pi_j . tau^k : sd^k(P^n) -> P``."""
    return MonotoneMap(tower.levels[k], tower.P, tower.rho_values(k, j), check=False)


def rho_criterion(tower: SubdivisionTower, k: int, budget: Budget | None = None) -> ProjectionCriterion:
    tower.extend_to(k)
    coords = [tower.rho_values(k, j) for j in range(1, tower.n + 1)]
    crit = ProjectionCriterion(tower.levels[k], tower.P, coords, budget)
    crit.name = f"rho_homotopy({k})"
    return crit


def _seed_groups(tower: SubdivisionTower, k: int, cover: list) -> list[int]:
    """Pulled back opens as groups of level ``k`` maximal elements."""
    amb = tower.levels[k]
    maxima = amb.maximal_elements()
    seeds = []
    for U in cover:
        pulled = tower.pull_back(k, U.mask)
        g = 0
        for i, t in enumerate(maxima):
            if (pulled >> t) & 1:
                g |= 1 << i
        if g:
            seeds.append(g)
    return seeds


def cc_k_n(P: FinitePoset, n: int, k: int, *, tower: SubdivisionTower | None = None,
           budget: Budget | None = None, seed_cover: list | None = None,
           want_witness: bool = False) -> ComplexityReport:
    """``cc^k_n(P)``: minimum cover of ``sd^k(P^n)`` by opens where all ``rho_j`` agree up to homotopy.

    ``seed_cover`` (a cover at level ``k - 1``) is pulled back and used to
    seed the search.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if k < 0:
        raise ValueError("k must be nonnegative")
    start = time.monotonic()
    budget = budget or Budget()
    tower = tower or SubdivisionTower.build(P, n, k)
    crit = rho_criterion(tower, k, budget)
    seeds = _seed_groups(tower, k, seed_cover) if (seed_cover and k > 0) else ()
    rep, _ = cover_report("cc_k_n", crit, {"n": n, "k": k}, budget=budget, seeds=seeds,
                          want_witness=want_witness, start=start)
    return rep


def cc_inf_n(P: FinitePoset, n: int = 2, k_max: int = 2, *, budget: Budget | None = None,
             accept_stable: bool = False, cap: int | None = DEFAULT_SUBDIVISION_CAP,
             want_witness: bool = False, invariant: str = "cc_inf_n") -> ComplexityReport:
    """``min_k cc^k_n(P)`` over ``k <= k_max``.

    Certified exact when the value is 1, or when it is 2 and the projections
    on ``P^n`` are not homotopic even after realisation (so no level has a
    single passing open).  With ``accept_stable`` two consecutive exact
    equal levels are also accepted.  Otherwise ``upper_bound_at_budget``.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if k_max < 0:
        raise ValueError("k_max must be nonnegative")
    start = time.monotonic()
    budget = budget or Budget()
    tower = SubdivisionTower.build(P, n, 0, cap)
    per_k = []
    best = None
    prev_cover = None
    floor = 2 if _no_single_open(tower, n) else 1
    notes = []
    for k in range(k_max + 1):
        tower.extend_to(k)
        rep = cc_k_n(P, n, k, tower=tower, budget=budget, seed_cover=prev_cover,
                     want_witness=want_witness)
        per_k.append(rep)
        if rep.value is not UNKNOWN and rep.value != INFINITY:
            if best is None or best.value is UNKNOWN or rep.value < best.value:
                best = rep
            prev_cover = rep.cover
        if best is not None and best.value is not UNKNOWN and best.value <= floor:
            if k < k_max:
                notes.append(f"levels above {k} skipped: the value meets the lower bound {floor}")
            break
    if best is None:
        best = per_k[-1]
    certified = UPPER_BOUND
    value = best.value
    if value == 1:
        certified = EXACT
    elif value == 2 and floor == 2:
        certified = EXACT
        notes.append("lower bound 2: the projections of P^n are not homotopic after realisation")
    elif accept_stable and len(per_k) >= 2:
        a, b = per_k[-2], per_k[-1]
        if a.exact and b.exact and a.value == b.value == value:
            certified = EXACT
            notes.append("accepted by the two-level stabilisation rule")
    if value == INFINITY and best.exact:
        certified = EXACT
    out = ComplexityReport(invariant, value, certified, list(best.cover),
                           {"n": n, "k": best.params.get("k"), "k_max": k_max},
                           witnesses=best.witnesses, strategy=f"levels 0..{len(per_k) - 1}; best at k={best.params.get('k')}",
                           lower_bound=2 if certified == EXACT and value == 2 else None,
                           per_k=per_k, notes=notes)
    out.elapsed_ms = (time.monotonic() - start) * 1000
    return out


def _no_single_open(tower: SubdivisionTower, n: int) -> bool:
    base = tower.base
    coords = [tower.rho_values(0, j) for j in range(1, n + 1)]
    return any(continuous_obstruction(base, tower.P, coords[0], coords[j]) for j in range(1, n))
