"""``cat``, ``CC_{n,m}``, ``CC'_{n,m}`` and ``CC_n`` as minimum covers.

Each invariant pairs an ambient space with a hereditary test on its opens:

=============  ===========  =============================================
invariant      ambient      an open ``Q`` passes when
=============  ===========  =============================================
``cat``        ``P``        the inclusion ``Q -> P`` is null-homotopic
``cc_nm``      ``P^n``      ``q_{n,m}`` (or ``q'_{n,m}``) has a section
``cc_n``       ``P^n``      the projections restricted to ``Q`` are homotopic
``cc_k_n``     ``sd^k P^n`` the maps ``rho_j`` restricted to ``Q`` are homotopic
=============  ===========  =============================================

``cc_n`` never sweeps ``m``.  A section of ``q'_{n,m}`` over ``Q`` for some
``m`` is exactly a chain of homotopies ``pi_1 ~ pi_2 ~ ... ~ pi_n`` on
``Q`` (slice a homotopy into its zigzag of frames and back), so the limit
over ``m`` is the homotopy test.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Sequence

from .cover import CachedTest, CoverSearch, maximal_groups, minimum_cover, _down_of
from .errors import UNKNOWN, tri_and
from .homotopy import (DEFAULT_CSP_BUDGET, DEFAULT_NODE_BUDGET, beat_point_removals,
                       contractible_in, decide_homotopy)
from .poset import DownSet, FinitePoset, bits, connected_components, power
from .sections import (LINEAR, VARIANTS, WEDGE, section_exists_bounded,
                       section_from_homotopies)

EXACT = "exact"
UPPER_BOUND = "upper_bound_at_budget"
INFINITY = math.inf


@dataclass
class Budget:
    """Search limits shared by one computation."""

    nodes: int = DEFAULT_NODE_BUDGET
    csp: int = DEFAULT_CSP_BUDGET
    section: int = 20_000
    seconds: float | None = None
    cover: int = 1_000_000

    def deadline(self, start: float) -> float | None:
        return None if self.seconds is None else start + self.seconds


# -- criteria ---------------------------------------------------------------

class Criterion:
    """A hereditary test on down-closed masks of ``ambient``."""

    name = "criterion"
    ambient: FinitePoset

    def __call__(self, mask: int):
        raise NotImplementedError

    def witness(self, mask: int):
        return None


class ProjectionCriterion(Criterion):
    """Maps ``coords[j] : ambient -> P`` pairwise homotopic on the open."""

    name = "limit"

    def __init__(self, ambient: FinitePoset, P: FinitePoset, coords: Sequence[Sequence[int]],
                 budget: Budget | None = None):
        self.ambient = ambient
        self.P = P
        self.coords = [tuple(c) for c in coords]
        self.budget = budget or Budget()
        self._component = None

    def _same_component(self, x) -> bool:
        if self._component is None:
            self._component = [0] * len(self.P)
            for i, comp in enumerate(connected_components(self.P)):
                for v in comp:
                    self._component[v] = i
        first = self._component[self.coords[0][x]]
        return all(self._component[c[x]] == first for c in self.coords)

    def base(self, x):
        return tuple(c[x] for c in self.coords)

    def _pairs(self, mask, want_witness):
        sub, members = self.ambient.open_subspace(mask)
        answer = True
        found = []
        for j in range(len(self.coords) - 1):
            f = [self.coords[j][x] for x in members]
            g = [self.coords[j + 1][x] for x in members]
            if f == g:
                found.append([tuple(f)])
                continue
            r, w = decide_homotopy(sub, self.P, f, g, budget=self.budget.nodes,
                                   csp_budget=self.budget.csp, want_witness=want_witness)
            answer = tri_and(answer, r)
            if answer is False:
                return False, None
            found.append(w.frames if w is not None else None)
        return answer, found

    def __call__(self, mask: int):
        if mask == 0:
            return True
        top = mask.bit_length() - 1
        if self.ambient.down[top] == mask:
            # an open with a maximum is contractible: every map on it is
            # homotopic to the constant at its value on the top
            return self._same_component(top)
        # the core of an open is a deformation retract of it, so testing the
        # restrictions to the core decides the question
        cmask, _ = beat_point_removals(self.ambient, mask)
        C, members = self.ambient.induced(cmask)
        answer = True
        for j in range(len(self.coords) - 1):
            f = [self.coords[j][x] for x in members]
            g = [self.coords[j + 1][x] for x in members]
            if f == g:
                continue
            r, _ = decide_homotopy(C, self.P, f, g, budget=self.budget.nodes,
                                   csp_budget=self.budget.csp)
            answer = tri_and(answer, r)
            if answer is False:
                return False
        return answer

    def witness(self, mask: int):
        """Linear section over the open built from the homotopies."""
        if mask == 0:
            return None
        answer, frames = self._pairs(mask, True)
        if answer is not True:
            return None
        Q = DownSet(self.ambient, mask)
        return section_from_homotopies(Q, self.P, len(self.coords), frames, base=self.base)


class BoundedSectionCriterion(Criterion):
    """A section of ``q_{n,m}`` / ``q'_{n,m}`` over the open."""

    def __init__(self, ambient: FinitePoset, P: FinitePoset, n: int, m: int, variant: str,
                 budget: Budget | None = None, base=None):
        if variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}")
        self.ambient = ambient
        self.P = P
        self.n, self.m, self.variant = n, m, variant
        self.budget = budget or Budget()
        self.base = base
        self.name = f"bounded({m}, {variant})"

    def __call__(self, mask: int):
        if mask == 0:
            return True
        return section_exists_bounded(DownSet(self.ambient, mask), self.P, self.n, self.m,
                                      self.variant, base=self.base, budget=self.budget.section)

    def witness(self, mask: int):
        if mask == 0:
            return None
        ans, w = section_exists_bounded(DownSet(self.ambient, mask), self.P, self.n, self.m,
                                        self.variant, base=self.base, budget=self.budget.section,
                                        want_witness=True)
        return w if ans is True else None


class ContractibleCriterion(Criterion):
    """The inclusion of the open into the ambient space is null-homotopic."""

    name = "contractible_in"

    def __init__(self, ambient: FinitePoset, budget: Budget | None = None):
        self.ambient = ambient
        self.budget = budget or Budget()

    def __call__(self, mask: int):
        return contractible_in(DownSet(self.ambient, mask), budget=self.budget.nodes,
                               csp_budget=self.budget.csp)


def projection_coords(Pn: FinitePoset, n: int) -> list[tuple]:
    return [tuple(key[j] for key in Pn.keys) for j in range(n)]


def limit_criterion(P: FinitePoset, n: int, Pn: FinitePoset | None = None,
                    budget: Budget | None = None) -> ProjectionCriterion:
    Pn = Pn if Pn is not None else power(P, n)
    return ProjectionCriterion(Pn, P, projection_coords(Pn, n), budget)


# -- reports ----------------------------------------------------------------

@dataclass
class ComplexityReport:
    """Value of an invariant with its certification and witness cover.

    ``value`` is a positive int, ``math.inf`` or UNKNOWN.  With certified
    ``upper_bound_at_budget`` the value is achieved by ``cover`` but may not
    be optimal.
    """

    invariant: str
    value: object
    certified: str
    cover: list = field(default_factory=list)
    params: dict = field(default_factory=dict)
    witnesses: list | None = None
    elapsed_ms: float = 0.0
    strategy: str = ""
    lower_bound: int | None = None
    per_k: list | None = None
    notes: list = field(default_factory=list)

    @property
    def exact(self) -> bool:
        return self.certified == EXACT

    def to_json(self, timing: bool = True) -> dict:
        if self.value is UNKNOWN:
            value = "unknown"
        elif self.value == INFINITY:
            value = "infinity"
        else:
            value = self.value
        out = {"invariant": self.invariant}
        for key in ("n", "m", "k", "k_max", "variant"):
            if self.params.get(key) is not None:
                out[key] = self.params[key]
        out["value"] = value
        out["certified"] = self.certified
        out["cover"] = [U.labels() for U in self.cover]
        if self.witnesses is not None:
            out["witnesses"] = [w.to_json() if w is not None else None for w in self.witnesses]
        out["strategy"] = self.strategy
        if self.lower_bound is not None:
            out["lower_bound"] = self.lower_bound
        if self.per_k is not None:
            out["per_k"] = [{"k": r.params.get("k"), "value": _plain(r.value), "certified": r.certified}
                            for r in self.per_k]
        if self.notes:
            out["notes"] = list(self.notes)
        if timing:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out

    def __str__(self):
        v = _plain(self.value)
        return f"{self.invariant} = {v} ({self.certified}, {len(self.cover)} opens, {self.strategy})"


def _plain(v):
    if v is UNKNOWN:
        return "unknown"
    if v == INFINITY:
        return "infinity"
    return v


def cover_report(invariant: str, criterion: Criterion, params: dict, *, budget: Budget | None = None,
                 seeds: Sequence[int] = (), want_witness: bool = False,
                 start: float | None = None) -> tuple[ComplexityReport, CoverSearch]:
    """Minimum cover of the criterion's ambient space by passing opens."""
    budget = budget or Budget()
    start = time.monotonic() if start is None else start
    ambient = criterion.ambient
    test = CachedTest(ambient, criterion, budget.deadline(start))
    search = minimum_cover(ambient, test, seeds=seeds, node_budget=budget.cover)
    maxima = search.maxima
    notes = []
    if search.failing:
        rep = ComplexityReport(invariant, INFINITY, EXACT if search.exact else UPPER_BOUND, [],
                               params, strategy=search.strategy)
        rep.notes.append("minimal open of " + ", ".join(ambient.labels[maxima[i]] for i in search.failing)
                         + " fails the test")
    elif search.undecided and not search.groups:
        rep = ComplexityReport(invariant, UNKNOWN, UPPER_BOUND, [], params, strategy=search.strategy)
        rep.notes.append("some minimal opens were undecided within budget")
    else:
        cover = [DownSet(ambient, _down_of(ambient, maxima, g)) for g in search.groups]
        rep = ComplexityReport(invariant, len(cover), EXACT if search.exact else UPPER_BOUND, cover,
                               params, strategy=search.strategy, lower_bound=search.lower_bound)
        if search.undecided:
            rep.value = UNKNOWN
            rep.notes.append("some minimal opens were undecided within budget")
        if want_witness:
            rep.witnesses = [criterion.witness(U.mask) for U in cover]
    if test.unknowns:
        rep.notes.append(f"{test.unknowns} test(s) undecided within budget, counted as failing")
    rep.elapsed_ms = (time.monotonic() - start) * 1000
    return rep, search


def maximal_sectionable_opens(criterion: Criterion) -> tuple[list[DownSet], bool]:
    """Inclusion-maximal opens passing ``criterion`` and whether the list is complete."""
    ambient = criterion.ambient
    search = maximal_groups(ambient, CachedTest(ambient, criterion))
    if search.failing:
        return [], search.complete
    opens = [DownSet(ambient, _down_of(ambient, search.maxima, g)) for g in search.groups]
    return opens, search.complete


# -- public invariants --------------------------------------------------------

def _check_n(n):
    if n < 2:
        raise ValueError("n must be at least 2")


def sectionable_limit(Q: DownSet, P: FinitePoset, n: int | None = None, budget: Budget | None = None):
    """Are the projections ``pi_1, ..., pi_n`` restricted to ``Q`` homotopic?

    ``Q`` lives in a power ``P^n`` (tuple keys).  True / False / UNKNOWN.
    """
    n = n if n is not None else len(Q.ambient.keys[0])
    crit = ProjectionCriterion(Q.ambient, P, projection_coords(Q.ambient, n), budget)
    return crit(Q.mask)


def cc_nm(P: FinitePoset, n: int, m: int, variant: str = WEDGE, *, budget: Budget | None = None,
          want_witness: bool = False) -> ComplexityReport:
    """``cc_{n,m}(P)`` (wedge) or ``cc'_{n,m}(P)`` (linear)."""
    _check_n(n)
    if m < 0:
        raise ValueError("m must be nonnegative")
    start = time.monotonic()
    budget = budget or Budget()
    Pn = power(P, n)
    crit = BoundedSectionCriterion(Pn, P, n, m, variant, budget)
    name = "cc_nm" if variant == WEDGE else "cc_nm_linear"
    rep, _ = cover_report(name, crit, {"n": n, "m": m, "variant": variant}, budget=budget,
                          want_witness=want_witness, start=start)
    return rep


def cc_n(P: FinitePoset, n: int = 2, *, budget: Budget | None = None,
         want_witness: bool = False) -> ComplexityReport:
    """``cc_n(P)``, the limit over ``m``, via the projection homotopy test."""
    _check_n(n)
    start = time.monotonic()
    budget = budget or Budget()
    crit = limit_criterion(P, n, budget=budget)
    rep, search = cover_report("cc_n", crit, {"n": n}, budget=budget,
                               want_witness=want_witness, start=start)
    if rep.value == INFINITY and _connected(P):
        raise AssertionError("a minimal open of P^n failed the limit test on connected P")
    return rep


def _connected(P):
    from .poset import is_connected
    return is_connected(P)


def cat(P: FinitePoset, *, budget: Budget | None = None) -> ComplexityReport:
    """Fewest opens of ``P`` whose inclusions are null-homotopic."""
    start = time.monotonic()
    budget = budget or Budget()
    rep, _ = cover_report("cat", ContractibleCriterion(P, budget), {}, budget=budget, start=start)
    return rep
