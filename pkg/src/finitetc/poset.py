"""Finite posets as finite T0 spaces.

Opens are down-sets: the minimal open neighbourhood of ``x`` is
``U_x = {y : y <= x}``.  Relations are stored as Python int bitmasks, one
``down`` and one ``up`` mask per element, which keeps every poset operation
used by the search code to a handful of machine-word operations.
"""

from __future__ import annotations

import itertools
import os
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import CycleDetected, DuplicateLabel, IndexOutOfRange, SizeLimitExceeded

DEFAULT_SIZE_CAP = 100_000


def size_cap() -> int:
    """Global element cap for constructed posets (env ``FINITETC_SIZE_CAP``)."""
    value = os.environ.get("FINITETC_SIZE_CAP")
    return int(value) if value else DEFAULT_SIZE_CAP


def check_size(count: int, cap: int | None = None, what: str = "poset") -> None:
    cap = size_cap() if cap is None else cap
    if count > cap:
        raise SizeLimitExceeded(f"{what} would have {count} elements (cap {cap})")


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


class FinitePoset:
    """A finite partial order on ``0..n-1``.

    Parameters
    ----------
    labels : sequence of str
        Display names, unique.
    hasse_edges : iterable of (lower, upper) index pairs
        Any generating set of strict relations; the transitive reduction is
        recomputed unless ``reduced=True`` promises the edges already are the
        covering relation.
    keys : sequence, optional
        Structured names (tuples for products, chains for subdivisions).
    """

    __slots__ = ("labels", "keys", "down", "up", "lower_covers", "upper_covers",
                 "_index", "_key_index", "_sorted")

    def __init__(self, labels: Sequence[str], hasse_edges=(), keys=None, *, reduced=False):
        labels = [str(s) for s in labels]
        n = len(labels)
        if len(set(labels)) != n:
            seen = set()
            dup = next(s for s in labels if s in seen or seen.add(s))
            raise DuplicateLabel(f"duplicate label {dup!r}")
        preds = [0] * n
        for a, b in hasse_edges:
            if not (0 <= a < n and 0 <= b < n):
                raise IndexOutOfRange(f"edge ({a}, {b}) out of range for {n} elements")
            if a != b:
                preds[b] |= 1 << a
        order = _topological_order(preds)
        down = [0] * n
        for x in order:
            m = 1 << x
            for y in bits(preds[x]):
                m |= down[y]
            down[x] = m
        up = [0] * n
        for x in range(n):
            for y in bits(down[x]):
                up[y] |= 1 << x
        if reduced:
            lower = preds
        else:
            lower = []
            for x in range(n):
                strict = down[x] & ~(1 << x)
                shadow = 0
                for z in bits(strict):
                    shadow |= down[z] & ~(1 << z)
                lower.append(strict & ~shadow)
        upper = [0] * n
        for x in range(n):
            for y in bits(lower[x]):
                upper[y] |= 1 << x
        self.labels = tuple(labels)
        self.keys = tuple(keys) if keys is not None else tuple(range(n))
        self.down = tuple(down)
        self.up = tuple(up)
        self.lower_covers = tuple(lower)
        self.upper_covers = tuple(upper)
        self._index = None
        self._key_index = None
        self._sorted = None

    # -- basic queries -------------------------------------------------
    def __len__(self):
        return len(self.labels)

    @property
    def n_elements(self) -> int:
        return len(self.labels)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.labels)) - 1

    def __repr__(self):
        return f"FinitePoset({len(self)} elements, {len(self.hasse_edges)} Hasse edges)"

    def __eq__(self, other):
        return (isinstance(other, FinitePoset) and self.labels == other.labels
                and self.down == other.down)

    def __hash__(self):
        return hash((self.labels, self.down))

    def index(self, label) -> int:
        if self._index is None:
            self._index = {s: i for i, s in enumerate(self.labels)}
        try:
            return self._index[str(label)]
        except KeyError:
            raise IndexOutOfRange(f"no element labelled {label!r}") from None

    def key_index(self, key) -> int:
        if self._key_index is None:
            self._key_index = {k: i for i, k in enumerate(self.keys)}
        try:
            return self._key_index[key]
        except KeyError:
            raise IndexOutOfRange(f"no element with key {key!r}") from None

    def check_index(self, x: int) -> None:
        if not 0 <= x < len(self.labels):
            raise IndexOutOfRange(f"element {x} out of range for {len(self)} elements")

    def leq(self, x: int, y: int) -> bool:
        return (self.down[y] >> x) & 1 == 1

    def lt(self, x: int, y: int) -> bool:
        return x != y and (self.down[y] >> x) & 1 == 1

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    @property
    def hasse_edges(self) -> list[tuple[int, int]]:
        return [(y, x) for x in range(len(self)) for y in bits(self.lower_covers[x])]

    def maximal_elements(self, mask: int | None = None) -> list[int]:
        """Elements of ``mask`` (default: all) with nothing above them inside ``mask``."""
        mask = self.full_mask if mask is None else mask
        return [x for x in bits(mask) if self.up[x] & mask == 1 << x]

    def minimal_elements(self, mask: int | None = None) -> list[int]:
        mask = self.full_mask if mask is None else mask
        return [x for x in bits(mask) if self.down[x] & mask == 1 << x]

    def down_closure(self, mask: int) -> int:
        out = 0
        for x in bits(mask):
            out |= self.down[x]
        return out

    def up_closure(self, mask: int) -> int:
        out = 0
        for x in bits(mask):
            out |= self.up[x]
        return out

    def is_down_closed(self, mask: int) -> bool:
        return self.down_closure(mask) == mask

    def minimal_open(self, x: int) -> "DownSet":
        self.check_index(x)
        return DownSet(self, self.down[x])

    def height(self) -> int:
        """Length (number of edges) of the longest chain."""
        best = [0] * len(self)
        for x in _topological_order(list(self.lower_covers)):
            best[x] = max((best[y] + 1 for y in bits(self.lower_covers[x])), default=0)
        return max(best, default=0)

    def index_is_linear_extension(self) -> bool:
        """True when ``x < y`` in the order implies ``x < y`` as indices."""
        if self._sorted is None:
            self._sorted = all(lc >> x == 0 for x, lc in enumerate(self.lower_covers))
        return self._sorted

    def linear_extension(self) -> list[int]:
        return _topological_order(list(self.lower_covers))

    def induced(self, mask: int) -> tuple["FinitePoset", list[int]]:
        """Subposet on ``mask``; returns it with the list new index -> old index."""
        members = list(bits(mask))
        pos = {old: new for new, old in enumerate(members)}
        edges = []
        for new, old in enumerate(members):
            strict = self.down[old] & mask & ~(1 << old)
            shadow = 0
            for z in bits(strict):
                shadow |= self.down[z] & ~(1 << z)
            for y in bits(strict & ~shadow):
                edges.append((pos[y], new))
        sub = FinitePoset([self.labels[i] for i in members], edges,
                          keys=[self.keys[i] for i in members], reduced=True)
        return sub, members

    def open_subspace(self, mask: int) -> tuple["FinitePoset", list[int]]:
        """Like ``induced`` for a down-closed mask, where covers are inherited as is."""
        members = list(bits(mask))
        pos = {old: new for new, old in enumerate(members)}
        edges = [(pos[y], new) for new, old in enumerate(members)
                 for y in bits(self.lower_covers[old])]
        sub = FinitePoset([self.labels[i] for i in members], edges,
                          keys=[self.keys[i] for i in members], reduced=True)
        return sub, members

    def dual(self) -> "FinitePoset":
        return FinitePoset(self.labels, [(b, a) for a, b in self.hasse_edges],
                           keys=self.keys, reduced=True)


def _topological_order(preds: list[int]) -> list[int]:
    n = len(preds)
    indeg = [bin(p).count("1") for p in preds]
    succs = [[] for _ in range(n)]
    for x, p in enumerate(preds):
        for y in bits(p):
            succs[y].append(x)
    queue = deque(x for x in range(n) if indeg[x] == 0)
    order = []
    while queue:
        x = queue.popleft()
        order.append(x)
        for z in succs[x]:
            indeg[z] -= 1
            if indeg[z] == 0:
                queue.append(z)
    if len(order) != n:
        raise CycleDetected("relations contain a directed cycle")
    return order


@dataclass(frozen=True)
class DownSet:
    """An open subset of a finite space (a down-closed element mask)."""

    ambient: FinitePoset
    mask: int

    def __post_init__(self):
        if self.mask & ~self.ambient.full_mask:
            raise IndexOutOfRange("mask has bits outside the ambient poset")
        if not self.ambient.is_down_closed(self.mask):
            raise ValueError("mask is not down-closed")

    @classmethod
    def generated_by(cls, ambient: FinitePoset, elements: Iterable[int]) -> "DownSet":
        return cls(ambient, ambient.down_closure(mask_of(elements)))

    @property
    def members(self) -> list[int]:
        return list(bits(self.mask))

    def labels(self) -> list[str]:
        return [self.ambient.labels[i] for i in bits(self.mask)]

    def __contains__(self, x: int) -> bool:
        return (self.mask >> x) & 1 == 1

    def __iter__(self):
        return bits(self.mask)

    def __len__(self):
        return bin(self.mask).count("1")

    def __or__(self, other: "DownSet") -> "DownSet":
        return DownSet(self.ambient, self.mask | other.mask)

    def __and__(self, other: "DownSet") -> "DownSet":
        return DownSet(self.ambient, self.mask & other.mask)

    def __le__(self, other: "DownSet") -> bool:
        return self.mask & ~other.mask == 0

    def maximal_elements(self) -> list[int]:
        return self.ambient.maximal_elements(self.mask)

    def __repr__(self):
        return "DownSet{" + ", ".join(self.labels()) + "}"


class MonotoneMap:
    """An order-preserving map, i.e. a continuous map of finite spaces."""

    __slots__ = ("domain", "codomain", "assignment")

    def __init__(self, domain: FinitePoset, codomain: FinitePoset, assignment, *, check=True):
        self.domain = domain
        self.codomain = codomain
        self.assignment = tuple(assignment)
        if check:
            if len(self.assignment) != len(domain):
                raise ValueError("assignment length differs from domain size")
            for v in self.assignment:
                codomain.check_index(v)
            bad = first_violation(domain, codomain, self.assignment)
            if bad is not None:
                y, x = bad
                raise ValueError(
                    f"not monotone: {domain.labels[y]} <= {domain.labels[x]} but "
                    f"{codomain.labels[self.assignment[y]]} !<= {codomain.labels[self.assignment[x]]}")

    def __call__(self, x: int) -> int:
        return self.assignment[x]

    def __eq__(self, other):
        return (isinstance(other, MonotoneMap) and self.assignment == other.assignment
                and self.domain == other.domain and self.codomain == other.codomain)

    def __hash__(self):
        return hash(self.assignment)

    def __le__(self, other: "MonotoneMap") -> bool:
        leq = self.codomain.leq
        return all(leq(a, b) for a, b in zip(self.assignment, other.assignment))

    def __repr__(self):
        pairs = ", ".join(f"{self.domain.labels[i]}->{self.codomain.labels[v]}"
                          for i, v in enumerate(self.assignment))
        return f"MonotoneMap({pairs})"

    def then(self, other: "MonotoneMap") -> "MonotoneMap":
        """``other ∘ self``."""
        return MonotoneMap(self.domain, other.codomain,
                           [other.assignment[v] for v in self.assignment], check=False)

    def restrict(self, mask: int) -> "MonotoneMap":
        sub, members = self.domain.induced(mask)
        return MonotoneMap(sub, self.codomain, [self.assignment[i] for i in members], check=False)

    def is_surjective(self) -> bool:
        return set(self.assignment) == set(range(len(self.codomain)))

    @classmethod
    def identity(cls, P: FinitePoset) -> "MonotoneMap":
        return cls(P, P, range(len(P)), check=False)

    @classmethod
    def constant(cls, domain: FinitePoset, codomain: FinitePoset, value: int) -> "MonotoneMap":
        codomain.check_index(value)
        return cls(domain, codomain, [value] * len(domain), check=False)


def first_violation(domain: FinitePoset, codomain: FinitePoset, values) -> tuple[int, int] | None:
    down = codomain.down
    for x in range(len(domain)):
        fx = values[x]
        for y in bits(domain.lower_covers[x]):
            if not (down[fx] >> values[y]) & 1:
                return (y, x)
    return None


def is_monotone(domain: FinitePoset, codomain: FinitePoset, values) -> bool:
    return first_violation(domain, codomain, values) is None


# -- constructors ------------------------------------------------------

def build_poset(labels: Sequence[str], hasse_edges: Iterable[tuple[str, str]] = ()) -> FinitePoset:
    """Poset from labels and ``(lower, upper)`` label pairs (redundant pairs allowed)."""
    labels = [str(s) for s in labels]
    if len(set(labels)) != len(labels):
        raise DuplicateLabel("labels must be unique")
    index = {s: i for i, s in enumerate(labels)}
    edges = []
    for a, b in hasse_edges:
        if str(a) not in index or str(b) not in index:
            raise IndexOutOfRange(f"edge ({a}, {b}) names an unknown element")
        edges.append((index[str(a)], index[str(b)]))
    check_size(len(labels))
    return FinitePoset(labels, edges)


def minimal_open(P: FinitePoset, x: int) -> DownSet:
    return P.minimal_open(x)


def chain(k: int) -> FinitePoset:
    """Totally ordered ``0 < 1 < ... < k-1``."""
    return FinitePoset([str(i) for i in range(k)], [(i, i + 1) for i in range(k - 1)], reduced=True)


def antichain(k: int) -> FinitePoset:
    return FinitePoset([str(i) for i in range(k)])


def sphere(m: int) -> FinitePoset:
    """Minimal finite model of the m-sphere: two incomparable points per level.

    Element ``2k`` is ``e_+^k`` and ``2k+1`` is ``e_-^k``; ``e^k < e^l`` iff
    ``k < l``.
    """
    if m < 0:
        raise ValueError("sphere dimension must be nonnegative")
    labels = [f"e{k}{s}" for k in range(m + 1) for s in "+-"]
    edges = [(2 * k + a, 2 * (k + 1) + b) for k in range(m) for a in (0, 1) for b in (0, 1)]
    return FinitePoset(labels, edges, reduced=True)


def fence(m: int) -> FinitePoset:
    """``J_m``: ``0 <= 1 >= 2 <= ...`` on ``m + 1`` points."""
    if m < 0:
        raise ValueError("fence length must be nonnegative")
    edges = [(i, i + 1) if i % 2 == 0 else (i + 1, i) for i in range(m)]
    return FinitePoset([str(i) for i in range(m + 1)], edges, reduced=True)


def wedge_node(m: int, branch: int, position: int) -> int:
    """Index of node ``position_branch`` in ``J_{n,m}`` (branch 1-based, position 0 = centre)."""
    if position == 0:
        return 0
    return 1 + (branch - 1) * m + (position - 1)


def wedge_fence(n: int, m: int) -> FinitePoset:
    """``J_{n,m}``: ``n`` fences of length ``m`` glued at ``0`` (branch-major indexing)."""
    if n < 2:
        raise ValueError("wedge fence needs n >= 2 branches")
    if m < 0:
        raise ValueError("fence length must be nonnegative")
    labels = ["0"] + [f"{i}_{j}" for j in range(1, n + 1) for i in range(1, m + 1)]
    edges = []
    for j in range(1, n + 1):
        for i in range(1, m + 1):
            a, b = wedge_node(m, j, i - 1), wedge_node(m, j, i)
            edges.append((a, b) if (i - 1) % 2 == 0 else (b, a))
    return FinitePoset(labels, edges, reduced=True)


def product(P: FinitePoset, Q: FinitePoset, cap: int | None = None) -> FinitePoset:
    return power_of([P, Q], cap)


def power(P: FinitePoset, n: int, cap: int | None = None) -> FinitePoset:
    if n < 1:
        raise ValueError("power needs n >= 1")
    return power_of([P] * n, cap)


def power_of(factors: Sequence[FinitePoset], cap: int | None = None) -> FinitePoset:
    """Cartesian product with the componentwise order, tuples in lexicographic order."""
    count = 1
    for F in factors:
        count *= len(F)
    check_size(count, cap, "product")
    sizes = [len(F) for F in factors]
    strides = []
    s = 1
    for size in reversed(sizes):
        strides.append(s)
        s *= size
    strides.reverse()
    keys = list(itertools.product(*[range(k) for k in sizes]))
    labels = ["(" + ",".join(F.labels[c] for F, c in zip(factors, key)) + ")" for key in keys]
    edges = []
    for idx, key in enumerate(keys):
        for pos, (F, c) in enumerate(zip(factors, key)):
            for lower in bits(F.lower_covers[c]):
                edges.append((idx + (lower - c) * strides[pos], idx))
    return FinitePoset(labels, edges, keys=keys, reduced=True)


def projection(Pn: FinitePoset, P: FinitePoset, j: int) -> MonotoneMap:
    """Projection of a power onto coordinate ``j`` (1-based); ``Pn`` keys are index tuples."""
    return MonotoneMap(Pn, P, [key[j - 1] for key in Pn.keys], check=False)


def connected_components(P: FinitePoset, mask: int | None = None) -> list[list[int]]:
    """Components of the comparability graph (restricted to ``mask``), ascending."""
    mask = P.full_mask if mask is None else mask
    seen = 0
    comps = []
    for start in bits(mask):
        if (seen >> start) & 1:
            continue
        comp = 1 << start
        frontier = 1 << start
        while frontier:
            nxt = 0
            for x in bits(frontier):
                nxt |= (P.lower_covers[x] | P.upper_covers[x]) & mask
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        comps.append(list(bits(comp)))
    return comps


def is_connected(P: FinitePoset, mask: int | None = None) -> bool:
    return len(connected_components(P, mask)) <= 1


def disjoint_union(P: FinitePoset, Q: FinitePoset) -> FinitePoset:
    n = len(P)
    labels = list(P.labels) + [s if s not in P.labels else s + "'" for s in Q.labels]
    edges = P.hasse_edges + [(a + n, b + n) for a, b in Q.hasse_edges]
    return FinitePoset(labels, edges, reduced=True)
