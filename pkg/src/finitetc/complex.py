"""Order complexes, face posets and barycentric subdivision.

``order_complex`` (chains of a poset) and ``face_poset`` (simplices under
inclusion) go back and forth between finite spaces and simplicial
complexes; ``barycentric_subdivision(P)`` is literally their composite.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .errors import DuplicateLabel, IndexOutOfRange
from .poset import FinitePoset, MonotoneMap, bits, check_size, mask_of


class SimplicialComplex:
    """Vertices ``0..V-1`` with display labels, stored by facets.

    Facets are sorted vertex tuples; facets contained in other facets are
    dropped on construction.
    """

    __slots__ = ("vertices", "facets", "_facet_masks", "_simplices", "_simplex_masks")

    def __init__(self, vertices: Sequence[str], facets: Iterable[Iterable[int]]):
        vertices = [str(v) for v in vertices]
        if len(set(vertices)) != len(vertices):
            raise DuplicateLabel("vertex labels must be unique")
        nv = len(vertices)
        cleaned = set()
        for f in facets:
            f = tuple(sorted(set(f)))
            if not f:
                continue
            for v in f:
                if not 0 <= v < nv:
                    raise IndexOutOfRange(f"vertex {v} out of range")
            cleaned.add(f)
        masks = {f: mask_of(f) for f in cleaned}
        maximal = [f for f in cleaned
                   if not any(g != f and masks[f] & ~masks[g] == 0 for g in cleaned)]
        # vertices not mentioned by any facet are isolated points
        covered = 0
        for f in maximal:
            covered |= masks[f]
        maximal += [(v,) for v in range(nv) if not (covered >> v) & 1]
        self.vertices = tuple(vertices)
        self.facets = tuple(sorted(maximal, key=lambda f: (len(f), f)))
        self._facet_masks = tuple(mask_of(f) for f in self.facets)
        self._simplices = None
        self._simplex_masks = None

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[str]], vertices: Sequence[str] | None = None):
        """Complex from facets written with vertex labels."""
        facets = [[str(v) for v in f] for f in facets]
        if vertices is None:
            seen = []
            for f in facets:
                for v in f:
                    if v not in seen:
                        seen.append(v)
            vertices = seen
        index = {v: i for i, v in enumerate(vertices)}
        return cls(vertices, [[index[v] for v in f] for f in facets])

    def __repr__(self):
        return f"SimplicialComplex({len(self.vertices)} vertices, {len(self.facets)} facets)"

    def __eq__(self, other):
        return (isinstance(other, SimplicialComplex) and self.vertices == other.vertices
                and self.facets == other.facets)

    def __hash__(self):
        return hash((self.vertices, self.facets))

    @property
    def dimension(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def simplices(self) -> list[tuple[int, ...]]:
        """All nonempty simplices, ordered by (size, vertex tuple)."""
        if self._simplices is None:
            found = set()
            for f in self.facets:
                for r in range(1, len(f) + 1):
                    found.update(combinations(f, r))
            self._simplices = sorted(found, key=lambda s: (len(s), s))
        return self._simplices

    def is_simplex_mask(self, m: int) -> bool:
        if self._simplex_masks is None:
            self._simplex_masks = {mask_of(s) for s in self.simplices()}
        return m in self._simplex_masks

    def is_simplex(self, vs: Iterable[int]) -> bool:
        m = mask_of(vs)
        return m != 0 and self.is_simplex_mask(m)

    def facet_labels(self) -> list[list[str]]:
        return [[self.vertices[v] for v in f] for f in self.facets]


def _maximal_chains(P: FinitePoset) -> list[tuple[int, ...]]:
    out = []
    stack = [(x,) for x in reversed(P.minimal_elements())]
    while stack:
        ch = stack.pop()
        ups = list(bits(P.upper_covers[ch[-1]]))
        if not ups:
            out.append(ch)
        for y in reversed(ups):
            stack.append(ch + (y,))
    return out


def order_complex(P: FinitePoset) -> SimplicialComplex:
    """Simplices are the nonempty chains of ``P``; vertices keep ``P``'s labels."""
    return SimplicialComplex(P.labels, _maximal_chains(P))


def count_chains(P: FinitePoset) -> int:
    """Number of nonempty chains of ``P``."""
    ending = [0] * len(P)
    for x in P.linear_extension():
        ending[x] = 1 + sum(ending[y] for y in bits(P.down[x] & ~(1 << x)))
    return sum(ending)


def face_poset(K: SimplicialComplex, cap: int | None = None) -> FinitePoset:
    """Nonempty simplices of ``K`` ordered by inclusion."""
    simplices = K.simplices()
    check_size(len(simplices), cap, "face poset")
    index = {s: i for i, s in enumerate(simplices)}
    edges = []
    for i, s in enumerate(simplices):
        if len(s) > 1:
            for drop in range(len(s)):
                edges.append((index[s[:drop] + s[drop + 1:]], i))
    labels = ["{" + ",".join(K.vertices[v] for v in s) + "}" for s in simplices]
    return FinitePoset(labels, edges, keys=simplices, reduced=True)


def barycentric_subdivision(P: FinitePoset, cap: int | None = None) -> FinitePoset:
    """``sd(P)``: the face poset of the order complex (chains under inclusion)."""
    check_size(count_chains(P), cap, "barycentric subdivision")
    return face_poset(order_complex(P), cap)


def sd_complex(K: SimplicialComplex, cap: int | None = None) -> SimplicialComplex:
    return order_complex(face_poset(K, cap))


def chain_top(P: FinitePoset, members: Iterable[int]) -> int:
    members = list(members)
    m = mask_of(members)
    for x in members:
        if P.down[x] & m == m:
            return x
    raise ValueError("members do not form a chain")


def tau(P: FinitePoset, sdP: FinitePoset | None = None) -> MonotoneMap:
    """``sd(P) -> P`` sending a chain to its largest element."""
    if sdP is None:
        sdP = barycentric_subdivision(P)
    return MonotoneMap(sdP, P, [chain_top(P, key) for key in sdP.keys], check=False)


def subdivisions(P: FinitePoset, k: int, cap: int | None = None) -> list[FinitePoset]:
    """``[P, sd(P), ..., sd^k(P)]``."""
    levels = [P]
    for _ in range(k):
        levels.append(barycentric_subdivision(levels[-1], cap))
    return levels


def tau_k(P: FinitePoset, k: int, cap: int | None = None) -> MonotoneMap:
    """Composite ``sd^k(P) -> ... -> sd(P) -> P``; the identity when ``k == 0``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    levels = subdivisions(P, k, cap)
    out = MonotoneMap.identity(levels[-1])
    for i in range(k, 0, -1):
        out = out.then(tau(levels[i - 1], levels[i]))
    return out
