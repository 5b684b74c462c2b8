"""Simplicial maps, contiguity, and the passage between complexes and finite spaces.

``K_functor`` sends a monotone map to the same vertex map between order
complexes; ``X_functor`` sends a simplicial map to ``sigma -> phi(sigma)``
between face posets.  Homotopic monotone maps go to maps in one contiguity
class and vice versa, which is what lets ``SC_n`` of a complex be computed
as ``cc^inf_n`` of its face poset.
"""

from __future__ import annotations

from collections import deque
from typing import Iterator

from .complex import SimplicialComplex, face_poset, order_complex
from .complexity import Budget, ComplexityReport
from .errors import BudgetExceeded, DomainMismatch, UNKNOWN
from .poset import FinitePoset, MonotoneMap, mask_of
from .subdivision import DEFAULT_SUBDIVISION_CAP, cc_inf_n

DEFAULT_CONTIGUITY_BUDGET = 200_000


class SimplicialMap:
    """A vertex map sending every simplex of ``domain`` onto a simplex of ``codomain``."""

    __slots__ = ("domain", "codomain", "assignment")

    def __init__(self, domain: SimplicialComplex, codomain: SimplicialComplex, assignment, *, check=True):
        self.domain = domain
        self.codomain = codomain
        self.assignment = tuple(assignment)
        if check:
            if len(self.assignment) != len(domain.vertices):
                raise ValueError("assignment must give one vertex per domain vertex")
            for f in domain.facets:
                if not codomain.is_simplex(self.assignment[v] for v in f):
                    raise ValueError(f"facet {f} is not sent to a simplex")

    def __call__(self, v: int) -> int:
        return self.assignment[v]

    def image(self, simplex) -> tuple:
        return tuple(sorted({self.assignment[v] for v in simplex}))

    def then(self, other: "SimplicialMap") -> "SimplicialMap":
        """``other . self``."""
        if self.codomain != other.domain:
            raise DomainMismatch("maps are not composable")
        return SimplicialMap(self.domain, other.codomain,
                             [other.assignment[v] for v in self.assignment], check=False)

    def __eq__(self, other):
        return (isinstance(other, SimplicialMap) and self.assignment == other.assignment
                and self.domain == other.domain and self.codomain == other.codomain)

    def __hash__(self):
        return hash(self.assignment)

    def __repr__(self):
        return "SimplicialMap(" + ", ".join(
            f"{self.domain.vertices[v]}->{self.codomain.vertices[w]}"
            for v, w in enumerate(self.assignment)) + ")"

    @classmethod
    def identity(cls, K: SimplicialComplex):
        return cls(K, K, range(len(K.vertices)), check=False)

    @classmethod
    def constant(cls, K: SimplicialComplex, L: SimplicialComplex, w: int):
        return cls(K, L, [w] * len(K.vertices), check=False)


def _pair(phi: SimplicialMap, psi: SimplicialMap):
    if phi.domain != psi.domain or phi.codomain != psi.codomain:
        raise DomainMismatch("maps must share domain and codomain")


def contiguous_one_step(phi: SimplicialMap, psi: SimplicialMap) -> bool:
    """``phi(sigma) | psi(sigma)`` is a simplex for every facet ``sigma``."""
    _pair(phi, psi)
    L = phi.codomain
    a, b = phi.assignment, psi.assignment
    for f in phi.domain.facets:
        if not L.is_simplex_mask(mask_of([a[v] for v in f] + [b[v] for v in f])):
            return False
    return True


def contiguous_neighbors(phi: SimplicialMap) -> Iterator[SimplicialMap]:
    """All maps one contiguity step from ``phi``, in lexicographic order of assignments."""
    K, L = phi.domain, phi.codomain
    nv = len(K.vertices)
    base = [mask_of(phi.assignment[v] for v in f) for f in K.facets]
    base_of = {f: m for f, m in zip(K.facets, base)}
    partial_facets = [[] for _ in range(nv)]
    for f in K.facets:
        for v in f:
            partial_facets[v].append(f)
    targets = range(len(L.vertices))
    vals = [0] * nv
    is_simplex = L.is_simplex_mask

    def ok(v):
        for f in partial_facets[v]:
            m = base_of[f]
            for u in f:
                if u > v:
                    break
                m |= 1 << vals[u]
            if not is_simplex(m):
                return False
        return True

    def rec(v):
        if v == nv:
            yield SimplicialMap(K, L, vals, check=False)
            return
        for w in targets:
            vals[v] = w
            if ok(v):
                yield from rec(v + 1)

    yield from rec(0)


def same_contiguity_class(phi: SimplicialMap, psi: SimplicialMap, budget: int = DEFAULT_CONTIGUITY_BUDGET):
    """Breadth-first search over contiguity steps.  True / False / UNKNOWN."""
    _pair(phi, psi)
    if phi.assignment == psi.assignment:
        return True
    seen = {phi.assignment}
    queue = deque([phi])
    visited = 0
    while queue:
        cur = queue.popleft()
        for nb in contiguous_neighbors(cur):
            if nb.assignment in seen:
                continue
            if nb.assignment == psi.assignment:
                return True
            seen.add(nb.assignment)
            visited += 1
            if visited > budget:
                return UNKNOWN
            queue.append(nb)
    return False


def simplicial_maps(K: SimplicialComplex, L: SimplicialComplex) -> Iterator[SimplicialMap]:
    """Every simplicial map ``K -> L`` (backtracking over vertices)."""
    nv = len(K.vertices)
    facets_with = [[] for _ in range(nv)]
    for f in K.facets:
        for v in f:
            facets_with[v].append(f)
    vals = [0] * nv

    def rec(v):
        if v == nv:
            yield SimplicialMap(K, L, vals, check=False)
            return
        for w in range(len(L.vertices)):
            vals[v] = w
            good = True
            for f in facets_with[v]:
                m = 0
                for u in f:
                    if u > v:
                        break
                    m |= 1 << vals[u]
                if not L.is_simplex_mask(m):
                    good = False
                    break
            if good:
                yield from rec(v + 1)

    yield from rec(0)


# -- functors between complexes and finite spaces ----------------------------

def K_functor(f: MonotoneMap, domain: SimplicialComplex | None = None,
              codomain: SimplicialComplex | None = None) -> SimplicialMap:
    """The same vertex map between order complexes (chains go to chains)."""
    K = domain or order_complex(f.domain)
    L = codomain or order_complex(f.codomain)
    return SimplicialMap(K, L, f.assignment, check=False)


def X_functor(phi: SimplicialMap, domain: FinitePoset | None = None,
              codomain: FinitePoset | None = None) -> MonotoneMap:
    """``sigma -> phi(sigma)`` between face posets."""
    XK = domain or face_poset(phi.domain)
    XL = codomain or face_poset(phi.codomain)
    return MonotoneMap(XK, XL, [XL.key_index(phi.image(s)) for s in XK.keys], check=False)


# -- simplicial complexity through finite spaces --------------------------------

def sc_n_of_order_complex(P: FinitePoset, n: int = 2, k_max: int = 2, *, budget: Budget | None = None,
                          accept_stable: bool = False, cap: int | None = DEFAULT_SUBDIVISION_CAP,
                          want_witness: bool = False) -> ComplexityReport:
    """``SC_n`` of the order complex of ``P``, computed as ``cc^inf_n(P)``."""
    rep = cc_inf_n(P, n, k_max, budget=budget, accept_stable=accept_stable, cap=cap,
                   want_witness=want_witness, invariant="sc_n")
    rep.notes.append("SC_n(K(P)) = cc^inf_n(P)")
    return rep


def sc_n_of_complex(K: SimplicialComplex, n: int = 2, k_max: int = 2, *, budget: Budget | None = None,
                    accept_stable: bool = False, cap: int | None = DEFAULT_SUBDIVISION_CAP,
                    want_witness: bool = False) -> ComplexityReport:
    """``SC_n(K)`` as ``cc^inf_n`` of the face poset of ``K``.

    The order complex of the face poset is ``sd(K)``, whose realisation is
    homeomorphic to that of ``K``.
    """
    rep = cc_inf_n(face_poset(K), n, k_max, budget=budget, accept_stable=accept_stable, cap=cap,
                   want_witness=want_witness, invariant="sc_n")
    rep.notes.append("SC_n(K) = cc^inf_n(X(K)) since K(X(K)) = sd(K)")
    return rep
