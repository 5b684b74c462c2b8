"""Property suites checking the structural laws on a corpus of posets.

``lemmas``       monotonicity in ``m`` for both section variants, ``cc^1 <= cc^0``,
                 agreement of the bounded minima with ``cc_n``, and transport of
                 every found section witness.
``corollaries``  ``cc_2 = 1`` iff contractible, the chain
                 ``cat <= cc_2 <= cat(P^2) <= cat^2``, ``cc_n <= cc_{n+1}``, and
                 invariance of ``cc_2`` under passing to the core.
``transfer``     homotopic monotone maps give maps in one contiguity class,
                 and maps in one contiguity class give homotopic face-poset maps.

Each property counts its checks, passes, skips (a value that came back
undecided or only as an upper bound) and violations.  A property holds
when it has no violations; ``strict`` also asks for no skips.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import networkx as nx

from .complex import SimplicialComplex, face_poset, order_complex
from .complexity import INFINITY, Budget, cat, cc_n, cc_nm
from .enumerate import all_connected_posets, all_posets, builtin_corpus, random_connected_posets
from .errors import UNKNOWN, InvalidWitness
from .formats import zoo_complex
from .homotopy import core, decide_homotopy, is_contractible, monotone_maps
from .poset import FinitePoset, MonotoneMap, power
from .sections import LINEAR, VARIANTS, WEDGE, transport_R, transport_f, transport_g
from .simplicial import K_functor, X_functor, contiguous_neighbors, simplicial_maps
from .subdivision import SubdivisionTower, cc_k_n, rho_criterion

SUITES = ("lemmas", "corollaries", "transfer")


@dataclass
class PropertyResult:
    name: str
    checked: int = 0
    passed: int = 0
    skipped: int = 0
    violations: list = field(default_factory=list)

    def record(self, ok: bool, detail: str = "") -> None:
        self.checked += 1
        if ok:
            self.passed += 1
        else:
            self.violations.append(detail)

    def skip(self, detail: str = "") -> None:
        self.skipped += 1

    @property
    def ok(self) -> bool:
        return not self.violations

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        out = f"{status} {self.name}: {self.passed}/{self.checked} passed"
        if self.skipped:
            out += f", {self.skipped} skipped"
        return out

    def to_json(self) -> dict:
        return {"property": self.name, "checked": self.checked, "passed": self.passed,
                "skipped": self.skipped, "violations": list(self.violations)}


@dataclass
class SuiteResult:
    suite: str
    properties: dict = field(default_factory=dict)

    def prop(self, name: str) -> PropertyResult:
        if name not in self.properties:
            self.properties[name] = PropertyResult(name)
        return self.properties[name]

    @property
    def ok(self) -> bool:
        return all(p.ok for p in self.properties.values())

    def strict_ok(self) -> bool:
        return self.ok and all(p.skipped == 0 for p in self.properties.values())

    def lines(self) -> list[str]:
        return [f"[{self.suite}] " + p.line() for p in self.properties.values()]

    def to_json(self) -> dict:
        return {"suite": self.suite, "ok": self.ok,
                "properties": [p.to_json() for p in self.properties.values()]}


def default_corpus(random_count: int = 0, max_size: int = 5, seed: int = 0) -> list[tuple[str, FinitePoset]]:
    """The builtin zoo corpus plus ``random_count`` random connected posets."""
    out = list(builtin_corpus())
    for i, P in enumerate(random_connected_posets(random_count, max_size, seed=seed)):
        out.append((f"random[{seed}:{i}]", P))
    return out


def _value(rep):
    """The value when it is exact, else None."""
    if rep.exact and rep.value is not UNKNOWN:
        return rep.value
    return None


# -- lemmas -------------------------------------------------------------------

def _stable_m(limit_report) -> int | None:
    """Linear parameter at which the limit witnesses already give sections.

    The homotopy witnesses of the limit cover are linear sections at their
    own ``m``; raising them by ``transport_R`` to a common multiple of 4
    gives linear sections there, and ``transport_g`` gives wedge sections at
    ``(n-1)m/2``.  So at these parameters the bounded values cannot exceed
    ``cc_n``.
    """
    ms = [w.m for w in (limit_report.witnesses or []) if w is not None]
    if len(ms) != len(limit_report.cover):
        return None
    top = max(ms, default=0)
    return max(4, -(-top // 4) * 4)


def check_transports(w, prop: PropertyResult, label: str) -> None:
    """Push one witness through every transport whose parity allows it."""
    def attempt(name, fn, src):
        try:
            out = fn(src)
            out.check()
        except InvalidWitness as exc:
            prop.record(False, f"{label}: {name} from m={src.m} ({src.variant}): {exc}")
            return None
        prop.record(True)
        return out

    up = attempt("R", transport_R, w)
    if w.variant == WEDGE:
        even = w if w.m % 2 == 0 else up
        if even is not None:
            lin = attempt("f", transport_f, even)
            if lin is not None:
                attempt("g.f", transport_g, lin)
    else:
        cur = w
        while cur is not None and cur.m % 4:
            cur = attempt("R", transport_R, cur)
        if cur is not None:
            wedge = attempt("g", transport_g, cur)
            if wedge is not None and wedge.m % 2 == 0:
                attempt("f.g", transport_f, wedge)


def verify_lemmas(corpus, *, n: int = 2, m_max: int = 3, k_check: bool = True,
                  budget: Budget | None = None) -> SuiteResult:
    res = SuiteResult("lemmas")
    mono = {v: res.prop(f"cc_nm non-increasing in m ({v})") for v in VARIANTS}
    above = res.prop("cc_nm >= cc_n")
    agree = res.prop("bounded minima agree with cc_n at the stable m")
    k_prop = res.prop("cc^1 <= cc^0")
    trans = res.prop("section witnesses survive transport")
    for name, P in corpus:
        limit = cc_n(P, n, budget=budget, want_witness=True)
        c = _value(limit)
        for w in limit.witnesses or []:
            if w is not None:
                check_transports(w, trans, f"{name} limit")
        for variant in VARIANTS:
            seq = []
            for m in range(m_max + 1):
                rep = cc_nm(P, n, m, variant, budget=budget, want_witness=True)
                seq.append(_value(rep))
                for w in rep.witnesses or []:
                    if w is not None:
                        check_transports(w, trans, f"{name} {variant} m={m}")
                v = seq[-1]
                if v is None or c is None:
                    above.skip()
                else:
                    above.record(v >= c, f"{name}: {variant} m={m} gives {v} < cc_n = {c}")
            for m in range(m_max):
                a, b = seq[m], seq[m + 1]
                if a is None or b is None:
                    mono[variant].skip()
                else:
                    mono[variant].record(b <= a, f"{name}: m={m} -> {a}, m={m + 1} -> {b}")
        ms = _stable_m(limit) if c is not None else None
        if ms is None:
            agree.skip()
        else:
            for variant, m in ((LINEAR, ms), (WEDGE, (n - 1) * ms // 2)):
                v = _value(cc_nm(P, n, m, variant, budget=budget))
                if v is None:
                    agree.skip()
                else:
                    agree.record(v == c, f"{name}: {variant} m={m} gives {v}, cc_n = {c}")
        if k_check:
            _check_level_one(name, P, n, limit, c, k_prop, budget)
    return res


def _check_level_one(name, P, n, limit, c, prop, budget, full_limit: int = 600) -> None:
    """``cc^1 <= cc^0``: pulled back cover opens must pass the level 1 test.

    Each open of the exact level 0 cover is pulled back along ``tau`` and
    handed to the level 1 homotopy test, which decides it on its own.  On
    small ambients the unseeded minimum at level 1 is also computed.
    """
    if c is None or c == INFINITY:
        prop.skip()
        return
    tower = SubdivisionTower.build(P, n, 1)
    crit = rho_criterion(tower, 1, budget)
    answers = [crit(tower.pull_back(1, U.mask)) for U in limit.cover]
    if any(a is UNKNOWN for a in answers):
        prop.skip()
    else:
        bad = [i for i, a in enumerate(answers) if a is not True]
        prop.record(not bad, f"{name}: pulled back opens {bad} fail at level 1")
    if len(tower.levels[1]) <= full_limit:
        one = cc_k_n(P, n, 1, tower=tower, budget=budget)
        if one.value is UNKNOWN:
            prop.skip()
        elif one.value <= c:
            prop.record(True)
        elif one.exact:
            prop.record(False, f"{name}: cc^1 = {one.value} > cc^0 = {c}")
        else:
            prop.skip()


# -- corollaries --------------------------------------------------------------

def check_contractible_law(posets, prop: PropertyResult, n: int = 2, budget: Budget | None = None) -> None:
    for name, P in posets:
        v = _value(cc_n(P, n, budget=budget))
        if v is None:
            prop.skip()
            continue
        contractible = is_contractible(P)
        prop.record((v == 1) == contractible,
                    f"{name}: cc_{n} = {v} but contractible = {contractible}")


def check_inequality_chain(posets, prop: PropertyResult, budget: Budget | None = None) -> None:
    for name, P in posets:
        a = _value(cat(P, budget=budget))
        b = _value(cc_n(P, 2, budget=budget))
        c = _value(cat(power(P, 2), budget=budget))
        if None in (a, b, c):
            prop.skip()
            continue
        prop.record(a <= b <= c <= a * a, f"{name}: cat={a}, cc_2={b}, cat(P^2)={c}")


def check_core_invariance(posets, prop: PropertyResult, budget: Budget | None = None) -> None:
    for name, P in posets:
        a = _value(cc_n(P, 2, budget=budget))
        b = _value(cc_n(core(P), 2, budget=budget))
        if a is None or b is None:
            prop.skip()
            continue
        prop.record(a == b, f"{name}: cc_2 = {a}, cc_2(core) = {b}")


def check_n_monotone(posets, prop: PropertyResult, budget: Budget | None = None,
                     max_ambient: int = 216) -> None:
    for name, P in posets:
        if len(P) ** 3 > max_ambient:
            prop.skip()
            continue
        a = _value(cc_n(P, 2, budget=budget))
        b = _value(cc_n(P, 3, budget=budget))
        if a is None or b is None:
            prop.skip()
            continue
        prop.record(a <= b, f"{name}: cc_2 = {a} > cc_3 = {b}")


def exhaustive_connected(max_size: int = 5) -> list[tuple[str, FinitePoset]]:
    return [(f"connected[{len(P)}:{i}]", P) for i, P in enumerate(all_connected_posets(max_size))]


def verify_corollaries(corpus, *, exhaustive_size: int = 5, core_corpus=None,
                       budget: Budget | None = None) -> SuiteResult:
    res = SuiteResult("corollaries")
    if exhaustive_size > 0:
        check_contractible_law(exhaustive_connected(exhaustive_size),
                               res.prop(f"cc_2 = 1 iff contractible (all connected, <= {exhaustive_size} points)"),
                               budget=budget)
    check_contractible_law(corpus, res.prop("cc_2 = 1 iff contractible (corpus)"), budget=budget)
    check_inequality_chain(corpus, res.prop("cat <= cc_2 <= cat(P^2) <= cat^2"), budget=budget)
    check_n_monotone(corpus, res.prop("cc_2 <= cc_3"), budget=budget)
    check_core_invariance(core_corpus if core_corpus is not None else corpus,
                          res.prop("cc_2(P) = cc_2(core P)"), budget=budget)
    return res


# -- transfer -----------------------------------------------------------------

def _components(nodes, neighbours) -> dict:
    """Component id of every node of an undirected graph given by a neighbour function."""
    g = nx.Graph()
    g.add_nodes_from(nodes)
    for u in nodes:
        for v in neighbours(u):
            if v != u:
                g.add_edge(u, v)
    comp = {}
    for i, c in enumerate(nx.connected_components(g)):
        for u in c:
            comp[u] = i
    return comp


def _homotopy_classes(Q: FinitePoset, P: FinitePoset) -> dict:
    """Components of the mapping poset, keyed by value tuple."""
    maps = list(monotone_maps(Q, P))
    return _components(maps, lambda f: monotone_maps(Q, P, f, "up"))


def _contiguity_classes(K: SimplicialComplex, L: SimplicialComplex) -> dict:
    maps = {phi.assignment: phi for phi in simplicial_maps(K, L)}
    return _components(list(maps), lambda a: (nb.assignment for nb in contiguous_neighbors(maps[a])))


def check_homotopy_to_contiguity(posets, prop: PropertyResult) -> None:
    """``f ~ g`` implies ``K(f)`` and ``K(g)`` lie in one contiguity class."""
    for qname, Q in posets:
        KQ = order_complex(Q)
        for pname, P in posets:
            KP = order_complex(P)
            hom = _homotopy_classes(Q, P)
            cont = _contiguity_classes(KQ, KP)
            first = {}
            for f, h in hom.items():
                Kf = K_functor(MonotoneMap(Q, P, f, check=False), KQ, KP).assignment
                if Kf not in cont:
                    prop.record(False, f"{qname} -> {pname}: K of {f} is not simplicial")
                    continue
                if h not in first:
                    first[h] = (f, cont[Kf])
                    continue
                f0, c0 = first[h]
                prop.record(cont[Kf] == c0,
                            f"{qname} -> {pname}: {f0} ~ {f} but K images in different classes")


def check_contiguity_to_homotopy(complexes, prop: PropertyResult, budget: Budget | None = None) -> None:
    """Maps in one contiguity class have homotopic ``X`` images."""
    budget = budget or Budget()
    for kname, K in complexes:
        XK = face_poset(K)
        for lname, L in complexes:
            XL = face_poset(L)
            maps = {phi.assignment: phi for phi in simplicial_maps(K, L)}
            cont = _components(list(maps), lambda a: (nb.assignment for nb in contiguous_neighbors(maps[a])))
            first = {}
            for a in sorted(maps):
                img = X_functor(maps[a], XK, XL).assignment
                c = cont[a]
                if c not in first:
                    first[c] = (a, img)
                    continue
                a0, img0 = first[c]
                r, _ = decide_homotopy(XK, XL, img0, img, budget=budget.nodes, csp_budget=budget.csp)
                if r is UNKNOWN:
                    prop.skip()
                else:
                    prop.record(r is True, f"{kname} -> {lname}: {a0} and {a} contiguous-equivalent, "
                                           f"X images not homotopic")


SMALL_COMPLEXES = ("simplex:0", "simplex:1", "simplex:2", "boundary:2", "boundary:3",
                   "cycle:4", "cycle:5")


def small_complexes(max_vertices: int = 5) -> list[tuple[str, SimplicialComplex]]:
    out = []
    for name in SMALL_COMPLEXES:
        K = zoo_complex(name)
        if len(K.vertices) <= max_vertices:
            out.append((name, K))
    extra = [
        ("two points", SimplicialComplex(["a", "b"], [[0], [1]])),
        ("path:3", SimplicialComplex(["a", "b", "c"], [[0, 1], [1, 2]])),
        ("bowtie", SimplicialComplex(["a", "b", "c", "d", "e"], [[0, 1, 2], [2, 3, 4]])),
    ]
    out.extend((n, K) for n, K in extra if len(K.vertices) <= max_vertices)
    return out


def small_posets(max_size: int = 4) -> list[tuple[str, FinitePoset]]:
    out = []
    for size in range(1, max_size + 1):
        for i, P in enumerate(all_posets(size)):
            out.append((f"poset[{size}:{i}]", P))
    return out


def verify_transfer(*, max_poset_size: int = 4, max_vertices: int = 5, domain_vertices: int | None = None,
                    budget: Budget | None = None) -> SuiteResult:
    res = SuiteResult("transfer")
    check_homotopy_to_contiguity(small_posets(max_poset_size),
                                 res.prop(f"f ~ g => K(f), K(g) contiguous-equivalent (<= {max_poset_size} points)"))
    complexes = small_complexes(max_vertices)
    check_contiguity_to_homotopy(complexes,
                                 res.prop(f"phi, psi contiguous-equivalent => X(phi) ~ X(psi) "
                                          f"(<= {max_vertices} vertices)"), budget=budget)
    return res


def run_suite(suite: str, *, random_count: int = 0, max_size: int = 5, seed: int = 0,
              budget: Budget | None = None) -> list[SuiteResult]:
    """Run one suite (or ``all``) over the builtin corpus plus random posets."""
    if suite not in SUITES + ("all",):
        raise ValueError(f"unknown suite {suite!r}")
    corpus = default_corpus(random_count, max_size, seed)
    out = []
    if suite in ("lemmas", "all"):
        out.append(verify_lemmas(corpus, budget=budget))
    if suite in ("corollaries", "all"):
        out.append(verify_corollaries(corpus, budget=budget))
    if suite in ("transfer", "all"):
        out.append(verify_transfer(budget=budget))
    return out
