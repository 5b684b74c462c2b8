"""Reading posets and complexes: text files, JSON, and builtin zoo names.

Poset text format::

    # the minimal circle
    elements: a b c d
    a < c
    a < d
    b < c
    b < d

``a < c < d`` is accepted as shorthand for two edges.  JSON:
``{"elements": [...], "hasse": [["a", "c"], ...]}``.

Complex text format: one facet per line, vertices separated by whitespace;
JSON: ``{"facets": [[...], ...]}``.
"""

from __future__ import annotations

import json
import os
import re

from .complex import SimplicialComplex
from .errors import CycleDetected, DuplicateLabel, ParseError
from .poset import FinitePoset, antichain, build_poset, chain, fence, sphere, wedge_fence

_ZOO_ARITY = {"sphere": 1, "fence": 1, "chain": 1, "antichain": 1, "wedge_fence": 2}
_COMPLEX_ZOO = {"cycle": 1, "simplex": 1, "boundary": 1}


def zoo_poset(name: str) -> FinitePoset:
    """``sphere:m``, ``fence:m``, ``wedge_fence:n:m``, ``chain:k``, ``antichain:k``."""
    parts = name.strip().split(":")
    kind, args = parts[0], parts[1:]
    if kind not in _ZOO_ARITY:
        raise ParseError(f"unknown zoo name {kind!r}", 1, 1)
    if len(args) != _ZOO_ARITY[kind]:
        raise ParseError(f"{kind} takes {_ZOO_ARITY[kind]} integer parameter(s)", 1, len(kind) + 1)
    try:
        nums = [int(a) for a in args]
    except ValueError:
        raise ParseError(f"bad integer in {name!r}", 1, len(kind) + 2) from None
    try:
        if kind == "sphere":
            return sphere(nums[0])
        if kind == "fence":
            return fence(nums[0])
        if kind == "chain":
            if nums[0] < 1:
                raise ValueError("a chain needs at least one element")
            return chain(nums[0])
        if kind == "antichain":
            if nums[0] < 1:
                raise ValueError("an antichain needs at least one element")
            return antichain(nums[0])
        return wedge_fence(nums[0], nums[1])
    except ValueError as exc:
        raise ParseError(str(exc), 1, 1) from None


def is_zoo_name(source: str) -> bool:
    return bool(re.fullmatch(r"[a-z_]+(:-?\d+)+", source.strip()))


def parse_poset_text(text: str) -> FinitePoset:
    labels = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        if labels is None:
            m = re.match(r"\s*elements\s*:(.*)$", line)
            if not m:
                raise ParseError("expected 'elements:' header", lineno, col)
            tokens = list(re.finditer(r"\S+", m.group(1)))
            labels = [t.group() for t in tokens]
            if not labels:
                raise ParseError("no elements listed", lineno, col)
            seen = set()
            for t in tokens:
                if t.group() in seen:
                    raise ParseError(f"duplicate element {t.group()!r}", lineno, m.start(1) + t.start() + 1)
                seen.add(t.group())
            continue
        names = [s.strip() for s in line.split("<")]
        if len(names) < 2 or any(not s or len(s.split()) != 1 for s in names):
            raise ParseError("expected 'x < y'", lineno, col)
        known = set(labels)
        for s in names:
            if s not in known:
                raise ParseError(f"unknown element {s!r}", lineno, line.index(s) + 1)
        edges.extend(zip(names, names[1:]))
    if labels is None:
        raise ParseError("empty poset description", 1, 1)
    try:
        return build_poset(labels, edges)
    except (CycleDetected, DuplicateLabel) as exc:
        raise ParseError(str(exc), None) from exc


def parse_poset_json(obj) -> FinitePoset:
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(obj, dict) or "elements" not in obj:
        raise ParseError("JSON poset needs an 'elements' list", 1, 1)
    labels = [str(x) for x in obj["elements"]]
    edges = obj.get("hasse", [])
    known = set(labels)
    for e in edges:
        if not (isinstance(e, (list, tuple)) and len(e) == 2):
            raise ParseError(f"bad Hasse edge {e!r}", None)
        for s in e:
            if str(s) not in known:
                raise ParseError(f"unknown element {s!r}", None)
    try:
        return build_poset(labels, [(str(a), str(b)) for a, b in edges])
    except (CycleDetected, DuplicateLabel) as exc:
        raise ParseError(str(exc), None) from exc


def load_poset(source: str) -> FinitePoset:
    """A zoo name, or a path to a text or JSON poset file."""
    if not os.path.exists(source):
        if is_zoo_name(source) or ":" in source:
            return zoo_poset(source)
        raise ParseError(f"no such file or zoo name: {source!r}", None)
    with open(source, encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return parse_poset_json(text)
    return parse_poset_text(text)


def poset_to_text(P: FinitePoset) -> str:
    lines = ["elements: " + " ".join(P.labels)]
    lines += [f"{P.labels[a]} < {P.labels[b]}" for a, b in P.hasse_edges]
    return "\n".join(lines) + "\n"


def poset_to_json(P: FinitePoset) -> dict:
    return {"elements": list(P.labels),
            "hasse": [[P.labels[a], P.labels[b]] for a, b in P.hasse_edges]}


# -- complexes -----------------------------------------------------------------

def zoo_complex(name: str) -> SimplicialComplex:
    """``cycle:k`` (k >= 3 vertices), ``simplex:d`` and ``boundary:d`` (of the d-simplex)."""
    parts = name.strip().split(":")
    kind = parts[0]
    if kind not in _COMPLEX_ZOO or len(parts) != 2:
        raise ParseError(f"unknown complex zoo name {name!r}", 1, 1)
    try:
        k = int(parts[1])
    except ValueError:
        raise ParseError(f"bad integer in {name!r}", 1, len(kind) + 2) from None
    if kind == "cycle":
        if k < 3:
            raise ParseError("a cycle needs at least 3 vertices", 1, len(kind) + 2)
        return SimplicialComplex([f"v{i}" for i in range(k)], [(i, (i + 1) % k) for i in range(k)])
    if k < 0:
        raise ParseError("dimension must be nonnegative", 1, len(kind) + 2)
    verts = [f"v{i}" for i in range(k + 1)]
    if kind == "simplex":
        return SimplicialComplex(verts, [tuple(range(k + 1))])
    if k < 1:
        raise ParseError("boundary needs dimension >= 1", 1, len(kind) + 2)
    return SimplicialComplex(verts, [tuple(v for v in range(k + 1) if v != drop) for drop in range(k + 1)])


def parse_complex_text(text: str) -> SimplicialComplex:
    facets = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].split()
        if line:
            facets.append(line)
    if not facets:
        raise ParseError("no facets", 1, 1)
    return SimplicialComplex.from_facets(facets)


def parse_complex_json(obj) -> SimplicialComplex:
    if isinstance(obj, str):
        try:
            obj = json.loads(obj)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno) from None
    if not isinstance(obj, dict) or not isinstance(obj.get("facets"), list):
        raise ParseError("JSON complex needs a 'facets' list", 1, 1)
    facets = obj["facets"]
    if not facets or not all(isinstance(f, list) and f for f in facets):
        raise ParseError("facets must be nonempty lists", 1, 1)
    return SimplicialComplex.from_facets(facets, obj.get("vertices"))


def load_complex(source: str) -> SimplicialComplex:
    if not os.path.exists(source):
        if ":" in source:
            return zoo_complex(source)
        raise ParseError(f"no such file or complex zoo name: {source!r}", None)
    with open(source, encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return parse_complex_json(text)
    return parse_complex_text(text)
