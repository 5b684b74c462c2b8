"""All small posets up to isomorphism, random connected posets, and the builtin corpus."""

from __future__ import annotations

import random
from itertools import combinations, permutations

from .poset import FinitePoset, is_connected

BUILTIN_CORPUS = ("sphere:1", "sphere:2", "chain:1", "chain:3", "fence:2", "fence:3",
                  "wedge_fence:2:1", "wedge_fence:3:1")


def _closed(n, rel):
    """Is the strict relation (bitmask over pairs i<j) transitive?"""
    return all(not (rel[i][j] and rel[j][k]) or rel[i][k]
               for i in range(n) for j in range(i + 1, n) for k in range(j + 1, n))


def _canonical(n, pairs, perms):
    best = None
    for p in perms:
        img = tuple(sorted((p[a], p[b]) for a, b in pairs))
        if best is None or img < best:
            best = img
    return best


def all_posets(n: int, connected_only: bool = False) -> list[FinitePoset]:
    """Every poset on ``n`` elements up to isomorphism (brute force, fine for n <= 5).

    Each class is listed once, built from its lexicographically smallest
    relation set; order of the list is by that canonical form.
    """
    if n < 1:
        return []
    slots = list(combinations(range(n), 2))
    perms = list(permutations(range(n)))
    seen = {}
    for bitset in range(1 << len(slots)):
        rel = [[False] * n for _ in range(n)]
        pairs = []
        for s, (i, j) in enumerate(slots):
            if (bitset >> s) & 1:
                rel[i][j] = True
                pairs.append((i, j))
        if not _closed(n, rel):
            continue
        key = _canonical(n, pairs, perms)
        if key not in seen:
            seen[key] = key
    out = []
    for key in sorted(seen):
        P = FinitePoset([f"x{i}" for i in range(n)], key)
        if connected_only and not is_connected(P):
            continue
        out.append(P)
    return out


def all_connected_posets(max_size: int) -> list[FinitePoset]:
    out = []
    for n in range(1, max_size + 1):
        out.extend(all_posets(n, connected_only=True))
    return out


def random_connected_poset(rng: random.Random, max_size: int, min_size: int = 1,
                           density: float | None = None) -> FinitePoset:
    """Random naturally labelled order, resampled until connected."""
    while True:
        n = rng.randint(min_size, max_size)
        p = density if density is not None else rng.uniform(0.25, 0.7)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
        P = FinitePoset([f"x{i}" for i in range(n)], edges)
        if is_connected(P):
            return P


def random_connected_posets(count: int, max_size: int, seed: int = 0, min_size: int = 1) -> list[FinitePoset]:
    rng = random.Random(seed)
    return [random_connected_poset(rng, max_size, min_size) for _ in range(count)]


def builtin_corpus() -> list[tuple[str, FinitePoset]]:
    from .formats import zoo_poset
    return [(name, zoo_poset(name)) for name in BUILTIN_CORPUS]
