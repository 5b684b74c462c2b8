"""The ten acceptance criteria, each at its stated tolerance.

Every test records one ``criterion N: PASS|FAIL`` line, printed in the
pytest summary (and directly when this file is run as a script).
"""

import time

import pytest

from conftest import ACCEPTANCE_LINES
from finitetc.complexity import cat, cc_n
from finitetc.enumerate import random_connected_posets
from finitetc.formats import zoo_complex, zoo_poset
from finitetc.simplicial import sc_n_of_complex
from finitetc.subdivision import SubdivisionTower, cc_inf_n
from finitetc.verify import (PropertyResult, check_contractible_law, check_core_invariance,
                             check_inequality_chain, default_corpus, exhaustive_connected,
                             verify_lemmas, verify_transfer)

SEED = 0


def record(n, ok, detail):
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def clean(*props):
    """No violations and nothing left undecided."""
    return all(p.ok and p.skipped == 0 and p.checked > 0 for p in props)


def summary(*props):
    return "; ".join(p.line() for p in props)


@pytest.fixture(scope="module")
def corpus():
    return default_corpus(100, 5, seed=SEED)


@pytest.fixture(scope="module")
def lemmas(corpus):
    return verify_lemmas(corpus)


def test_criterion_01_circle_n2_and_category():
    t = time.monotonic()
    a = cc_n(zoo_poset("sphere:1"), 2)
    b = cat(zoo_poset("sphere:1"))
    dt = time.monotonic() - t
    ok = a.value == 4 and a.exact and b.value == 2 and b.exact and dt < 10
    assert record(1, ok, f"cc_2(S^1) = {a.value} ({a.certified}), cat(S^1) = {b.value} ({b.certified}), {dt:.2f}s < 10s")


def test_criterion_02_circle_n3():
    t = time.monotonic()
    a = cc_n(zoo_poset("sphere:1"), 3)
    dt = time.monotonic() - t
    ok = a.value == 8 and a.exact and dt < 600
    assert record(2, ok, f"cc_3(S^1) = {a.value} ({a.certified}), {dt:.2f}s < 600s")


def test_criterion_03_circle_limit_over_subdivisions():
    t = time.monotonic()
    P = zoo_poset("sphere:1")
    rep = cc_inf_n(P, 2, k_max=2, want_witness=True)
    dt = time.monotonic() - t
    k = rep.params["k"]
    tower = SubdivisionTower.build(P, 2, k)
    covered = 0
    for U in rep.cover:
        covered |= U.mask
    witnesses_ok = len(rep.witnesses) == len(rep.cover) == 2 and all(w.is_valid() for w in rep.witnesses)
    ok = rep.value == 2 and covered == tower.levels[k].full_mask and witnesses_ok and dt < 900
    per_k = [r.value for r in rep.per_k]
    assert record(3, ok, f"cc_inf_2(S^1) = {rep.value} ({rep.certified}), per level {per_k}, "
                         f"2-cover at k={k} with checked sections, {dt:.1f}s < 900s")


def test_criterion_04_contractible_iff_one():
    prop = PropertyResult("cc_2 = 1 iff contractible")
    posets = exhaustive_connected(5)
    check_contractible_law(posets, prop)
    ok = len(posets) == 59 and clean(prop)
    assert record(4, ok, f"{len(posets)} connected posets: " + prop.line())


def test_criterion_05_variant_and_bound_lemmas(lemmas):
    props = [p for name, p in lemmas.properties.items() if name != "section witnesses survive transport"]
    ok = clean(*props)
    assert record(5, ok, summary(*props))


def test_criterion_06_inequality_chain(corpus):
    prop = PropertyResult("cat <= cc_2 <= cat(P^2) <= cat^2")
    check_inequality_chain(corpus, prop)
    assert record(6, clean(prop), f"{len(corpus)} posets: " + prop.line())


def test_criterion_07_core_invariance():
    posets = [(f"random[1:{i}]", P) for i, P in enumerate(random_connected_posets(50, 6, seed=1))]
    prop = PropertyResult("cc_2(P) = cc_2(core P)")
    check_core_invariance(posets, prop)
    assert record(7, clean(prop), prop.line())


def test_criterion_08_transfer():
    t = time.monotonic()
    res = verify_transfer(max_poset_size=4, max_vertices=5)
    props = list(res.properties.values())
    assert record(8, clean(*props), summary(*props) + f", {time.monotonic() - t:.0f}s")


def test_criterion_09_section_transport(lemmas):
    prop = lemmas.properties["section witnesses survive transport"]
    assert record(9, clean(prop), prop.line())


def test_criterion_10_cycle_simplicial_complexity():
    t = time.monotonic()
    rep = sc_n_of_complex(zoo_complex("cycle:4"), 2, k_max=2)
    dt = time.monotonic() - t
    ok = rep.value == 2 and dt < 900
    assert record(10, ok, f"SC_2(4-cycle) = {rep.value} ({rep.certified}), {dt:.1f}s < 900s")


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q"]))
