import json

import pytest
from hypothesis import given

from conftest import small_posets
from finitetc.errors import ParseError
from finitetc.formats import (load_complex, load_poset, parse_complex_json, parse_complex_text,
                              parse_poset_json, parse_poset_text, poset_to_json, poset_to_text,
                              zoo_complex, zoo_poset)


def _same(P, Q):
    return P.labels == Q.labels and sorted(P.hasse_edges) == sorted(Q.hasse_edges)


def test_text_format_with_chains_and_comments():
    P = parse_poset_text("# circle\nelements: a b c d\na < c\na < d\nb < c\nb < d\n")
    assert len(P) == 4 and len(P.hasse_edges) == 4
    Q = parse_poset_text("elements: x y z\nx < y < z  # chain shorthand\n")
    assert Q.leq(0, 2)


@pytest.mark.parametrize("text, line, column", [
    ("a < b\n", 1, 1),
    ("elements: a b\na < q\n", 2, 5),
    ("elements: a b\n\n  a b\n", 3, 3),
    ("elements: a a\n", 1, 13),
    ("", 1, 1),
])
def test_parse_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_poset_text(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_cycle_is_a_parse_error():
    with pytest.raises(ParseError):
        parse_poset_text("elements: a b\na < b\nb < a\n")


def test_json_errors():
    with pytest.raises(ParseError) as info:
        parse_poset_json('{"elements": [1,\n')
    assert info.value.line == 2
    with pytest.raises(ParseError):
        parse_poset_json({"elements": ["a"], "hasse": [["a", "b"]]})
    with pytest.raises(ParseError):
        parse_complex_json({"facets": []})


@given(small_posets(max_size=6))
def test_round_trips(P):
    assert _same(parse_poset_text(poset_to_text(P)), P)
    assert _same(parse_poset_json(json.dumps(poset_to_json(P))), P)


def test_zoo():
    assert len(zoo_poset("sphere:2")) == 6
    assert len(zoo_poset("chain:3")) == 3
    assert len(zoo_poset("wedge_fence:3:2")) == 7
    for bad in ("sphere", "sphere:x", "torus:1", "chain:0", "wedge_fence:1:2"):
        with pytest.raises(ParseError):
            zoo_poset(bad)
    assert len(zoo_complex("cycle:5").facets) == 5
    assert len(zoo_complex("boundary:3").facets) == 4
    with pytest.raises(ParseError):
        zoo_complex("cycle:2")


def test_files(tmp_path):
    p = tmp_path / "p.txt"
    p.write_text("elements: a b c\na < c\nb < c\n")
    assert len(load_poset(str(p))) == 3
    j = tmp_path / "p.json"
    j.write_text(json.dumps({"elements": ["a", "b"], "hasse": [["a", "b"]]}))
    assert load_poset(str(j)).leq(0, 1)
    c = tmp_path / "k.txt"
    c.write_text("a b\nb c\nc a\n")
    K = load_complex(str(c))
    assert len(K.vertices) == 3 and len(K.facets) == 3
    assert parse_complex_text("a b c\n").dimension == 2
    with pytest.raises(ParseError):
        load_poset(str(tmp_path / "missing.txt"))
