from finitetc.enumerate import (BUILTIN_CORPUS, all_connected_posets, all_posets, builtin_corpus,
                                random_connected_posets)
from finitetc.poset import is_connected


def test_counts_up_to_isomorphism():
    # numbers of unlabelled posets and of connected ones
    assert [len(all_posets(n)) for n in range(1, 6)] == [1, 2, 5, 16, 63]
    assert [len(all_posets(n, connected_only=True)) for n in range(1, 6)] == [1, 1, 3, 10, 44]
    assert len(all_connected_posets(5)) == 59


def test_random_posets_are_connected_and_reproducible():
    a = random_connected_posets(20, 5, seed=3)
    b = random_connected_posets(20, 5, seed=3)
    assert all(is_connected(P) and 1 <= len(P) <= 5 for P in a)
    assert [P.hasse_edges for P in a] == [P.hasse_edges for P in b]


def test_builtin_corpus():
    names = [n for n, _ in builtin_corpus()]
    assert tuple(names) == BUILTIN_CORPUS
