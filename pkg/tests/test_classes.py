import itertools

import pytest

from cbclab.classes import THM1, THM2, THM3, adjacent_3faces, classify, has_cycle_of_length
from cbclab.graph import BackbonePair
from cbclab.planar import faces, planarity_embed
from cbclab.workbench.enumerate import enumerate_graphs

from conftest import PETERSEN, Q3, SQUARE_TRI, complete, cycle, pair


def brute_cycle(g, length):
    """Oracle: try every ordered vertex tuple."""
    for combo in itertools.combinations(range(g.n), length):
        first, rest = combo[0], combo[1:]
        for perm in itertools.permutations(rest):
            seq = (first,) + perm
            if all(g.has_edge(seq[i], seq[(i + 1) % length]) for i in range(length)):
                return True
    return False


def _is_cycle(g, seq, length):
    return len(set(seq)) == length and all(g.has_edge(seq[i], seq[(i + 1) % length]) for i in range(length))


def test_cycle_examples():
    w = has_cycle_of_length(complete(4), 4)
    assert w is not None and _is_cycle(complete(4), w, 4)
    assert has_cycle_of_length(cycle(6), 4) is None and has_cycle_of_length(cycle(6), 5) is None
    assert has_cycle_of_length(PETERSEN, 4) is None
    w = has_cycle_of_length(PETERSEN, 5)
    assert w is not None and _is_cycle(PETERSEN, w, 5)


@pytest.mark.parametrize("n", range(1, 8))
def test_cycle_detection_matches_brute_force(n):
    for g in enumerate_graphs(n):
        for length in (4, 5):
            w = has_cycle_of_length(g, length)
            assert (w is not None) == brute_cycle(g, length)
            if w is not None:
                assert _is_cycle(g, w, length)


def test_adjacent_3faces(bowtie_rs, square_tri_rs):
    assert adjacent_3faces(faces(planarity_embed(complete(4)))) is not None
    assert adjacent_3faces(faces(bowtie_rs)) is None
    assert adjacent_3faces(faces(square_tri_rs)) is None


def test_classify_examples(q3_rs):
    assert classify(pair(cycle(6), [(0, 1), (3, 4)])).theorem_classes == {THM1, THM2, THM3}
    assert classify(pair(complete(4), [(0, 1), (2, 3)])).theorem_classes == set()
    rep = classify(pair(Q3, [(0, 1)]), q3_rs)
    assert rep.theorem_classes == {THM2}
    assert rep.embedding == q3_rs


def test_thm3_accepts_linear_forest_not_tree():
    c6 = cycle(6)
    assert THM3 in classify(pair(c6, [(0, 1), (1, 2), (2, 3)])).theorem_classes
    star = pair(complete(1), [])
    assert THM3 in classify(star).theorem_classes
    assert THM3 not in classify(BackbonePair(c6, c6.edges)).theorem_classes


def test_square_with_triangles_is_thm2_only(square_tri_rs):
    rep = classify(pair(SQUARE_TRI), square_tri_rs)
    assert rep.c4_free is False and rep.theorem_classes == {THM2}


@pytest.mark.parametrize("n", range(2, 7))
def test_cycle_freeness_survives_edge_deletion(n):
    for g in enumerate_graphs(n, ["c4_free"]):
        for e in g.edges:
            h = type(g)(g.n, g.edges - {e})
            assert has_cycle_of_length(h, 4) is None
