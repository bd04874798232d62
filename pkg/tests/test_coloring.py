import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cbclab.coloring import (
    UNASSIGNED, CircularColoring, adj_set, available, bbc_number, brute_force, cbc_number,
    chromatic_number, odd_color_witness, solve_bbc_k, solve_k, verify,
)
from cbclab.errors import InstanceTooLarge, PartialColoring
from cbclab.graph import BackbonePair, attach_backbone, build_graph

from conftest import complete, cycle, pair, path


def full(g):
    return BackbonePair(g, g.edges)


def test_adj_set_examples():
    assert adj_set(3, 7) == {2, 3, 4}
    assert adj_set(1, 7) == {7, 1, 2}
    assert adj_set(1, 5) == {5, 1, 2}
    assert adj_set(1, 2) == {1, 2}
    with pytest.raises(ValueError):
        adj_set(0, 7)


def test_verify_examples():
    assert verify(full(cycle(5)), CircularColoring(2, 5, (1, 3, 5, 2, 4))) is None
    k2 = full(complete(2))
    assert verify(k2, CircularColoring(2, 4, (1, 2))).reason == "backbone_too_close"
    assert verify(k2, CircularColoring(2, 5, (1, 5))).reason == "backbone_too_far"
    assert verify(k2, CircularColoring(2, 5, (1, 5)), circular=False) is None
    assert verify(pair(complete(2)), CircularColoring(2, 5, (3, 3))).reason == "improper"
    with pytest.raises(PartialColoring):
        verify(k2, CircularColoring(2, 4, (1, UNASSIGNED)))


def test_available_examples():
    star = build_graph(3, [(0, 1), (0, 2)])
    assert available(attach_backbone(star, [(0, 1)]), [0, 4, 0], 0, 7) == {1, 2, 6, 7}
    assert available(pair(star), [0, 2, 5], 0, 7) == {1, 3, 4, 6, 7}
    assert available(attach_backbone(star, [(0, 1)]), [0, 1, 4], 0, 7) == {3, 5, 6}
    with pytest.raises(ValueError):
        available(pair(star), [1, 0, 0], 0, 7)


def test_solve_examples():
    k2 = full(complete(2))
    assert solve_k(k2, 2, 4).colors == (1, 3)
    assert solve_k(k2, 2, 3) is None
    assert solve_k(full(cycle(5)), 2, 4) is None


def test_numbers_examples():
    assert cbc_number(full(cycle(5))) == 5
    assert cbc_number(pair(complete(4), [(0, 1), (2, 3)])) == 4
    assert cbc_number(pair(cycle(5))) == 3
    assert bbc_number(full(complete(2))) == 3
    assert solve_bbc_k(full(complete(2)), 2, 3).colors == (1, 3)
    c5 = full(cycle(5))
    assert brute_force(c5, 2, 4, circular=False) is None
    assert bbc_number(c5) == 5  # a 4-coloring would need |diff| >= 2 around an odd cycle
    assert bbc_number(pair(cycle(5))) == chromatic_number(cycle(5)) == 3


def test_brute_force_examples():
    assert brute_force(pair(complete(3)), 2, 2) is None
    assert brute_force(pair(complete(3)), 2, 3) is not None
    with pytest.raises(InstanceTooLarge):
        brute_force(pair(path(9)), 2, 3)


@st.composite
def small_pairs(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    all_edges = list(itertools.combinations(range(n), 2))
    edges = draw(st.lists(st.sampled_from(all_edges), unique=True)) if all_edges else []
    bb = draw(st.lists(st.sampled_from(edges), unique=True)) if edges else []
    return attach_backbone(build_graph(n, edges), bb)


@given(small_pairs(), st.integers(1, 8), st.booleans())
@settings(max_examples=300, deadline=None)
def test_solver_agrees_with_brute_force(p, k, circular):
    mine = (solve_k if circular else solve_bbc_k)(p, 2, k)
    oracle = brute_force(p, 2, k, circular=circular)
    assert (mine is None) == (oracle is None)
    if mine is not None:
        assert verify(p, mine, circular=circular) is None


@given(small_pairs(), st.integers(4, 9))
@settings(max_examples=150, deadline=None)
def test_monotone_in_k(p, k):
    col = solve_k(p, 2, k)
    if col is not None:
        assert verify(p, CircularColoring(2, k + 1, col.colors)) is None


@given(small_pairs())
@settings(max_examples=150, deadline=None)
def test_inequalities(p):
    cbc, bbc = cbc_number(p), bbc_number(p)
    assert bbc <= cbc <= bbc + 1
    if p.backbone:
        assert cbc >= 4
    w = odd_color_witness(p)
    assert verify(p, w, circular=False) is None
    assert w.k == 2 * chromatic_number(p.graph) - 1
    assert bbc <= w.k


def test_empty_backbone_is_chromatic_number():
    for g in (cycle(5), complete(4), path(3), cycle(6)):
        assert cbc_number(pair(g)) == chromatic_number(g)
