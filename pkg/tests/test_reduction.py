import itertools
import random

import pytest

from cbclab.errors import NotHamiltonianPath, NotReducible
from cbclab.graph import build_graph
from cbclab.reduction import (
    Extension, Fail, ReductionState, adj_union_size, circular_distance, extend_along_path,
    forward_schedule, list_cbc_solve, reduce_endpoint, rule_violations, solve_state, toward_schedule,
)

from conftest import path
from helpers import arbitrary_state, colors_ok, regime_state

FULL = frozenset(range(1, 8))


def brute_lists(h, p, lists):
    verts = list(range(h.n))
    for combo in itertools.product(*(sorted(lists[v]) for v in verts)):
        col = dict(zip(verts, combo))
        if colors_ok(h, p, lists, col):
            return col
    return None


def test_list_solve_examples():
    assert list_cbc_solve(build_graph(1, []), [0], {0: frozenset({4})}) == {0: 4}
    lists = {0: frozenset({1, 2}), 1: frozenset({1, 2, 3, 4}), 2: frozenset({1, 2, 3})}
    assert list_cbc_solve(path(3), [0, 1, 2], lists) == {0: 1, 1: 3, 2: 1}
    assert list_cbc_solve(path(2), [0, 1], {0: frozenset({1}), 1: frozenset({2})}) is None
    with pytest.raises(NotHamiltonianPath):
        list_cbc_solve(build_graph(3, [(0, 1)]), [0, 1, 2], lists)


def test_case_i_consecutive_pair():
    st = ReductionState(path(2), (0, 1), {0: frozenset({1, 2}), 1: FULL})
    new, rec = reduce_endpoint(st, 0)
    assert rec.case == "i"
    assert new.lists[1] == {3, 4, 5, 6, 7}
    for c in new.lists[1]:
        assert rec.extend({1: c}) in {1, 2} - {c - 1, c, c + 1}


def test_case_ii_isolated_color():
    # path 0-1 plus a chord 0-2; color 4 is isolated in {1, 4, 6}
    h = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    lists = {0: frozenset({1, 4, 6}), 1: frozenset({1, 2, 4, 6, 7}), 2: FULL}
    new, rec = reduce_endpoint(ReductionState(h, (0, 1, 2), lists), 0)
    assert rec.case == "ii" and rec.anchor == 4
    assert new.lists[1] == lists[1]  # 3 and 5 were not there to remove
    assert new.lists[2] == FULL - {4}
    assert rule_violations(ReductionState(h, (0, 1, 2), lists), new, 0) == []


def test_case_ii_prefers_cheapest_anchor():
    h = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    lists = {0: frozenset({1, 4, 6}), 1: FULL, 2: FULL}
    _, rec = reduce_endpoint(ReductionState(h, (0, 1, 2), lists), 0)
    assert rec.anchor == 1  # all three cost the same, smallest wins


def test_degree_four_side_condition():
    h = build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 2), (0, 3), (0, 4)])
    ok = {0: FULL - {6, 7}, 1: FULL, 2: FULL, 3: FULL, 4: FULL}
    new, rec = reduce_endpoint(ReductionState(h, (0, 1, 2, 3, 4), ok), 0)
    assert rec.case == "iii"
    assert adj_union_size(6, 7) == 4  # {5,6,7} | {6,7,1}
    bad = {**ok, 0: FULL - {4, 7}}
    assert adj_union_size(4, 7) == 6
    with pytest.raises(NotReducible):
        reduce_endpoint(ReductionState(h, (0, 1, 2, 3, 4), bad), 0)


def test_preconditions_refuse():
    st = ReductionState(path(3), (0, 1, 2), {0: frozenset({1}), 1: FULL, 2: FULL})
    with pytest.raises(NotReducible):
        reduce_endpoint(st, 0)  # list too short
    with pytest.raises(NotReducible):
        reduce_endpoint(ReductionState(path(3), (0, 1, 2), {v: FULL for v in range(3)}), 1)
    with pytest.raises(NotReducible):
        reduce_endpoint(ReductionState(path(2), (0, 1), {0: FULL, 1: FULL}, k=6), 0)


def test_adj_union_arithmetic():
    for c, d in itertools.product(range(1, 8), repeat=2):
        size = adj_union_size(c, d)
        assert 3 <= size <= 6
        if c != d:
            assert (size <= 5) == (circular_distance(c, d) <= 2)


def test_extend_examples():
    assert extend_along_path(build_graph(1, []), [0], {0: frozenset({3})}, []).colors == {0: 3}
    lists = {0: frozenset({1, 2}), 1: frozenset({1, 2, 3, 4}), 2: frozenset({1, 2, 3})}
    res = extend_along_path(path(3), [0, 1, 2], lists, forward_schedule([0, 1, 2]))
    assert isinstance(res, Extension) and colors_ok(path(3), [0, 1, 2], lists, res.colors)


def test_extend_toward_middle():
    h = path(5)
    lists = {0: frozenset({2, 5}), 1: frozenset({1, 3, 6, 7}), 2: frozenset({1, 2, 4}),
             3: frozenset({2, 3, 5, 7}), 4: frozenset({1, 2, 4})}
    order = toward_schedule([0, 1, 2, 3, 4], 2)
    assert order == [0, 1, 4, 3]
    res = extend_along_path(h, list(range(5)), lists, order)
    assert isinstance(res, Extension)
    assert colors_ok(h, list(range(5)), lists, res.colors)
    assert list_cbc_solve(h, list(range(5)), lists) is not None


def test_extend_reports_failure_step():
    lists = {0: frozenset({1}), 1: FULL, 2: FULL}
    res = extend_along_path(path(3), [0, 1, 2], lists, [0, 1])
    assert isinstance(res, Fail) and res.step == 0 and res.vertex == 0
    with pytest.raises(ValueError):
        extend_along_path(path(3), [0, 1, 2], lists, [0])


def test_list_solver_matches_brute_force():
    rng = random.Random(11)
    for _ in range(300):
        h, p, lists = arbitrary_state(rng, 5)
        mine = list_cbc_solve(h, p, lists)
        oracle = brute_lists(h, p, lists)
        assert (mine is None) == (oracle is None)
        if mine is not None:
            assert colors_ok(h, p, lists, mine)


def test_every_delta_conforms_and_extensions_are_sound():
    rng = random.Random(5)
    for _ in range(400):
        h, p, lists = arbitrary_state(rng)
        st = ReductionState(h, tuple(p), lists)
        for v1 in {p[0], p[-1]}:
            try:
                new, rec = reduce_endpoint(st, v1)
            except NotReducible:
                continue
            assert rule_violations(st, new, v1) == []
            sub = solve_state(new)
            if sub is not None:
                sub = dict(sub)
                sub[v1] = rec.extend(sub)
                assert colors_ok(h, p, lists, sub)


def test_regime_states_always_extend():
    rng = random.Random(2024)
    for _ in range(300):
        h, p, lists = regime_state(rng)
        res = extend_along_path(h, p, lists, forward_schedule(p))
        assert isinstance(res, Extension), res
        assert colors_ok(h, p, lists, res.colors)
        assert list_cbc_solve(h, p, lists) is not None
