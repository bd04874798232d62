"""Random list-coloring states shared by the reduction tests and the acceptance suite."""
import random

from cbclab.graph import build_graph
from cbclab.reduction import ReductionState, adj_union_size, check_preconditions

COLORS = tuple(range(1, 8))


def circ(a, b):
    d = abs(a - b)
    return min(d, 7 - d)


def colors_ok(h, path, lists, colors):
    """Independent check of an L-CBC-7 coloring (no package code)."""
    if any(colors[v] not in lists[v] for v in path):
        return False
    on_path = {frozenset(e) for e in zip(path, path[1:])}
    for u, v in h.edges:
        if colors[u] == colors[v]:
            return False
        if frozenset((u, v)) in on_path and circ(colors[u], colors[v]) < 2:
            return False
    return True


def _close_pair_list(rng):
    """A 5-color list whose two missing colors are within circular distance 2."""
    c = rng.choice(COLORS)
    d = (c - 1 + rng.choice((1, 2))) % 7 + 1
    return frozenset(COLORS) - {c, d}


def regime_state(rng: random.Random, max_len: int = 7, chord_p: float = 0.3):
    """A path-plus-chords state meeting the first-step reduction preconditions
    with every later list of size d + 2 (capped at 7) and all degrees at most 5.

    Returns (h, path, lists).
    """
    while True:
        length = rng.randint(1, max_len)
        edges = {(i, i + 1) for i in range(length - 1)}
        deg = [0] * length
        for i in range(length - 1):
            deg[i] += 1
            deg[i + 1] += 1
        cands = [(i, j) for i in range(length) for j in range(i + 2, length)]
        rng.shuffle(cands)
        for i, j in cands:
            if rng.random() < chord_p and deg[i] < 5 and deg[j] < 5:
                edges.add((i, j))
                deg[i] += 1
                deg[j] += 1
        if length > 1 and deg[0] > 4:
            continue
        h = build_graph(length, edges)
        lists = {}
        for v in range(length):
            if v == 0 and length > 1:
                size = deg[0] + 1
                lists[v] = _close_pair_list(rng) if size == 5 else frozenset(rng.sample(COLORS, size))
            else:
                lists[v] = frozenset(rng.sample(COLORS, min(7, deg[v] + 2)))
        path = list(range(length))
        if length > 1:
            st = ReductionState(h, tuple(path), lists)
            assert check_preconditions(st, 0) is None
        # random relabeling so the path is not always 0..L-1
        perm = list(range(length))
        rng.shuffle(perm)
        h2 = build_graph(length, [(perm[u], perm[v]) for u, v in h.edges])
        return h2, [perm[v] for v in path], {perm[v]: lists[v] for v in range(length)}


def arbitrary_state(rng: random.Random, max_len: int = 6):
    """Any path-plus-chords state with random lists (preconditions may fail)."""
    length = rng.randint(1, max_len)
    edges = {(i, i + 1) for i in range(length - 1)}
    for i in range(length):
        for j in range(i + 2, length):
            if rng.random() < 0.35:
                edges.add((i, j))
    h = build_graph(length, edges)
    lists = {v: frozenset(rng.sample(COLORS, rng.randint(0, 7))) for v in range(length)}
    return h, list(range(length)), lists


def side_condition_ok(c, d):
    return adj_union_size(c, d) <= 5


def adj7(c):
    return {(c - 2) % 7 + 1, c, c % 7 + 1}


def rule_check(h, path, before, after_path, after, v1):
    """Independent reading of the reduction rule; returns a list of problems."""
    if v1 == path[0]:
        succ, rest = path[1], list(path[1:])
    elif v1 == path[-1]:
        succ, rest = path[-2], list(path[:-1])
    else:
        return ["not an endpoint"]
    out = []
    if list(after_path) != rest:
        out.append("path")
    for x in rest:
        lost = before[x] - after[x]
        if after[x] - before[x]:
            out.append(f"{x} gained")
        if x == succ:
            if len(lost) > 2:
                out.append(f"{x} lost {len(lost)}")
            if len(lost) == 2 and len(set().union(*(adj7(c) for c in lost))) > 5:
                out.append(f"{x} lost a far pair")
        elif h.has_edge(v1, x):
            if len(lost) > 1:
                out.append(f"{x} lost {len(lost)}")
        elif lost:
            out.append(f"{x} non-neighbour changed")
    return out
