"""List colorings of a path-plus-chords graph and extendable endpoint reductions.

A state is a graph ``H`` with a Hamiltonian path ``P`` whose edges carry the
circular 2-separation on 7 colors, and a color list per vertex. Removing a path
endpoint ``v1`` while trimming the lists of its neighbours (the successor on
the path loses at most two colors, any other neighbour at most one) gives a
smaller state; the removal is extendable when every list coloring of the
smaller state can be completed at ``v1``. :func:`reduce_endpoint` builds such a
removal together with the rule that completes it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .coloring import adj_set, search
from .errors import ExtensionFailed, NotHamiltonianPath, NotReducible
from .graph import BackbonePair, Graph, norm_edge

K7 = 7
ListAssignment = dict[int, frozenset[int]]


def _up(c: int, k: int = K7) -> int:
    return c % k + 1


def _down(c: int, k: int = K7) -> int:
    return (c - 2) % k + 1


def circular_distance(a: int, b: int, k: int = K7) -> int:
    d = abs(a - b)
    return min(d, k - d)


def adj_union_size(c: int, d: int, k: int = K7) -> int:
    return len(adj_set(c, k) | adj_set(d, k))


@dataclass(frozen=True)
class ReductionState:
    graph: Graph
    path: tuple[int, ...]
    lists: Mapping[int, frozenset[int]]
    k: int = K7
    q: int = 2

    def alive(self) -> set[int]:
        return set(self.path)

    def neighbors(self, v: int) -> set[int]:
        return self.graph.adj[v] & self.alive()

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))


@dataclass(frozen=True)
class ReductionRecord:
    """One extendable reduction on a path endpoint.

    ``rotation`` is the color bijection of the third proof case as a tuple
    ``rho`` with ``rho[c - 1]`` the image of ``c``; it is ``None`` elsewhere.
    """

    vertex: int
    successor: int
    case: str  # "i", "ii" or "iii"
    kept: frozenset[int]
    neighbors: tuple[int, ...]
    deltas: Mapping[int, frozenset[int]]
    anchor: int | None = None
    rotation: tuple[int, ...] | None = None

    def to_dict(self) -> dict:
        return {
            "vertex": self.vertex,
            "successor": self.successor,
            "case": self.case,
            "kept": sorted(self.kept),
            "deltas": {str(v): sorted(d) for v, d in sorted(self.deltas.items())},
            "anchor": self.anchor,
            "rotation": None if self.rotation is None else list(self.rotation),
        }

    def preferred(self, succ_color: int) -> int | None:
        if self.case == "ii" and succ_color != self.anchor:
            return self.anchor
        if self.case == "iii":
            rho = self.rotation
            if rho[succ_color - 1] != K7:
                return rho.index(1) + 1
        return None

    def extend(self, psi: Mapping[int, int]) -> int:
        """Color for ``vertex`` given the colors of the rest of the state."""
        succ = psi[self.successor]
        forbidden = {psi[x] for x in self.neighbors} | adj_set(succ, K7)
        c = self.preferred(succ)
        if c is not None and c not in forbidden:
            return c
        free = sorted(self.kept - forbidden)
        if not free:
            raise ExtensionFailed(f"no color left for vertex {self.vertex}")
        return free[0]


def _trim(lst: frozenset[int], d: int) -> frozenset[int]:
    """Cut a list down to exactly ``d + 1`` colors; for ``d = 4`` the two
    dropped colors are kept within circular distance 2 when there is a choice."""
    target = d + 1
    if len(lst) <= target:
        return lst
    if d == 4:
        missing = set(range(1, K7 + 1)) - lst
        if len(missing) == 1:
            (x,) = missing
            return lst - {_up(x)}
        return lst - {6, 7}
    return frozenset(sorted(lst)[:target])


def _rotation_to_one(s: int) -> tuple[int, ...]:
    return tuple((c - s) % K7 + 1 for c in range(1, K7 + 1))


def check_preconditions(state: ReductionState, v1: int) -> str | None:
    """Why ``v1`` admits no reduction, or None when the three sufficient
    conditions (degree, list size, and the side condition at degree 4) hold."""
    if state.k != K7 or state.q != 2:
        return "reductions are defined for q=2 and 7 colors only"
    if len(state.path) < 2 or v1 not in (state.path[0], state.path[-1]):
        return f"vertex {v1} is not an endpoint of a path with at least two vertices"
    d = state.degree(v1)
    lst = state.lists[v1]
    if d > 4:
        return f"degree {d} > 4"
    if len(lst) < d + 1:
        return f"list size {len(lst)} < degree + 1 = {d + 1}"
    if d == 4:
        missing = sorted(set(range(1, K7 + 1)) - _trim(lst, d))
        if len(missing) == 2 and adj_union_size(*missing) > 5:
            return f"missing colors {missing} are too far apart"
    return None


def reduce_endpoint(state: ReductionState, v1: int) -> tuple[ReductionState, ReductionRecord]:
    """Remove path endpoint ``v1`` by an extendable reduction.

    Raises :class:`NotReducible` when the sufficient conditions fail.
    """
    why = check_preconditions(state, v1)
    if why is not None:
        raise NotReducible(why)
    path = state.path
    if v1 == path[0]:
        succ, new_path = path[1], path[1:]
    else:
        succ, new_path = path[-2], path[:-1]
    nbrs = state.neighbors(v1)
    others = sorted(nbrs - {succ})
    d = len(nbrs)
    kept = _trim(state.lists[v1], d)
    lists = state.lists

    def take(v, colors):
        return frozenset(colors) & lists[v]

    isolated = [c for c in sorted(kept) if _down(c) not in kept and _up(c) not in kept]
    anchor = rotation = None
    if isolated:
        case = "ii"

        def cost(c):
            return len(take(succ, {_down(c), _up(c)})) + sum(c in lists[x] for x in others)

        anchor = min(isolated, key=lambda c: (cost(c), c))
        deltas = {succ: take(succ, {_down(anchor), _up(anchor)})}
        deltas.update({x: take(x, {anchor}) for x in others})
    elif d == 1:
        case = "i"
        # no isolated color: the two colors are consecutive
        deltas = {succ: take(succ, kept)}
    else:
        case = "iii"
        starts = [
            s for s in sorted(kept)
            if _up(s) in kept and _down(s) not in kept and _down(_down(s)) not in kept
        ]
        if not starts:
            raise NotReducible(f"no rotation places a run of {sorted(kept)} at colors 1, 2")
        anchor = starts[0]
        rotation = _rotation_to_one(anchor)
        one, two = anchor, _up(anchor)
        deltas = {succ: take(succ, {one, two})}
        deltas.update({x: take(x, {one}) for x in others})

    new_lists = {v: lst for v, lst in lists.items() if v != v1}
    for v, gone in deltas.items():
        new_lists[v] = lists[v] - gone
    deltas = {v: g for v, g in deltas.items() if g}
    record = ReductionRecord(
        v1, succ, case, kept, tuple(sorted(nbrs)), deltas, anchor, rotation
    )
    return ReductionState(state.graph, new_path, new_lists, state.k, state.q), record


def rule_violations(before: ReductionState, after: ReductionState, v1: int) -> list[str]:
    """Every way ``after`` fails to be a reduction of ``before`` on ``v1``."""
    problems = []
    path = before.path
    if path and v1 == path[0]:
        succ, expect = path[1], path[1:]
    elif path and v1 == path[-1]:
        succ, expect = path[-2], path[:-1]
    else:
        return [f"{v1} is not an endpoint"]
    if after.path != expect:
        problems.append("path is not P - v1")
    nbrs = before.neighbors(v1)
    for x in expect:
        old, new = before.lists[x], after.lists[x]
        if not new <= old:
            problems.append(f"list of {x} gained colors")
        if x == succ:
            if len(new) < len(old) - 2:
                problems.append(f"successor {x} lost more than two colors")
            gone = old - new
            if len(gone) == 2 and adj_union_size(*sorted(gone)) > 5:
                problems.append(f"successor {x} lost {sorted(gone)}, too far apart")
        elif x in nbrs:
            if len(new) < len(old) - 1:
                problems.append(f"neighbour {x} lost more than one color")
        elif new != old:
            problems.append(f"non-neighbour {x} changed")
    return problems


# --- exact list coloring -----------------------------------------------------------

def _check_hamiltonian(h: Graph, path: Sequence[int]) -> None:
    if sorted(path) != list(range(h.n)):
        raise NotHamiltonianPath("path does not visit every vertex exactly once")
    for a, b in zip(path, path[1:]):
        if not h.has_edge(a, b):
            raise NotHamiltonianPath(f"consecutive vertices {a}, {b} are not adjacent")


def list_cbc_solve(
    h: Graph, path: Sequence[int], lists: Mapping[int, frozenset[int]], q: int = 2, k: int = K7
) -> dict[int, int] | None:
    """An exact list coloring: proper on ``h``, circular-q on ``path``."""
    _check_hamiltonian(h, path)
    bb = frozenset(norm_edge(a, b) for a, b in zip(path, path[1:]))
    colors = search(BackbonePair(h, bb), q, k, domains=[lists[v] for v in range(h.n)])
    return None if colors is None else dict(enumerate(colors))


def solve_state(state: ReductionState) -> dict[int, int] | None:
    keep = sorted(state.path)
    index = {old: new for new, old in enumerate(keep)}
    sub = state.graph.induced(keep)
    res = list_cbc_solve(
        sub, [index[v] for v in state.path], {index[v]: state.lists[v] for v in keep},
        state.q, state.k,
    )
    return None if res is None else {keep[i]: c for i, c in res.items()}


# --- schedules ---------------------------------------------------------------------

@dataclass(frozen=True)
class Fail:
    step: int
    vertex: int
    reason: str


@dataclass(frozen=True)
class Extension:
    colors: dict[int, int]
    trace: tuple[ReductionRecord, ...] = field(default=())


def forward_schedule(path: Sequence[int]) -> list[int]:
    return list(path[:-1])


def toward_schedule(path: Sequence[int], p: int) -> list[int]:
    """Reduce from the first vertex up to ``path[p-1]``, then from the last
    vertex down to ``path[p+1]``, leaving ``path[p]``."""
    return list(path[:p]) + list(reversed(path[p + 1:]))


def extend_along_path(
    h: Graph, path: Sequence[int], lists: Mapping[int, frozenset[int]], order: Sequence[int]
) -> Extension | Fail:
    """Run the scheduled reductions, color the survivor, then undo them."""
    _check_hamiltonian(h, path)
    if len(order) != len(path) - 1 or len(set(order)) != len(order):
        raise ValueError("schedule must remove all but one vertex, each once")
    state = ReductionState(h, tuple(path), {v: frozenset(lists[v]) for v in path})
    records = []
    for step, v in enumerate(order):
        try:
            state, rec = reduce_endpoint(state, v)
        except NotReducible as exc:
            return Fail(step, v, str(exc))
        records.append(rec)
    (last,) = state.path
    if not state.lists[last]:
        return Fail(len(order), last, "empty list on the last vertex")
    psi = {last: min(state.lists[last])}
    for rec in reversed(records):
        psi[rec.vertex] = rec.extend(psi)
    return Extension(psi, tuple(records))
