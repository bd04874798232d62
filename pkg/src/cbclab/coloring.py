"""Circular and linear backbone colorings: checks, available colors, solvers.

Colors are ``1..k``; ``0`` marks an unassigned vertex in a partial coloring.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InstanceTooLarge, PartialColoring, SearchExhausted
from .graph import BackbonePair, Edge, Graph

UNASSIGNED = 0


def adj_set(c: int, k: int, q: int = 2) -> set[int]:
    """Colors too close to ``c`` on the circle of ``k`` colors for separation ``q``.

    For ``q = 2`` these are the colors at circular distance at most one.
    """
    if not 1 <= c <= k:
        raise ValueError(f"color {c} outside [1, {k}]")
    return {d for d in range(1, k + 1) if abs(c - d) < q or abs(c - d) > k - q}


@dataclass(frozen=True)
class CircularColoring:
    q: int
    k: int
    colors: tuple[int, ...]

    def is_total(self) -> bool:
        return all(c != UNASSIGNED for c in self.colors)

    def to_dict(self) -> dict:
        return {"q": self.q, "k": self.k, "colors": list(self.colors)}


@dataclass(frozen=True)
class Violation:
    edge: Edge
    reason: str  # improper | backbone_too_close | backbone_too_far


def verify(p: BackbonePair, col: CircularColoring, circular: bool = True) -> Violation | None:
    """First violated edge in sorted edge order, or None when valid.

    With ``circular=False`` the backbone condition is the linear one,
    ``|c(u) - c(v)| >= q`` only.
    """
    colors = col.colors
    if len(colors) != p.n:
        raise PartialColoring(f"coloring has {len(colors)} entries for {p.n} vertices")
    for u, c in enumerate(colors):
        if c == UNASSIGNED:
            raise PartialColoring(f"vertex {u} is unassigned")
        if not 1 <= c <= col.k:
            raise ValueError(f"vertex {u} has color {c} outside [1, {col.k}]")
    for u, v in p.graph.sorted_edges():
        diff = abs(colors[u] - colors[v])
        if diff == 0:
            return Violation((u, v), "improper")
        if (u, v) in p.backbone:
            if diff < col.q:
                return Violation((u, v), "backbone_too_close")
            if circular and diff > col.k - col.q:
                return Violation((u, v), "backbone_too_far")
    return None


def available(p: BackbonePair, colors: Sequence[int], u: int, k: int, q: int = 2) -> set[int]:
    """Colors still free for the uncolored vertex ``u`` under a partial coloring."""
    if colors[u] != UNASSIGNED:
        raise ValueError(f"vertex {u} is already colored")
    out = set(range(1, k + 1))
    for w in p.graph.adj[u]:
        c = colors[w]
        if c == UNASSIGNED:
            continue
        if w in p.badj[u]:
            out -= adj_set(c, k, q)
        else:
            out.discard(c)
    return out


# --- exact search ---------------------------------------------------------------

def _blocked_masks(k: int, q: int, circular: bool) -> list[int]:
    """``masks[c]`` has bit ``d`` set when ``d`` may not sit on a backbone edge with ``c``."""
    masks = [0] * (k + 1)
    for c in range(1, k + 1):
        m = 0
        for d in range(1, k + 1):
            diff = abs(c - d)
            if diff < q or (circular and diff > k - q):
                m |= 1 << d
        masks[c] = m
    return masks


def smallest_last_order(g: Graph, vertices: Iterable[int]) -> list[int]:
    """Degeneracy order restricted to ``vertices``; among ties the highest id is
    peeled first, so lower ids come earlier in the returned order."""
    verts = set(vertices)
    deg = {v: len(g.adj[v] & verts) for v in verts}
    removed = []
    while verts:
        v = min(verts, key=lambda x: (deg[x], -x))
        removed.append(v)
        verts.remove(v)
        for w in g.adj[v]:
            if w in verts:
                deg[w] -= 1
    return removed[::-1]


def search(
    p: BackbonePair,
    q: int,
    k: int,
    circular: bool = True,
    domains: Sequence[Iterable[int]] | None = None,
    break_symmetry: bool = True,
) -> list[int] | None:
    """Backtracking search for a coloring; returns colors by vertex or None.

    At each node the uncolored vertex with the fewest remaining colors is
    chosen (ties by smallest-last position), colors tried in ascending order.
    Connected components are solved independently. Without explicit domains the
    color space is symmetric, so each component's first vertex gets color 1
    (circular) or a color in the lower half (linear).
    """
    if k < 1:
        return None if p.n else []
    full = sum(1 << c for c in range(1, k + 1))
    if domains is None:
        base = [full] * p.n
    else:
        base = [sum(1 << c for c in dom if 1 <= c <= k) for dom in domains]
        break_symmetry = False
    blocked = _blocked_masks(k, q, circular)
    colors = [UNASSIGNED] * p.n
    adj = p.graph.adj
    badj = p.badj

    for comp in p.graph.components():
        order = smallest_last_order(p.graph, comp)
        rank = {v: i for i, v in enumerate(order)}
        dom = {v: base[v] for v in comp}
        if any(d == 0 for d in dom.values()):
            return None
        if break_symmetry:
            first = order[0]
            if circular:
                dom[first] &= 1 << 1
            else:
                dom[first] &= sum(1 << c for c in range(1, (k + 1) // 2 + 1))

        def solve(uncolored: set[int], dom: dict[int, int]) -> bool:
            if not uncolored:
                return True
            u = min(uncolored, key=lambda x: (bin(dom[x]).count("1"), rank[x]))
            mask = dom[u]
            rest = uncolored - {u}
            for c in range(1, k + 1):
                if not mask >> c & 1:
                    continue
                nd = dict(dom)
                ok = True
                for w in adj[u]:
                    if w in rest:
                        nd[w] &= ~(blocked[c] if w in badj[u] else 1 << c)
                        if nd[w] == 0:
                            ok = False
                            break
                if not ok:
                    continue
                colors[u] = c
                if solve(rest, nd):
                    return True
                colors[u] = UNASSIGNED
            return False

        if not solve(set(comp), dom):
            return None
    return colors


def solve_k(p: BackbonePair, q: int, k: int) -> CircularColoring | None:
    """A circular q-backbone k-coloring, or None when none exists."""
    colors = search(p, q, k, circular=True)
    return None if colors is None else CircularColoring(q, k, tuple(colors))


def solve_bbc_k(p: BackbonePair, q: int, k: int) -> CircularColoring | None:
    colors = search(p, q, k, circular=False)
    return None if colors is None else CircularColoring(q, k, tuple(colors))


def chromatic_number(g: Graph) -> int:
    if g.n == 0:
        return 0
    p = BackbonePair(g, frozenset())
    k = 1
    while search(p, 1, k) is None:
        k += 1
    return k


def _cutoff(p: BackbonePair, q: int) -> int:
    return q * max(p.n, 1) + 2


def cbc_number(p: BackbonePair, q: int = 2) -> int:
    """Smallest k admitting a circular q-backbone k-coloring."""
    k = max(chromatic_number(p.graph), 2 * q if p.backbone else 0, 1 if p.n else 0)
    limit = _cutoff(p, q)
    while k <= limit:
        if search(p, q, k, circular=True) is not None:
            return k
        k += 1
    raise SearchExhausted(f"no coloring found up to k={limit}")


def bbc_number(p: BackbonePair, q: int = 2) -> int:
    """Smallest k admitting a linear q-backbone k-coloring."""
    k = max(chromatic_number(p.graph), q + 1 if p.backbone else 0, 1 if p.n else 0)
    limit = _cutoff(p, q)
    while k <= limit:
        if search(p, q, k, circular=False) is not None:
            return k
        k += 1
    raise SearchExhausted(f"no coloring found up to k={limit}")


def odd_color_witness(p: BackbonePair) -> CircularColoring:
    """Optimal proper coloring mapped onto odd colors, a 2-backbone
    (2*chi - 1)-coloring for any backbone."""
    chi = chromatic_number(p.graph)
    colors = search(BackbonePair(p.graph, frozenset()), 1, chi)
    assert colors is not None
    return CircularColoring(2, max(2 * chi - 1, 1), tuple(2 * c - 1 for c in colors))


# --- brute-force oracle -----------------------------------------------------------

ORACLE_CAP = 8
_BLOCK = 1 << 20


def brute_force(
    p: BackbonePair, q: int, k: int, circular: bool = True, cap: int = ORACLE_CAP
) -> CircularColoring | None:
    """Exhaustive scan of all k**n assignments in lexicographic order.

    Shares no code with :func:`search`; returns the first valid assignment.
    """
    n = p.n
    if n > cap:
        raise InstanceTooLarge(f"n={n} exceeds oracle cap {cap}")
    if n == 0:
        return CircularColoring(q, k, ())
    if k < 1:
        return None
    plain = np.array([e for e in p.graph.sorted_edges() if e not in p.backbone], dtype=np.int64).reshape(-1, 2)
    bb = np.array(sorted(p.backbone), dtype=np.int64).reshape(-1, 2)
    weights = k ** np.arange(n - 1, -1, -1, dtype=np.int64)
    total = k ** n
    for start in range(0, total, _BLOCK):
        idx = np.arange(start, min(total, start + _BLOCK), dtype=np.int64)
        cols = (idx[:, None] // weights[None, :]) % k + 1
        ok = np.ones(len(idx), dtype=bool)
        if len(plain):
            ok &= np.all(cols[:, plain[:, 0]] != cols[:, plain[:, 1]], axis=1)
        if len(bb):
            diff = np.abs(cols[:, bb[:, 0]] - cols[:, bb[:, 1]])
            good = diff >= q
            if circular:
                good &= diff <= k - q
            ok &= np.all(good, axis=1)
        hits = np.flatnonzero(ok)
        if len(hits):
            return CircularColoring(q, k, tuple(int(c) for c in cols[hits[0]]))
    return None
