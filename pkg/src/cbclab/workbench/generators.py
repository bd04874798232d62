"""Seeded random instances and backbone samplers.

All randomness goes through a private :class:`random.Random` seeded by the
caller, so equal seeds reproduce equal outputs.
"""
from __future__ import annotations

import random
from typing import Iterable, Iterator

from ..audit import plane_embeddings
from ..classes import adjacent_3faces, has_cycle_of_length
from ..errors import GiveUp, KindUnavailable, PreconditionViolated
from ..graph import BackboneKind, BackbonePair, Edge, Graph, norm_edge
from ..planar import RotationSystem, faces, is_planar, planarity_embed
from .canon import canonical_code

GEN_FILTERS = ("planar", "c4_free", "c5_free", "no_adjacent_3faces")
SPANNING_TREE = "SpanningTree"


def _ok(g: Graph, filters: frozenset[str]) -> bool:
    if "c4_free" in filters and has_cycle_of_length(g, 4):
        return False
    if "c5_free" in filters and has_cycle_of_length(g, 5):
        return False
    if not is_planar(g):
        return False
    if "no_adjacent_3faces" in filters:
        return adjacent_3faces(faces(planarity_embed(g))) is None
    return True


def random_planar(
    n: int, m: int, filters: Iterable[str] = (), seed: int = 0, retries: int = 50
) -> Graph:
    """A connected planar graph with ``m`` edges: a random spanning tree, then
    random extra edges kept only when the graph stays in the filters.

    With ``no_adjacent_3faces`` the guarantee refers to the embedding that
    :func:`cbclab.planar.planarity_embed` returns for the result.
    """
    fs = frozenset(filters)
    unknown = fs - set(GEN_FILTERS)
    if unknown:
        raise ValueError(f"unknown filters {sorted(unknown)}")
    if n < 1:
        raise GiveUp("need at least one vertex")
    if m < n - 1:
        raise GiveUp(f"a connected graph on {n} vertices needs {n - 1} edges")
    if m > n * (n - 1) // 2 or (n >= 3 and m > 3 * n - 6):
        raise GiveUp(f"no planar graph has n={n} and m={m}")
    rng = random.Random(seed)
    for _ in range(retries):
        perm = list(range(n))
        rng.shuffle(perm)
        edges = {norm_edge(perm[i], perm[rng.randrange(i)]) for i in range(1, n)}
        g = Graph(n, frozenset(edges))
        if not _ok(g, fs):
            continue  # only possible for the face filter on trees, never in practice
        rest = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
        rng.shuffle(rest)
        for e in rest:
            if g.m >= m:
                break
            cand = Graph(n, g.edges | {e})
            if _ok(cand, fs):
                g = cand
        if g.m == m:
            return g
    raise GiveUp(f"no graph with n={n}, m={m} and filters {sorted(fs)} after {retries} tries")


def _components(n: int):
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    return parent, find


def sample_backbone(g: Graph, kind, seed: int = 0, density: float = 1.0) -> BackbonePair:
    """A random maximal matching, maximal linear forest, or spanning tree.

    With ``density`` below 1 a linear forest keeps each admissible edge only
    with that probability, so non-maximal forests are reachable too.
    """
    name = kind.value if isinstance(kind, BackboneKind) else str(kind)
    if name == BackboneKind.TREE.value:
        name = SPANNING_TREE
    rng = random.Random(seed)
    edges = g.sorted_edges()
    rng.shuffle(edges)
    chosen: set[Edge] = set()
    if name == BackboneKind.MATCHING.value:
        used: set[int] = set()
        for u, v in edges:
            if u not in used and v not in used:
                chosen.add((u, v))
                used |= {u, v}
    elif name in (BackboneKind.LINEAR_FOREST.value, SPANNING_TREE):
        parent, find = _components(g.n)
        deg = [0] * g.n
        for u, v in edges:
            ru, rv = find(u), find(v)
            if ru == rv:
                continue
            if name != SPANNING_TREE and (deg[u] >= 2 or deg[v] >= 2):
                continue
            if name != SPANNING_TREE and density < 1.0 and rng.random() >= density:
                continue
            parent[ru] = rv
            deg[u] += 1
            deg[v] += 1
            chosen.add((u, v))
        if name == SPANNING_TREE and len(chosen) != g.n - 1:
            raise KindUnavailable("graph is disconnected, it has no spanning tree")
    else:
        raise KindUnavailable(f"cannot sample a backbone of kind {name}")
    return BackbonePair(g, frozenset(chosen))


def all_maximal_matchings(g: Graph, cap: int = 8) -> Iterator[frozenset[Edge]]:
    """Every maximal matching of ``g``, in lexicographic order of edge choices."""
    if g.n > cap:
        raise KindUnavailable(f"streaming all maximal matchings is limited to n <= {cap}")
    edges = g.sorted_edges()

    def rec(i: int, used: frozenset[int], chosen: tuple[Edge, ...]):
        if i == len(edges):
            if all(u in used or v in used for u, v in edges):
                yield frozenset(chosen)
            return
        u, v = edges[i]
        if u not in used and v not in used:
            yield from rec(i + 1, used | {u, v}, chosen + ((u, v),))
        yield from rec(i + 1, used, chosen)

    yield from rec(0, frozenset(), ())


def pair_code(p: BackbonePair) -> tuple[int, ...]:
    """Canonical code of a graph with marked backbone edges."""
    n = p.n
    w = [[0] * n for _ in range(n)]
    for u, v in p.graph.edges:
        w[u][v] = w[v][u] = 2 if (u, v) in p.backbone else 1
    return (n,) + canonical_code(w)


def inequivalent(pairs: Iterable[BackbonePair]) -> list[BackbonePair]:
    """Drop pairs isomorphic (as graph plus marked backbone) to an earlier one."""
    seen, out = set(), []
    for p in pairs:
        c = pair_code(p)
        if c not in seen:
            seen.add(c)
            out.append(p)
    return out


LF_DENSITIES = (1.0, 0.75, 0.5, 0.25)


def sampled_backbones(g: Graph, kind, count: int, seed: int = 0, tries: int = 60) -> list[BackbonePair]:
    """Up to ``count`` pairwise inequivalent sampled backbones of ``kind``.

    Linear forests start maximal; after the first third of the tries the
    density cycles downward to reach sub-forests.
    """
    name = kind.value if isinstance(kind, BackboneKind) else str(kind)
    thin = name == BackboneKind.LINEAR_FOREST.value
    out, seen = [], set()
    for t in range(tries):
        density = LF_DENSITIES[t % len(LF_DENSITIES)] if thin and t >= tries // 3 else 1.0
        p = sample_backbone(g, kind, seed * 1_000_003 + t, density)
        c = pair_code(p)
        if c not in seen:
            seen.add(c)
            out.append(p)
            if len(out) == count:
                break
    return out


def thm2_embedding(g: Graph, budget: int = 5_000) -> RotationSystem | None:
    """A plane embedding of ``g`` with no two triangular faces sharing an edge,
    or None when none was found within ``budget`` rotation systems."""
    if not is_planar(g):
        return None
    rs = planarity_embed(g)
    if adjacent_3faces(faces(rs)) is None:
        return rs
    try:
        for cand in plane_embeddings(g, budget):
            if adjacent_3faces(faces(cand)) is None:
                return cand
    except PreconditionViolated:
        return None
    return None
