"""Exhaustive generation of small connected graphs up to isomorphism.

Every connected graph has a vertex whose removal leaves it connected, so all
connected graphs on ``n`` vertices arise from those on ``n - 1`` by adding a
vertex joined to a non-empty neighbour set. The supported filters are closed
under taking subgraphs, so they can prune during generation.
"""
from __future__ import annotations

import functools
import itertools
from typing import Iterable, Iterator

from ..classes import has_cycle_of_length
from ..errors import BudgetExceeded
from ..graph import Graph, norm_edge
from ..planar import is_planar
from .canon import canonical_labeling

FILTERS = ("planar", "c4_free", "c5_free")
DEFAULT_MAX_N = 9


def _passes(g: Graph, filters: frozenset[str]) -> bool:
    if "c4_free" in filters and has_cycle_of_length(g, 4):
        return False
    if "c5_free" in filters and has_cycle_of_length(g, 5):
        return False
    if "planar" in filters and g.m > 3 * g.n - 6 and g.n >= 3:
        return False
    if "planar" in filters and not is_planar(g):
        return False
    return True


def canonical_graph(g: Graph) -> tuple[tuple[int, ...], Graph]:
    """Canonical code of ``g`` and the relabeled representative."""
    w = [[1 if g.has_edge(u, v) else 0 for v in range(g.n)] for u in range(g.n)]
    code, order = canonical_labeling(w)
    pos = {v: i for i, v in enumerate(order)}
    return code, Graph(g.n, frozenset(norm_edge(pos[u], pos[v]) for u, v in g.edges))


@functools.lru_cache(maxsize=None)
def _level(n: int, filters: frozenset[str]) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, frozenset()),)
    seen: dict[tuple[int, ...], Graph] = {}
    new = n - 1
    for parent in _level(n - 1, filters):
        for r in range(1, n):
            for nbrs in itertools.combinations(range(new), r):
                g = Graph(n, parent.edges | {(u, new) for u in nbrs})
                code, rep = canonical_graph(g)
                if code in seen:
                    continue
                if _passes(g, filters):
                    seen[code] = rep
                else:
                    seen[code] = None  # remember rejections too
    return tuple(seen[c] for c in sorted(seen) if seen[c] is not None)


def enumerate_graphs(
    n: int, filters: Iterable[str] = (), max_n: int = DEFAULT_MAX_N
) -> Iterator[Graph]:
    """All connected graphs on ``n`` vertices up to isomorphism that pass
    ``filters``, each relabeled to its canonical form, in canonical order."""
    fs = frozenset(filters)
    unknown = fs - set(FILTERS)
    if unknown:
        raise ValueError(f"unknown filters {sorted(unknown)}; known: {FILTERS}")
    if n < 1:
        return iter(())
    if n > max_n:
        raise BudgetExceeded(f"exhaustive enumeration is capped at n={max_n}")
    return iter(_level(n, fs))


def enumerate_up_to(n_max: int, filters: Iterable[str] = ()) -> Iterator[Graph]:
    for n in range(1, n_max + 1):
        yield from enumerate_graphs(n, filters)
