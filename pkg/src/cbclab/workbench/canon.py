"""Canonical labeling of small edge-weighted graphs.

The canonical form is the lexicographically smallest upper-triangle reading
of the weight matrix over every labeling reachable by individualization and
refinement. Refinement is label-invariant, so the minimum taken over the
leaves of the search tree is the same for isomorphic inputs; for graphs of
up to a dozen vertices the tree stays small without automorphism pruning.
"""
from __future__ import annotations

from typing import Sequence

Matrix = Sequence[Sequence[int]]


def _refine(cells: list[list[int]], w: Matrix) -> list[list[int]]:
    while True:
        index = {v: i for i, cell in enumerate(cells) for v in cell}
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                row = w[v]
                sig = tuple(sorted((index[u], row[u]) for u in range(len(row)) if row[u] and u != v))
                groups.setdefault(sig, []).append(v)
            out.extend(groups[s] for s in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def canonical_labeling(w: Matrix, colors: Sequence[int] | None = None) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``(code, order)`` where ``order[i]`` is the vertex placed at position
    ``i``; isomorphic inputs (respecting ``colors``) give equal codes."""
    n = len(w)
    if n == 0:
        return (), ()
    if colors is None:
        cells = [list(range(n))]
    else:
        by: dict[int, list[int]] = {}
        for v in range(n):
            by.setdefault(colors[v], []).append(v)
        cells = [by[c] for c in sorted(by)]
    best: list = [None, None]

    def walk(cells):
        cells = _refine(cells, w)
        for i, cell in enumerate(cells):
            if len(cell) > 1:
                for v in cell:
                    walk(cells[:i] + [[v], [u for u in cell if u != v]] + cells[i + 1:])
                return
        order = [c[0] for c in cells]
        code = tuple(w[order[i]][order[j]] for i in range(n) for j in range(i + 1, n))
        if best[0] is None or code < best[0]:
            best[0], best[1] = code, tuple(order)

    walk(cells)
    color_code = () if colors is None else tuple(colors[v] for v in best[1])
    return color_code + best[0], best[1]


def canonical_code(w: Matrix, colors: Sequence[int] | None = None) -> tuple[int, ...]:
    return canonical_labeling(w, colors)[0]
