"""Simple graphs, backbone pairs and their text formats.

Vertices are dense ids ``0..n-1``. Edges are stored as sorted pairs
``(u, v)`` with ``u < v``. Both :class:`Graph` and :class:`BackbonePair`
are immutable; deletions build a new value plus the list of surviving
original ids so colorings can be lifted back.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import networkx as nx

from .errors import BackboneNotSubgraph, InvalidEdge, InvalidVertex

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]
    adj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            if u == v:
                raise InvalidEdge(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidVertex(f"edge ({u}, {v}) outside [0, {self.n})")
            if u > v:
                raise InvalidEdge(f"edge ({u}, {v}) is not normalized")
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in nbrs))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            stack, comp = [s], []
            while stack:
                u = stack.pop()
                comp.append(u)
                for w in self.adj[u]:
                    if not seen[w]:
                        seen[w] = True
                        stack.append(w)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def induced(self, keep: Sequence[int]) -> "Graph":
        """Subgraph induced by ``keep``; new id ``i`` is old id ``keep[i]``."""
        index = {old: new for new, old in enumerate(keep)}
        edges = frozenset(
            norm_edge(index[u], index[v]) for u, v in self.edges if u in index and v in index
        )
        return Graph(len(keep), edges)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.sorted_edges())
        return g


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Normalize an edge list into a :class:`Graph`; duplicates are merged."""
    if n < 0:
        raise InvalidVertex(f"negative vertex count {n}")
    out = set()
    for e in edges:
        u, v = int(e[0]), int(e[1])
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidVertex(f"edge ({u}, {v}) outside [0, {n})")
        if u == v:
            raise InvalidEdge(f"loop at vertex {u}")
        out.add(norm_edge(u, v))
    return Graph(n, frozenset(out))


class BackboneKind(enum.Enum):
    MATCHING = "Matching"
    LINEAR_FOREST = "LinearForest"
    FOREST = "Forest"
    TREE = "Tree"
    GENERAL = "General"


@dataclass(frozen=True)
class BackbonePair:
    graph: Graph
    backbone: frozenset[Edge]
    badj: tuple[frozenset[int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        missing = sorted(self.backbone - self.graph.edges)
        if missing:
            raise BackboneNotSubgraph(f"backbone edges not in graph: {missing}")
        nbrs: list[set[int]] = [set() for _ in range(self.graph.n)]
        for u, v in self.backbone:
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "badj", tuple(frozenset(s) for s in nbrs))

    @property
    def n(self) -> int:
        return self.graph.n

    def d_g(self, u: int) -> int:
        return len(self.graph.adj[u])

    def d_h(self, u: int) -> int:
        return len(self.badj[u])

    def total_degree(self, u: int) -> int:
        return self.d_g(u) + 2 * self.d_h(u)

    def partner(self, u: int) -> int | None:
        """The backbone neighbour of ``u`` when it has exactly one."""
        if len(self.badj[u]) == 1:
            return next(iter(self.badj[u]))
        return None

    def delete(self, vertices: Iterable[int]) -> tuple["BackbonePair", tuple[int, ...]]:
        gone = set(vertices)
        keep = tuple(v for v in range(self.graph.n) if v not in gone)
        return self.induced(keep), keep

    def induced(self, keep: Sequence[int]) -> "BackbonePair":
        index = {old: new for new, old in enumerate(keep)}
        g = self.graph.induced(keep)
        bb = frozenset(
            norm_edge(index[u], index[v]) for u, v in self.backbone if u in index and v in index
        )
        return BackbonePair(g, bb)


def attach_backbone(g: Graph, backbone: Iterable[Sequence[int]]) -> BackbonePair:
    edges = set()
    for e in backbone:
        u, v = int(e[0]), int(e[1])
        in_range = 0 <= u < g.n and 0 <= v < g.n
        if not in_range or u == v or not g.has_edge(u, v):
            raise BackboneNotSubgraph(f"backbone edge ({u}, {v}) is not an edge of the graph")
        edges.add(norm_edge(u, v))
    return BackbonePair(g, frozenset(edges))


def _backbone_is_acyclic(p: BackbonePair) -> tuple[bool, int]:
    """Return (acyclic, number of components) of the spanning backbone."""
    parent = list(range(p.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    acyclic = True
    comps = p.n
    for u, v in p.backbone:
        ru, rv = find(u), find(v)
        if ru == rv:
            acyclic = False
        else:
            parent[ru] = rv
            comps -= 1
    return acyclic, comps


def backbone_kind(p: BackbonePair) -> BackboneKind:
    max_deg = max((len(b) for b in p.badj), default=0)
    if max_deg <= 1:
        return BackboneKind.MATCHING
    acyclic, comps = _backbone_is_acyclic(p)
    if not acyclic:
        return BackboneKind.GENERAL
    if max_deg <= 2:
        return BackboneKind.LINEAR_FOREST
    if comps == 1:
        return BackboneKind.TREE
    return BackboneKind.FOREST


def is_linear_forest(p: BackbonePair) -> bool:
    return backbone_kind(p) in (BackboneKind.MATCHING, BackboneKind.LINEAR_FOREST)


def total_degree_deficient(p: BackbonePair, k: int) -> list[int]:
    """Vertices with ``d_G(u) + 2 d_H(u) < k``; each can be colored last greedily."""
    if k < 1:
        raise ValueError("k must be at least 1")
    return [u for u in range(p.n) if p.total_degree(u) < k]


def backbone_paths(p: BackbonePair) -> list[list[int]]:
    """Components of a linear-forest backbone as vertex sequences.

    Each path is listed from its smaller-id endpoint; isolated vertices are
    singleton paths. Order is by first vertex.
    """
    from .errors import BackboneNotLinearForest

    if not is_linear_forest(p):
        raise BackboneNotLinearForest("backbone is not a linear forest")
    seen = [False] * p.n
    paths = []
    for s in range(p.n):
        if seen[s] or len(p.badj[s]) == 2:
            continue
        path = [s]
        seen[s] = True
        prev, cur = None, s
        while True:
            nxt = [w for w in p.badj[cur] if w != prev]
            if not nxt:
                break
            prev, cur = cur, nxt[0]
            seen[cur] = True
            path.append(cur)
        if path[-1] < path[0]:
            path.reverse()
        paths.append(path)
    paths.sort(key=lambda pth: min(pth))
    return paths


# --- text formats -------------------------------------------------------------

def to_graph6(g: Graph) -> str:
    return nx.to_graph6_bytes(g.to_networkx(), header=False).decode("ascii").strip()


def from_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    h = nx.from_graph6_bytes(s.encode("ascii"))
    return build_graph(h.number_of_nodes(), h.edges())


def read_graph6_file(path) -> list[Graph]:
    with open(path) as fh:
        return [from_graph6(line) for line in fh if line.strip()]


def parse_backbone(text: str) -> list[Edge]:
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return edges


def format_backbone(edges: Iterable[Edge]) -> str:
    return "".join(f"{u} {v}\n" for u, v in sorted(edges))
