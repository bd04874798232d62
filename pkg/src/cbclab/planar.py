"""Plane embeddings as rotation systems, faces, duals and islands."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

import networkx as nx

from .errors import InconsistentRotation, PreconditionC4
from .graph import Edge, Graph, build_graph, norm_edge

Dart = tuple[int, int]


@dataclass(frozen=True)
class RotationSystem:
    """Cyclic order of neighbours around every vertex."""

    n: int
    rotations: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rotations) != self.n:
            raise InconsistentRotation(f"expected {self.n} rotations, got {len(self.rotations)}")
        for u, rot in enumerate(self.rotations):
            if len(set(rot)) != len(rot):
                raise InconsistentRotation(f"vertex {u} lists a neighbour twice")
            for v in rot:
                if not 0 <= v < self.n or v == u:
                    raise InconsistentRotation(f"vertex {u} lists invalid neighbour {v}")
                if u not in self.rotations[v]:
                    raise InconsistentRotation(f"edge {u}-{v} missing at {v}")

    @property
    def graph(self) -> Graph:
        return build_graph(self.n, ((u, v) for u, rot in enumerate(self.rotations) for v in rot))

    def matches(self, g: Graph) -> bool:
        return self.n == g.n and all(
            set(rot) == set(g.adj[u]) for u, rot in enumerate(self.rotations)
        )

    def restrict(self, keep: Sequence[int]) -> "RotationSystem":
        """Embedding induced on the vertices ``keep`` (relabelled 0..len-1)."""
        index = {old: new for new, old in enumerate(keep)}
        rots = tuple(
            tuple(index[v] for v in self.rotations[old] if v in index) for old in keep
        )
        return RotationSystem(len(keep), rots)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "rotations": [list(r) for r in self.rotations]})

    @classmethod
    def from_json(cls, text: str) -> "RotationSystem":
        data = json.loads(text)
        return cls(int(data["n"]), tuple(tuple(int(x) for x in r) for r in data["rotations"]))


@dataclass(frozen=True)
class NonplanarWitness:
    """Edges of a Kuratowski subdivision (K5 or K3,3) found in the graph."""

    edges: tuple[Edge, ...]

    def to_json(self) -> str:
        return json.dumps({"nonplanar_witness": [list(e) for e in self.edges]})


def planarity_embed(g: Graph) -> RotationSystem | NonplanarWitness:
    ok, cert = nx.check_planarity(g.to_networkx(), counterexample=True)
    if not ok:
        return NonplanarWitness(tuple(sorted(norm_edge(u, v) for u, v in cert.edges())))
    rots = tuple(
        tuple(cert.neighbors_cw_order(v)) if g.adj[v] else () for v in range(g.n)
    )
    return RotationSystem(g.n, rots)


def is_planar(g: Graph) -> bool:
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    return nx.check_planarity(g.to_networkx())[0]


@dataclass(frozen=True)
class FaceSet:
    """Faces of an embedding as closed boundary walks of darts.

    An isolated vertex contributes one face with an empty walk so that Euler's
    formula holds componentwise.
    """

    rotation: RotationSystem
    walks: tuple[tuple[Dart, ...], ...]
    isolated: dict[int, int] = field(default_factory=dict)  # face id -> vertex
    dart_face: dict[Dart, int] = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.walks)

    def degree(self, f: int) -> int:
        return len(self.walks[f])

    def degrees(self) -> list[int]:
        return [len(w) for w in self.walks]

    def count(self, d: int) -> int:
        return sum(1 for w in self.walks if len(w) == d)

    @property
    def f3(self) -> int:
        return self.count(3)

    @property
    def f4(self) -> int:
        return self.count(4)

    @property
    def f5(self) -> int:
        return self.count(5)

    def vertices(self, f: int) -> set[int]:
        if f in self.isolated:
            return {self.isolated[f]}
        return {u for u, _ in self.walks[f]}

    def edge_faces(self, u: int, v: int) -> tuple[int, int]:
        """The faces on the two sides of edge ``uv`` (equal for a bridge)."""
        return self.dart_face[(u, v)], self.dart_face[(v, u)]

    def triangles(self) -> list[int]:
        return [f for f, w in enumerate(self.walks) if len(w) == 3]

    def boundary_vertices(self, f: int) -> list[int]:
        return [u for u, _ in self.walks[f]]


def faces(rs: RotationSystem) -> FaceSet:
    pos = [{v: i for i, v in enumerate(rot)} for rot in rs.rotations]
    dart_face: dict[Dart, int] = {}
    walks = []
    darts = sorted((u, v) for u, rot in enumerate(rs.rotations) for v in rot)
    for start in darts:
        if start in dart_face:
            continue
        fid = len(walks)
        walk = []
        cur = start
        while True:
            if cur in dart_face:
                raise InconsistentRotation(f"dart {cur} traced twice")
            dart_face[cur] = fid
            walk.append(cur)
            u, v = cur
            rot = rs.rotations[v]
            w = rot[(pos[v][u] + 1) % len(rot)]
            cur = (v, w)
            if cur == start:
                break
        walks.append(tuple(walk))
    isolated = {}
    for v, rot in enumerate(rs.rotations):
        if not rot:
            isolated[len(walks)] = v
            walks.append(())
    return FaceSet(rs, tuple(walks), isolated, dart_face)


def euler_ok(g: Graph, fs: FaceSet) -> bool:
    """Every component satisfies V - E + F = 2 (genus zero)."""
    comp_of = {}
    for i, comp in enumerate(g.components()):
        for v in comp:
            comp_of[v] = i
    ncomp = len(set(comp_of.values()))
    v_count = [0] * ncomp
    e_count = [0] * ncomp
    f_count = [0] * ncomp
    for v in range(g.n):
        v_count[comp_of[v]] += 1
    for u, _ in g.edges:
        e_count[comp_of[u]] += 1
    for f in range(len(fs)):
        some = next(iter(fs.vertices(f)))
        f_count[comp_of[some]] += 1
    return all(v_count[i] - e_count[i] + f_count[i] == 2 for i in range(ncomp))


@dataclass(frozen=True)
class DualMultigraph:
    """One vertex per face, one edge per primal edge (loops for bridges)."""

    num_faces: int
    edges: tuple[tuple[int, int, Edge], ...]

    def degree(self, f: int) -> int:
        return sum((a == f) + (b == f) for a, b, _ in self.edges)


def dual(rs: RotationSystem, fs: FaceSet) -> DualMultigraph:
    out = []
    for u, rot in enumerate(rs.rotations):
        for v in rot:
            if u < v:
                a, b = fs.edge_faces(u, v)
                out.append((a, b, (u, v)))
    out.sort(key=lambda t: t[2])
    return DualMultigraph(len(fs), tuple(out))


@dataclass(frozen=True)
class IslandDecomposition:
    r: int
    components: tuple[tuple[int, ...], ...]
    acyclic: tuple[bool, ...]
    all_degree_r: tuple[bool, ...]
    bad: tuple[bool, ...]
    component_of: dict[int, int]
    gamma_face: dict[int, frozenset[int]]
    gamma_vertex: dict[int, frozenset[int]]

    @property
    def gamma(self) -> int:
        return sum(self.bad)

    def bad_components(self) -> list[int]:
        return [i for i, b in enumerate(self.bad) if b]


def islands(dm: DualMultigraph, fs: FaceSet, r: int) -> IslandDecomposition:
    """Components of the dual minus all 3-faces, flagged bad when acyclic with
    every face of dual degree exactly ``r``."""
    if r not in (4, 5):
        raise ValueError("island degree parameter must be 4 or 5")
    deg = fs.degrees()
    keep = [f for f in range(dm.num_faces) if deg[f] != 3]
    parent = {f: f for f in keep}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    inner = [(a, b) for a, b, _ in dm.edges if deg[a] != 3 and deg[b] != 3]
    for a, b in inner:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    groups: dict[int, list[int]] = {}
    for f in keep:
        groups.setdefault(find(f), []).append(f)
    comps = sorted((tuple(sorted(g)) for g in groups.values()), key=lambda c: c[0])
    component_of = {f: i for i, c in enumerate(comps) for f in c}
    edge_count = [0] * len(comps)
    for a, _ in inner:
        edge_count[component_of[a]] += 1
    acyclic = tuple(edge_count[i] == len(c) - 1 for i, c in enumerate(comps))
    all_r = tuple(all(deg[f] == r for f in c) for c in comps)
    bad = tuple(a and d for a, d in zip(acyclic, all_r))

    gamma_face: dict[int, set[int]] = {f: set() for f in range(dm.num_faces) if deg[f] == 3}
    for a, b, _ in dm.edges:
        for f, g in ((a, b), (b, a)):
            if deg[f] == 3 and deg[g] != 3 and bad[component_of[g]]:
                gamma_face[f].add(component_of[g])
    gamma_vertex: dict[int, set[int]] = {v: set() for v in range(fs.rotation.n)}
    for i, c in enumerate(comps):
        if bad[i]:
            for f in c:
                for v in fs.vertices(f):
                    gamma_vertex[v].add(i)
    return IslandDecomposition(
        r,
        tuple(comps),
        acyclic,
        all_r,
        bad,
        component_of,
        {f: frozenset(s) for f, s in gamma_face.items()},
        {v: frozenset(s) for v, s in gamma_vertex.items()},
    )


def every_edge_on_big_face(fs: FaceSet) -> bool | Edge:
    """True when every edge bounds some face of degree > 3, else a witness edge.

    Only meaningful for C4-free graphs; calling it on a graph with a 4-cycle
    raises :class:`PreconditionC4`.
    """
    from .classes import has_cycle_of_length

    g = fs.rotation.graph
    cyc = has_cycle_of_length(g, 4)
    if cyc is not None:
        raise PreconditionC4(f"4-cycle {cyc}")
    for u, v in g.sorted_edges():
        a, b = fs.edge_faces(u, v)
        if fs.degree(a) <= 3 and fs.degree(b) <= 3:
            return (u, v)
    return True


@dataclass(frozen=True)
class Embedded:
    """A graph together with an embedding and its traced faces."""

    graph: Graph
    rotation: RotationSystem
    faces: FaceSet

    def islands(self, r: int) -> IslandDecomposition:
        return islands(dual(self.rotation, self.faces), self.faces, r)


def embed(g: Graph, rs: RotationSystem | None = None) -> Embedded | NonplanarWitness:
    """Use the caller's rotation system when given, else compute one."""
    if rs is None:
        res = planarity_embed(g)
        if isinstance(res, NonplanarWitness):
            return res
        rs = res
    elif not rs.matches(g):
        raise InconsistentRotation("rotation system does not match the graph")
    fs = faces(rs)
    if not euler_ok(g, fs):
        raise InconsistentRotation("rotation system is not a plane embedding")
    return Embedded(g, rs, fs)
