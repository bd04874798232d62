"""Graph-class detectors and classification against the three coloring theorems."""
from __future__ import annotations

from dataclasses import dataclass, field

from .graph import BackboneKind, BackbonePair, Edge, Graph, backbone_kind
from .planar import Embedded, FaceSet, RotationSystem, embed


def has_cycle_of_length(g: Graph, length: int) -> tuple[int, ...] | None:
    """A cycle subgraph (not necessarily induced) with ``length`` vertices, or None.

    Cycles are rooted at their smallest vertex and the second vertex is smaller
    than the last, so each cycle is examined once.
    """
    if length < 3:
        raise ValueError("cycle length must be at least 3")
    adj = g.adj
    for s in range(g.n):
        path = [s]
        on_path = {s}

        def extend() -> bool:
            u = path[-1]
            if len(path) == length:
                return s in adj[u] and path[1] < path[-1]
            for w in sorted(adj[u]):
                if w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    if extend():
                        return True
                    path.pop()
                    on_path.discard(w)
            return False

        if extend():
            return tuple(path)
    return None


def adjacent_3faces(fs: FaceSet) -> Edge | None:
    """An edge with a degree-3 face on both sides, or None."""
    for u, rot in enumerate(fs.rotation.rotations):
        for v in rot:
            if u < v:
                a, b = fs.edge_faces(u, v)
                if a != b and fs.degree(a) == 3 and fs.degree(b) == 3:
                    return (u, v)
    return None


THM1, THM2, THM3 = "Thm1", "Thm2", "Thm3"


@dataclass(frozen=True)
class ClassReport:
    planar: bool
    c4_free: bool
    c5_free: bool
    no_adjacent_3faces: bool | None  # None when the graph is not planar
    backbone_kind: BackboneKind
    theorem_classes: frozenset[str]
    embedding: RotationSystem | None = field(default=None, compare=False)

    def to_dict(self) -> dict:
        return {
            "planar": self.planar,
            "c4_free": self.c4_free,
            "c5_free": self.c5_free,
            "no_adjacent_3faces": self.no_adjacent_3faces,
            "backbone_kind": self.backbone_kind.value,
            "theorem_classes": sorted(self.theorem_classes),
            "embedding": None if self.embedding is None else [list(r) for r in self.embedding.rotations],
        }


def classify(p: BackbonePair, rs: RotationSystem | None = None) -> ClassReport:
    """Evaluate every hypothesis of the three theorems.

    The "no adjacent 3-faces" flag depends on the embedding; the one used is
    returned in the report (the caller's when supplied).
    """
    g = p.graph
    emb = embed(g, rs)
    planar = isinstance(emb, Embedded)
    c4_free = has_cycle_of_length(g, 4) is None
    c5_free = has_cycle_of_length(g, 5) is None
    no_adj = adjacent_3faces(emb.faces) is None if planar else None
    kind = backbone_kind(p)
    matching = kind is BackboneKind.MATCHING
    linear = kind in (BackboneKind.MATCHING, BackboneKind.LINEAR_FOREST)
    classes = set()
    if planar and c4_free and c5_free and matching:
        classes.add(THM1)
    if planar and no_adj and matching:
        classes.add(THM2)
    if planar and c4_free and linear:
        classes.add(THM3)
    return ClassReport(
        planar, c4_free, c5_free, no_adj, kind, frozenset(classes),
        emb.rotation if planar else None,
    )
