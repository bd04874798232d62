"""JSON-lines records and their independent re-verification."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from ..coloring import CircularColoring, solve_k, verify
from ..graph import BackbonePair, attach_backbone, from_graph6, to_graph6
from ..planar import RotationSystem

SCHEMA = 1


def dumps(obj: dict) -> str:
    """Stable one-line serialization (sorted keys, no whitespace)."""
    return json.dumps({"schema": SCHEMA, **obj}, sort_keys=True, separators=(",", ":"))


@dataclass
class InstanceRecord:
    id: str
    graph6: str
    backbone: list[list[int]]
    provenance: dict[str, Any]
    embedding: list[list[int]] | None = None
    classes: dict[str, Any] | None = None
    measured: dict[str, Any] = field(default_factory=dict)
    colorings: dict[str, dict] = field(default_factory=dict)  # name -> {"q","k","colors"}
    status: str = "ok"  # ok | tight | violation | out_of_class
    violation: str | None = None

    @classmethod
    def of(cls, iid: str, p: BackbonePair, provenance: dict, rs: RotationSystem | None = None):
        emb = None if rs is None else [list(r) for r in rs.rotations]
        return cls(iid, to_graph6(p.graph), [list(e) for e in sorted(p.backbone)], provenance, emb)

    def pair(self) -> BackbonePair:
        return attach_backbone(from_graph6(self.graph6), self.backbone)

    def rotation(self) -> RotationSystem | None:
        if self.embedding is None:
            return None
        return RotationSystem(len(self.embedding), tuple(tuple(r) for r in self.embedding))

    def to_dict(self) -> dict:
        return {
            "type": "instance",
            "id": self.id,
            "graph6": self.graph6,
            "backbone": self.backbone,
            "embedding": self.embedding,
            "class": self.classes,
            "measured": self.measured,
            "colorings": self.colorings,
            "provenance": self.provenance,
            "status": self.status,
            "violation": self.violation,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "InstanceRecord":
        return cls(
            d["id"], d["graph6"], d["backbone"], d["provenance"], d.get("embedding"),
            d.get("class"), d.get("measured", {}), d.get("colorings", {}),
            d.get("status", "ok"), d.get("violation"),
        )

    def line(self) -> str:
        return dumps(self.to_dict())


def reverify(d: dict, deep: bool = True) -> list[str]:
    """Problems found when checking a serialized record from scratch.

    Every stored coloring is re-checked. With ``deep``, a bound violation
    claimed through ``measured.cbc`` is confirmed by showing that no coloring
    with ``measured.bound`` colors exists.
    """
    rec = InstanceRecord.from_dict(d)
    p = rec.pair()
    problems = []
    if rec.embedding is not None and not rec.rotation().matches(p.graph):
        problems.append("embedding does not match the graph")
    for name, c in rec.colorings.items():
        col = CircularColoring(c["q"], c["k"], tuple(c["colors"]))
        if verify(p, col) is not None:
            problems.append(f"coloring {name} does not verify")
    cbc = rec.measured.get("cbc")
    if cbc is not None and "cbc" not in rec.colorings:
        problems.append("cbc value without a witness coloring")
    if cbc is not None and rec.colorings.get("cbc", {}).get("k") != cbc:
        problems.append("cbc witness uses a different k")
    bound = rec.measured.get("bound")
    if deep and rec.violation == "bound_exceeded":
        if bound is None or cbc is None or cbc <= bound:
            problems.append("violation record lacks bound data")
        elif solve_k(p, 2, bound) is not None:
            problems.append(f"a {bound}-coloring exists; violation not confirmed")
    return problems
