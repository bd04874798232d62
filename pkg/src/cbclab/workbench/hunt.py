"""Falsification harness: generate in-class instances, measure, report.

Instances are produced deterministically from the generator spec, evaluated
in a process pool (instance ``i`` goes to worker ``i % workers``) and merged
back in instance order, so the report does not depend on the worker count.
"""
from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterator

from ..classes import THM1, THM2, THM3, classify
from ..coloring import cbc_number, solve_k
from ..constructive import color_thm1, color_thm2, color_thm3
from ..errors import GiveUp, ProofGapError
from ..graph import BackbonePair, Graph
from ..planar import RotationSystem
from .enumerate import enumerate_graphs
from .generators import (
    SPANNING_TREE, all_maximal_matchings, random_planar, sampled_backbones, thm2_embedding,
)
from .report import InstanceRecord, dumps

FULL = "Full"


@dataclass(frozen=True)
class HuntTarget:
    name: str
    bound: int
    theorem: str | None
    filters: tuple[str, ...]
    backbone_kinds: tuple[str, ...]

    def in_class(self, p: BackbonePair, rs: RotationSystem | None):
        """(membership, class report) for this target's hypotheses."""
        rep = classify(p, rs)
        if self.theorem is not None:
            return self.theorem in rep.theorem_classes, rep
        if not rep.planar:
            return False, rep
        if self.name == "Conj2TreeBound":
            tree = Graph(p.n, p.backbone)
            return len(p.backbone) == p.n - 1 and tree.is_connected(), rep
        return rep.c4_free and rep.c5_free, rep


TARGETS = {
    t.name: t
    for t in (
        HuntTarget("Thm1Bound", 5, THM1, ("planar", "c4_free", "c5_free"), ("Matching",)),
        HuntTarget("Thm2Bound", 6, THM2, ("planar",), ("Matching",)),
        HuntTarget("Thm3Bound", 7, THM3, ("planar", "c4_free"), ("LinearForest",)),
        HuntTarget("Conj2TreeBound", 7, None, ("planar",), (SPANNING_TREE,)),
        HuntTarget(
            "Conj3SteinbergBound", 6, None, ("planar", "c4_free", "c5_free"),
            ("Matching", "LinearForest", SPANNING_TREE, FULL),
        ),
    )
}


@dataclass(frozen=True)
class GeneratorSpec:
    mode: str = "exhaustive"  # exhaustive | random
    n_min: int = 1
    n_max: int = 6
    count: int = 100  # random graphs drawn (random mode)
    backbones: int = 3  # sampled backbones per graph and kind
    all_matchings: bool = True  # stream every maximal matching when n <= 8
    cbc_n_max: int = 9  # exact cbc only up to this order
    seed: int = 0


@dataclass
class Instance:
    index: int
    pair: BackbonePair
    rotation: RotationSystem | None
    provenance: dict


def _derived(seed: int, i: int) -> int:
    return seed * 1_000_003 + i


def _backbones(g: Graph, kinds, spec: GeneratorSpec, seed: int) -> Iterator[tuple[BackbonePair, str]]:
    for kind in kinds:
        if kind == FULL:
            yield BackbonePair(g, g.edges), kind
        elif kind == "Matching" and spec.all_matchings and g.n <= 8:
            for m in all_maximal_matchings(g):
                yield BackbonePair(g, m), "all_maximal_matchings"
        elif kind == SPANNING_TREE and not g.is_connected():
            continue
        else:
            for p in sampled_backbones(g, kind, spec.backbones, seed):
                yield p, kind


def _graphs(target: HuntTarget, spec: GeneratorSpec) -> Iterator[tuple[Graph, dict]]:
    if spec.mode == "exhaustive":
        for n in range(spec.n_min, spec.n_max + 1):
            for j, g in enumerate(enumerate_graphs(n, target.filters)):
                yield g, {"generator": "enumerate", "n": n, "index": j}
    elif spec.mode == "random":
        rng = random.Random(spec.seed)
        sparse = "c4_free" in target.filters
        filters = target.filters + (("no_adjacent_3faces",) if target.theorem == THM2 else ())
        for i in range(spec.count):
            n = rng.randint(spec.n_min, spec.n_max)
            hi = n - 1 if n < 3 else (n - 1 + n // 2 if sparse else 3 * n - 6)
            m = rng.randint(n - 1, max(n - 1, hi))
            gseed = _derived(spec.seed, i)
            try:
                g = random_planar(n, m, filters, gseed, retries=3)
            except GiveUp:
                continue
            yield g, {"generator": "random_planar", "n": n, "m": m, "seed": gseed}
    else:
        raise ValueError(f"unknown generator mode {spec.mode!r}")


def instances(target: HuntTarget, spec: GeneratorSpec) -> Iterator[Instance]:
    i = 0
    for gi, (g, prov) in enumerate(_graphs(target, spec)):
        rs = None
        if target.theorem == THM2:
            rs = thm2_embedding(g)
            if rs is None:
                continue
        for p, kind in _backbones(g, target.backbone_kinds, spec, _derived(spec.seed, gi)):
            yield Instance(i, p, rs, {**prov, "backbone": kind, "hunt_seed": spec.seed})
            i += 1


_COLORERS = {THM1: color_thm1, THM3: color_thm3}


def evaluate(target: HuntTarget, inst: Instance, cbc_n_max: int) -> InstanceRecord:
    p, rs = inst.pair, inst.rotation
    rec = InstanceRecord.of(f"{target.name}-{inst.index}", p, inst.provenance, rs)
    member, rep = target.in_class(p, rs)
    rec.classes = {k: v for k, v in rep.to_dict().items() if k != "embedding"}
    rec.measured["bound"] = target.bound
    if not member:
        rec.status = "out_of_class"
        return rec
    if p.n <= cbc_n_max:
        k = cbc_number(p)
        rec.measured["cbc"] = k
        rec.colorings["cbc"] = solve_k(p, 2, k).to_dict()
        if k > target.bound:
            rec.status, rec.violation = "violation", "bound_exceeded"
        elif k == target.bound:
            rec.status = "tight"
    if target.theorem is not None:
        try:
            cert = color_thm2(p, rs) if target.theorem == THM2 else _COLORERS[target.theorem](p)
        except ProofGapError as exc:
            rec.status, rec.violation = "violation", f"proof_gap: {exc}"
            return rec
        rec.measured["certified_k"] = cert.k
        rec.measured["configs"] = len(cert.log)
        rec.colorings["certificate"] = cert.coloring.to_dict()
        if not cert.verify():
            rec.status, rec.violation = "violation", "certificate_invalid"
    return rec


def _run_share(args) -> list[tuple[int, dict]]:
    target_name, share, cbc_n_max = args
    target = TARGETS[target_name]
    return [(inst.index, evaluate(target, inst, cbc_n_max).to_dict()) for inst in share]


def worker_count() -> int:
    env = os.environ.get("CBC_LAB_THREADS")
    if env:
        return max(1, int(env))
    return max(1, len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else os.cpu_count() or 1)


@dataclass
class HuntReport:
    target: str
    spec: dict
    records: list[dict] = field(default_factory=list)
    summary: dict = field(default_factory=dict)

    def lines(self, emit: str = "notable") -> list[str]:
        best = set(self.summary.get("max_cbc_ids", []))
        keep = [
            r for r in self.records
            if emit == "all" or r["status"] in ("violation", "tight") or r["id"] in best
        ]
        return [dumps(r) for r in keep] + [dumps(self.summary)]

    def text(self) -> str:
        return "\n".join(self.lines()) + "\n"

    @property
    def violations(self) -> list[dict]:
        return [r for r in self.records if r["status"] == "violation"]


def hunt(
    target: HuntTarget | str,
    spec: GeneratorSpec = GeneratorSpec(),
    budget: int | None = None,
    workers: int | None = None,
) -> HuntReport:
    """Check every generated in-class instance against the target bound."""
    if isinstance(target, str):
        target = TARGETS[target]
    insts = []
    truncated = False
    for inst in instances(target, spec):
        if budget is not None and len(insts) >= budget:
            truncated = True
            break
        insts.append(inst)
    workers = workers or worker_count()
    workers = max(1, min(workers, len(insts) or 1))
    if workers == 1:
        results = _run_share((target.name, insts, spec.cbc_n_max))
    else:
        shares = [(target.name, insts[w::workers], spec.cbc_n_max) for w in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = [r for part in pool.map(_run_share, shares) for r in part]
    records = [d for _, d in sorted(results, key=lambda t: t[0])]
    members = [r for r in records if r["status"] != "out_of_class"]
    cbcs = [r["measured"]["cbc"] for r in members if "cbc" in r["measured"]]
    top = max(cbcs, default=None)
    summary = {
        "type": "summary",
        "target": target.name,
        "bound": target.bound,
        "generator": asdict(spec),
        "instances": len(records),
        "in_class": len(members),
        "cbc_computed": len(cbcs),
        "certified": sum("certified_k" in r["measured"] for r in members),
        "violations": sum(r["status"] == "violation" for r in records),
        "violation_ids": [r["id"] for r in records if r["status"] == "violation"],
        "tight": sum(r["status"] == "tight" for r in records),
        "max_cbc": top,
        "max_cbc_ids": [r["id"] for r in members if r["measured"].get("cbc") == top][:5] if top else [],
        "truncated": truncated,
    }
    return HuntReport(target.name, asdict(spec), records, summary)
