"""Recursive colorers for the three theorem classes.

Each colorer repeatedly finds a reducible configuration, deletes it, and once
the graph is empty colors the configurations back in reverse order. The
extension step for every configuration is the local argument that makes it
reducible, so a failure there (or finding no configuration at all) is
reported as a :class:`ProofGapWitness` instead of being papered over.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .classes import THM1, THM2, THM3, adjacent_3faces, classify
from .coloring import UNASSIGNED, CircularColoring, adj_set, available, verify
from .errors import NotInClass, ProofGapError
from .graph import BackboneKind, BackbonePair, backbone_kind, backbone_paths
from .planar import RotationSystem, faces
from .reduction import Extension, extend_along_path, forward_schedule, toward_schedule

TARGET_K = {THM1: 5, THM2: 6, THM3: 7}

LOW_TOTAL_DEGREE = "LowTotalDegree"
MATCHED_PAIR = "MatchedPair"
PATH_TO_DEG3 = "HeavyPathToDeg3"
PATH_TO_LEAF = "HeavyPathToLeaf"
PATH_THREE_DEG4 = "HeavyPathThreeDeg4"


@dataclass(frozen=True)
class ReducibleConfig:
    variant: str
    vertices: tuple[int, ...]
    k: int
    middle: int | None = None  # index into ``vertices`` for HeavyPathThreeDeg4

    def relabel(self, ids) -> "ReducibleConfig":
        return ReducibleConfig(self.variant, tuple(ids[v] for v in self.vertices), self.k, self.middle)

    def to_dict(self) -> dict:
        d = {"variant": self.variant, "vertices": list(self.vertices), "k": self.k}
        if self.middle is not None:
            d["middle"] = self.middle
        return d


@dataclass(frozen=True)
class ProofGapWitness:
    pair: BackbonePair
    theorem: str
    reason: str


@dataclass(frozen=True)
class ColoringCertificate:
    pair: BackbonePair
    theorem: str
    k: int
    coloring: CircularColoring
    log: tuple[ReducibleConfig, ...]
    class_preserved: tuple[bool, ...] = field(default=())

    def verify(self) -> bool:
        return self.coloring.k == self.k and verify(self.pair, self.coloring) is None

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "k": self.k,
            "coloring": self.coloring.to_dict(),
            "log": [c.to_dict() for c in self.log],
        }


def heavy_subpaths(p: BackbonePair) -> list[list[int]]:
    """Maximal backbone subpaths whose vertices all have degree at most 5."""
    out = []
    for path in backbone_paths(p):
        if len(path) == 1:
            continue  # not on any backbone path
        run: list[int] = []
        for v in path:
            if p.d_g(v) <= 5:
                run.append(v)
            else:
                if run:
                    out.append(run)
                run = []
        if run:
            out.append(run)
    return out


def _low_total_degree(p: BackbonePair, k: int) -> ReducibleConfig | None:
    cands = [u for u in range(p.n) if p.total_degree(u) < k]
    if not cands:
        return None
    u = min(cands, key=lambda x: (p.total_degree(x), x))
    return ReducibleConfig(LOW_TOTAL_DEGREE, (u,), k)


def _matched_pair(p: BackbonePair, k: int, low: int, partner_max: int) -> ReducibleConfig | None:
    for u in range(p.n):
        w = p.partner(u)
        if p.d_g(u) == low and w is not None and p.d_g(w) <= partner_max:
            return ReducibleConfig(MATCHED_PAIR, (u, w), k)
    return None


def _heavy_path_config(p: BackbonePair) -> ReducibleConfig | None:
    best = None
    for path in heavy_subpaths(p):
        deg = [p.d_g(v) for v in path]
        ends = [j for j, v in enumerate(path) if deg[j] == 3 or p.d_h(v) <= 1]
        cands = []
        for i in range(len(path)):
            if deg[i] > 4:
                continue
            for j in ends:
                if j != i:
                    cands.append((abs(i - j), min(i, j), i, j))
        if cands:
            span, _, i, j = min(cands)
            step = 1 if j > i else -1
            verts = tuple(path[i:j + step:step])
            variant = PATH_TO_DEG3 if deg[j] == 3 else PATH_TO_LEAF
            cfg = ReducibleConfig(variant, verts, 7)
        else:
            pos4 = [j for j in range(len(path)) if deg[j] == 4]
            if len(pos4) < 3:
                continue
            t = min(range(len(pos4) - 2), key=lambda t: (pos4[t + 2] - pos4[t], t))
            a, b, c = pos4[t], pos4[t + 1], pos4[t + 2]
            cfg = ReducibleConfig(PATH_THREE_DEG4, tuple(path[a:c + 1]), 7, b - a)
        if best is None or len(cfg.vertices) < len(best.vertices):
            best = cfg
    return best


def find_reducible(p: BackbonePair, theorem: str) -> ReducibleConfig | ProofGapWitness:
    """A configuration whose removal can always be undone for this theorem's k."""
    k = TARGET_K[theorem]
    cfg = _low_total_degree(p, k)
    if cfg is None and theorem == THM1:
        cfg = _matched_pair(p, k, 3, 4)
    elif cfg is None and theorem == THM2:
        cfg = _matched_pair(p, k, 4, 5)
    elif cfg is None and theorem == THM3:
        cfg = _heavy_path_config(p)
    if cfg is None:
        return ProofGapWitness(p, theorem, f"no reducible configuration for {theorem}")
    return cfg


# --- extension -------------------------------------------------------------------

def _gap(p: BackbonePair, theorem: str, reason: str):
    raise ProofGapError(ProofGapWitness(p, theorem, reason))


def _extend(p: BackbonePair, colors: list[int], cfg: ReducibleConfig, theorem: str) -> None:
    k = cfg.k
    if cfg.variant == LOW_TOTAL_DEGREE:
        (u,) = cfg.vertices
        free = available(p, colors, u, k)
        if not free:
            _gap(p, theorem, f"vertex {u} has no available color")
        colors[u] = min(free)
    elif cfg.variant == MATCHED_PAIR:
        u, w = cfg.vertices
        # the vertex with fewer guaranteed colors is fixed first
        first, second = (w, u) if theorem == THM1 else (u, w)
        a_first = available(p, colors, first, k)
        a_second = available(p, colors, second, k)
        for c in sorted(a_first):
            rest = a_second - adj_set(c, k)
            if rest:
                colors[first], colors[second] = c, min(rest)
                return
        _gap(p, theorem, f"matched pair {u}-{w} cannot be colored")
    else:
        verts = cfg.vertices
        sub = p.graph.induced(verts)
        lists = {i: frozenset(available(p, colors, v, k)) for i, v in enumerate(verts)}
        path = list(range(len(verts)))
        if cfg.variant == PATH_THREE_DEG4:
            order = toward_schedule(path, cfg.middle)
        else:
            order = forward_schedule(path)
        res = extend_along_path(sub, path, lists, order)
        if not isinstance(res, Extension):
            _gap(p, theorem, f"reduction failed at step {res.step} on {verts[res.vertex]}: {res.reason}")
        for i, v in enumerate(verts):
            colors[v] = res.colors[i]


def color_by_reduction(
    p: BackbonePair, theorem: str, rs: RotationSystem | None = None
) -> ColoringCertificate:
    """Delete configurations down to the empty graph, then color back up.

    Class membership is not re-checked on the subinstances; for the
    embedding-dependent class the induced embedding is tested after every
    deletion and the outcome kept in ``class_preserved``.
    """
    k = TARGET_K[theorem]
    kind = backbone_kind(p)
    cur, ids = p, tuple(range(p.n))
    log = []
    flags = []
    cur_rs = rs
    while cur.n:
        cfg = find_reducible(cur, theorem)
        if isinstance(cfg, ProofGapWitness):
            raise ProofGapError(cfg)
        log.append(cfg.relabel(ids))
        nxt, keep = cur.delete(cfg.vertices)
        if kind in (BackboneKind.MATCHING, BackboneKind.LINEAR_FOREST):
            assert backbone_kind(nxt) in (BackboneKind.MATCHING, kind), "backbone kind changed"
        if cur_rs is not None:
            cur_rs = cur_rs.restrict(keep)
            flags.append(adjacent_3faces(faces(cur_rs)) is None)
        cur, ids = nxt, tuple(ids[i] for i in keep)
    colors = [UNASSIGNED] * p.n
    for cfg in reversed(log):
        _extend(p, colors, cfg, theorem)
    cert = ColoringCertificate(p, theorem, k, CircularColoring(2, k, tuple(colors)), tuple(log), tuple(flags))
    if not cert.verify():
        _gap(p, theorem, "assembled coloring does not verify")
    return cert


def _require(p: BackbonePair, theorem: str, rs: RotationSystem | None):
    report = classify(p, rs)
    if theorem not in report.theorem_classes:
        raise NotInClass(f"instance is not in the class of {theorem}")
    return report


def color_thm1(p: BackbonePair) -> ColoringCertificate:
    """CBC-5 coloring of a planar C4/C5-free graph with a matching backbone."""
    _require(p, THM1, None)
    return color_by_reduction(p, THM1)


def color_thm2(p: BackbonePair, rs: RotationSystem | None = None) -> ColoringCertificate:
    """CBC-6 coloring of a plane graph without edge-sharing triangles, matching backbone."""
    report = _require(p, THM2, rs)
    return color_by_reduction(p, THM2, report.embedding)


def color_thm3(p: BackbonePair) -> ColoringCertificate:
    """CBC-7 coloring of a planar C4-free graph with a linear-forest backbone."""
    _require(p, THM3, None)
    return color_by_reduction(p, THM3)
