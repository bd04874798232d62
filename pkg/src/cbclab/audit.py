"""Exact checks of the counting lemmas and of the discharging ledgers.

Charges are :class:`fractions.Fraction` values; every one of them is a
multiple of 1/6, which :meth:`ChargeLedger.check` asserts.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .classes import THM1, THM2, adjacent_3faces, classify, has_cycle_of_length
from .errors import PreconditionViolated
from .graph import BackbonePair, Graph, to_graph6
from .planar import Embedded, NonplanarWitness, RotationSystem, embed, euler_ok, faces


@dataclass(frozen=True)
class AuditResult:
    lemma: str
    lhs: Fraction
    rhs: Fraction
    witness: str | None = None  # graph6 of the instance when the check fails

    @property
    def slack(self) -> Fraction:
        return self.rhs - self.lhs

    @property
    def holds(self) -> bool:
        return self.lhs <= self.rhs

    def row(self, instance_id: str = "") -> dict:
        return {
            "instance": instance_id,
            "lemma": self.lemma,
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "slack": str(self.slack),
            "verdict": "holds" if self.holds else "fails",
        }


def _embedded(g: Graph, rs: RotationSystem | None) -> Embedded:
    emb = embed(g, rs)
    if isinstance(emb, NonplanarWitness):
        raise PreconditionViolated("planar", "graph has a Kuratowski subdivision")
    return emb


def _require_connected(g: Graph) -> None:
    if g.n == 0 or not g.is_connected():
        raise PreconditionViolated("connected")


def _require_not_k3(g: Graph) -> None:
    # each edge of a lone triangle lies on two 3-faces, so |E_3| < 3 f3
    if g.n == 3 and g.m == 3:
        raise PreconditionViolated("not_k3")


def _result(name: str, g: Graph, lhs, rhs) -> AuditResult:
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    return AuditResult(name, lhs, rhs, None if lhs <= rhs else to_graph6(g))


def lemma_3_2(g: Graph, rs: RotationSystem | None = None) -> AuditResult:
    """Degree sum <= 3n + 3 f3 / 2 - 6 for plane graphs without C4 and C5.

    Pendant vertices are excluded: a degree-1 vertex creates a face walk of
    length 4 or 5 and the bound fails (a triangle with a pendant edge has
    degree sum 8 against a bound of 15/2).
    """
    _require_connected(g)
    if has_cycle_of_length(g, 4) or has_cycle_of_length(g, 5):
        raise PreconditionViolated("c4_c5_free")
    _require_not_k3(g)
    if g.min_degree() < 2:
        raise PreconditionViolated("min_degree_2", "bound needs every face of degree 3 or at least 6")
    emb = _embedded(g, rs)
    return _result("3.2", g, sum(g.degrees()), 3 * g.n + Fraction(3 * emb.faces.f3, 2) - 6)


def lemma_4_1(g: Graph, rs: RotationSystem | None = None) -> AuditResult:
    """Degree sum <= 5n + gamma - f3 - 10 with gamma counted on the 4-islands."""
    _require_connected(g)
    if g.n < 3:
        raise PreconditionViolated("n_at_least_3", "faces of degree below 3 break the bound")
    emb = _embedded(g, rs)
    if adjacent_3faces(emb.faces) is not None:
        raise PreconditionViolated("no_adjacent_3faces")
    gamma = emb.islands(4).gamma
    return _result("4.1", g, sum(g.degrees()), 5 * g.n + gamma - emb.faces.f3 - 10)


def lemma_5_6(g: Graph, rs: RotationSystem | None = None) -> AuditResult:
    """m <= 2n - 4 + gamma / 3 with gamma counted on the 5-islands."""
    _require_connected(g)
    if g.n < 3:
        raise PreconditionViolated("n_at_least_3", "faces of degree below 3 break the bound")
    if has_cycle_of_length(g, 4):
        raise PreconditionViolated("c4_free")
    _require_not_k3(g)
    emb = _embedded(g, rs)
    gamma = emb.islands(5).gamma
    return _result("5.6", g, g.m, 2 * g.n - 4 + Fraction(gamma, 3))


def face_edge_inequality(g: Graph, variant: int, rs: RotationSystem | None = None) -> AuditResult:
    """``3 f3 + f_r <= m + gamma`` with r = 4 (variant 4) or r = 5 (variant 5)."""
    if variant not in (4, 5):
        raise ValueError("variant must be 4 or 5")
    _require_connected(g)
    emb = _embedded(g, rs)
    if variant == 4 and adjacent_3faces(emb.faces) is not None:
        raise PreconditionViolated("no_adjacent_3faces")
    if variant == 5:
        if has_cycle_of_length(g, 4):
            raise PreconditionViolated("c4_free")
        _require_not_k3(g)
    fs = emb.faces
    gamma = emb.islands(variant).gamma
    return _result(f"claim{variant}", g, 3 * fs.f3 + fs.count(variant), g.m + gamma)


# --- discharging ledgers ---------------------------------------------------------

Entity = tuple[str, int]  # ("v", vertex) | ("t", face id) | ("b", island index)


@dataclass(frozen=True)
class Transfer:
    rule: str
    source: Entity
    target: Entity
    amount: Fraction


@dataclass
class ChargeLedger:
    entities: list[Entity]
    stages: list[dict[Entity, Fraction]] = field(default_factory=list)
    log: list[Transfer] = field(default_factory=list)

    def apply(self, rule: str, transfers: list[tuple[Entity, Entity, Fraction]]) -> None:
        cur = dict(self.stages[-1])
        for src, dst, amt in transfers:
            cur[src] -= amt
            cur[dst] += amt
            self.log.append(Transfer(rule, src, dst, amt))
        self.stages.append(cur)

    def total(self, stage: int = -1) -> Fraction:
        return sum(self.stages[stage].values(), Fraction(0))

    def final(self) -> dict[Entity, Fraction]:
        return self.stages[-1]

    def negatives(self, stage: int = -1) -> list[Entity]:
        return [e for e in self.entities if self.stages[stage][e] < 0]

    def check(self) -> None:
        base = self.total(0)
        for i, st in enumerate(self.stages):
            assert self.total(i) == base, f"charge not conserved at stage {i}"
            for e, c in st.items():
                assert 6 % c.denominator == 0, f"charge {c} of {e} is not a multiple of 1/6"

    def to_dict(self) -> dict:
        return {
            "entities": [f"{k}{i}" for k, i in self.entities],
            "stages": [{f"{k}{i}": str(c) for (k, i), c in st.items()} for st in self.stages],
            "negatives": [f"{k}{i}" for k, i in self.negatives()],
        }


def _require_class(p: BackbonePair, theorem: str, rs: RotationSystem | None):
    _require_connected(p.graph)
    report = classify(p, rs)
    if theorem not in report.theorem_classes:
        raise PreconditionViolated(theorem, "instance is outside the theorem's class")
    return report


def charge_ledger_thm1(p: BackbonePair, rs: RotationSystem | None = None) -> ChargeLedger:
    """Charges d(v) - 3 on vertices and -3/2 on triangles, then the two rules:
    a matched degree-3 vertex receives 1/2 from its partner, and every vertex
    gives 1/2 to each incident triangular face."""
    report = _require_class(p, THM1, rs)
    g = p.graph
    fs = faces(report.embedding)
    tris = fs.triangles()
    ents: list[Entity] = [("v", v) for v in range(g.n)] + [("t", f) for f in tris]
    mu0 = {("v", v): Fraction(g.degree(v) - 3) for v in range(g.n)}
    mu0.update({("t", f): Fraction(-3, 2) for f in tris})
    ledger = ChargeLedger(ents, [mu0])
    half = Fraction(1, 2)
    rule1 = []
    for u in range(g.n):
        w = p.partner(u)
        if w is not None and g.degree(u) == 3:
            rule1.append((("v", w), ("v", u), half))
    ledger.apply("R1", rule1)
    rule2 = [(("v", u), ("t", f), half) for f in tris for u in sorted(fs.vertices(f))]
    ledger.apply("R2", rule2)
    ledger.check()
    return ledger


def charge_ledger_thm2(p: BackbonePair, rs: RotationSystem | None = None) -> ChargeLedger:
    """Charges d(v) - 5, +1 per triangle, -1 per bad 4-island; triangles give
    1/3 to each bad island they touch and a matched degree-4 vertex receives 1
    from its partner."""
    report = _require_class(p, THM2, rs)
    g = p.graph
    rot = report.embedding
    fs = faces(rot)
    isl = Embedded(g, rot, fs).islands(4)
    tris = fs.triangles()
    bad = isl.bad_components()
    ents: list[Entity] = (
        [("v", v) for v in range(g.n)] + [("t", f) for f in tris] + [("b", b) for b in bad]
    )
    mu0 = {("v", v): Fraction(g.degree(v) - 5) for v in range(g.n)}
    mu0.update({("t", f): Fraction(1) for f in tris})
    mu0.update({("b", b): Fraction(-1) for b in bad})
    ledger = ChargeLedger(ents, [mu0])
    third = Fraction(1, 3)
    ledger.apply("MR1", [(("t", f), ("b", b), third) for f in tris for b in sorted(isl.gamma_face[f])])
    rule2 = []
    for u in range(g.n):
        w = p.partner(u)
        if w is not None and g.degree(u) == 4:
            rule2.append((("v", w), ("v", u), Fraction(1)))
    ledger.apply("MR2", rule2)
    ledger.check()
    return ledger


# --- minimal-counterexample degree profiles ----------------------------------------

PROFILES = {
    # theorem: (minimum degree, low degree that must be matched, partner minimum)
    THM1: (3, 3, 5),
    THM2: (4, 4, 6),
}


@dataclass(frozen=True)
class ProfileResult:
    theorem: str
    n_max: int
    graphs_checked: int
    degree_matches: int
    witness: tuple[str, tuple] | None = None  # (graph6, matching)

    @property
    def none_found(self) -> bool:
        return self.witness is None


def profile_matching(g: Graph, low: int, partner_min: int) -> list[tuple[int, int]] | None:
    """A matching pairing every degree-``low`` vertex with a distinct neighbour
    of degree >= ``partner_min``, or None."""
    lows = [u for u in range(g.n) if g.degree(u) == low]
    match: dict[int, int] = {}

    def augment(u, seen):
        for w in sorted(g.adj[u]):
            if g.degree(w) < partner_min or w in seen:
                continue
            seen.add(w)
            if w not in match or augment(match[w], seen):
                match[w] = u
                return True
        return False

    for u in lows:
        if not augment(u, set()):
            return None
    return sorted((min(u, w), max(u, w)) for w, u in match.items())


def plane_embeddings(g: Graph, limit: int = 200_000):
    """Every rotation system of ``g`` that is a plane embedding (up to ``limit``
    rotation systems examined)."""
    choices = []
    for u in range(g.n):
        nb = sorted(g.adj[u])
        if len(nb) <= 2:
            choices.append([tuple(nb)])
        else:
            choices.append([(nb[0],) + perm for perm in itertools.permutations(nb[1:])])
    for count, rots in enumerate(itertools.product(*choices)):
        if count >= limit:
            raise PreconditionViolated("embedding_budget", f"more than {limit} rotation systems")
        rs = RotationSystem(g.n, tuple(rots))
        if euler_ok(g, faces(rs)):
            yield rs


def no_counterexample_profile(theorem: str, n_max: int) -> ProfileResult:
    """Exhaustively look for an in-class graph matching the degree profile a
    minimal counterexample would need; finding one would contradict the
    discharging argument."""
    from .workbench.enumerate import enumerate_graphs

    min_deg, low, partner_min = PROFILES[theorem]
    filters = {"planar", "c4_free", "c5_free"} if theorem == THM1 else {"planar"}
    checked = matches = 0
    for n in range(1, n_max + 1):
        for g in enumerate_graphs(n, filters):
            checked += 1
            if g.min_degree() < min_deg:
                continue
            m = profile_matching(g, low, partner_min)
            if m is None:
                continue
            matches += 1
            if theorem == THM1:
                return ProfileResult(theorem, n_max, checked, matches, (to_graph6(g), tuple(m)))
            for rs in plane_embeddings(g):
                if adjacent_3faces(faces(rs)) is None:
                    return ProfileResult(theorem, n_max, checked, matches, (to_graph6(g), tuple(m)))
    return ProfileResult(theorem, n_max, checked, matches)
