"""Command-line front end.

Exit codes: 0 success (or the checked statement holds), 1 a violation or
counterexample was found, 2 bad input or a violated precondition.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .. import audit
from ..classes import THM1, THM2, THM3, classify
from ..coloring import CircularColoring, bbc_number, cbc_number, solve_bbc_k, solve_k, verify
from ..constructive import color_thm1, color_thm2, color_thm3
from ..errors import CBCError, NotInClass, ProofGapError
from ..graph import (
    BackbonePair, attach_backbone, from_graph6, parse_backbone, read_graph6_file, to_graph6,
)
from ..planar import RotationSystem
from .enumerate import enumerate_graphs
from .generators import random_planar, sample_backbone
from .hunt import TARGETS, GeneratorSpec, hunt
from .report import dumps

OK, VIOLATION, BAD_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load(args) -> list[tuple[str, BackbonePair, RotationSystem | None]]:
    if args.graph:
        graphs = [from_graph6(args.graph)]
    elif args.input:
        graphs = read_graph6_file(args.input)
    else:
        raise InputError("give a graph with --input FILE or --graph GRAPH6")
    backbone = parse_backbone(Path(args.backbone).read_text()) if args.backbone else []
    rs = RotationSystem.from_json(Path(args.embedding).read_text()) if args.embedding else None
    if (backbone or rs) and len(graphs) != 1:
        raise InputError("--backbone and --embedding need a single input graph")
    return [(str(i), attach_backbone(g, backbone), rs) for i, g in enumerate(graphs)]


def _emit(args, obj: dict, text: str) -> None:
    print(dumps(obj) if args.format == "json" else text)


def cmd_solve(args) -> int:
    code = OK
    for iid, p, _ in _load(args):
        if args.k is None:
            k = bbc_number(p, args.q) if args.linear else cbc_number(p, args.q)
        else:
            k = args.k
        col = (solve_bbc_k if args.linear else solve_k)(p, args.q, k)
        if col is None:
            code = VIOLATION
            _emit(args, {"type": "solve", "instance": iid, "k": k, "coloring": None},
                  f"{iid}: no {'linear' if args.linear else 'circular'} coloring with k={k}")
        else:
            _emit(args, {"type": "solve", "instance": iid, "k": k, "coloring": col.to_dict()},
                  f"{iid}: k={k} colors={' '.join(map(str, col.colors))}")
    return code


def _read_coloring(args) -> CircularColoring:
    text = Path(args.coloring).read_text()
    try:
        d = json.loads(text)
    except json.JSONDecodeError:
        d = None
    if isinstance(d, dict):
        return CircularColoring(int(d.get("q", args.q)), int(d["k"]), tuple(int(c) for c in d["colors"]))
    if args.k is None:
        raise InputError("a plain color list needs --k")
    return CircularColoring(args.q, args.k, tuple(int(c) for c in text.split()))


def cmd_verify(args) -> int:
    (iid, p, _), *rest = _load(args)
    if rest:
        raise InputError("verify takes a single graph")
    col = _read_coloring(args)
    bad = verify(p, col, circular=not args.linear)
    if bad is None:
        _emit(args, {"type": "verify", "valid": True}, "valid")
        return OK
    _emit(args, {"type": "verify", "valid": False, "edge": list(bad.edge), "reason": bad.reason},
          f"invalid: edge {bad.edge[0]}-{bad.edge[1]} {bad.reason}")
    return VIOLATION


def cmd_color(args) -> int:
    theorem = {1: THM1, 2: THM2, 3: THM3}[args.theorem]
    code = OK
    for iid, p, rs in _load(args):
        try:
            if theorem == THM2:
                cert = color_thm2(p, rs)
            else:
                cert = (color_thm1 if theorem == THM1 else color_thm3)(p)
        except ProofGapError as exc:
            code = VIOLATION
            _emit(args, {"type": "proof_gap", "instance": iid, "reason": str(exc)}, f"{iid}: proof gap: {exc}")
            continue
        _emit(args, {"type": "certificate", "instance": iid, **cert.to_dict()},
              f"{iid}: k={cert.k} colors={' '.join(map(str, cert.coloring.colors))} configs={len(cert.log)}")
    return code


def cmd_class(args) -> int:
    for iid, p, rs in _load(args):
        rep = classify(p, rs)
        d = rep.to_dict()
        _emit(args, {"type": "class", "instance": iid, **d},
              f"{iid}: classes={','.join(sorted(rep.theorem_classes)) or '-'} planar={rep.planar} "
              f"c4_free={rep.c4_free} c5_free={rep.c5_free} backbone={rep.backbone_kind.value}")
    return OK


LEMMAS = {
    "3.2": audit.lemma_3_2,
    "4.1": audit.lemma_4_1,
    "5.6": audit.lemma_5_6,
    "claim4": lambda g, rs: audit.face_edge_inequality(g, 4, rs),
    "claim5": lambda g, rs: audit.face_edge_inequality(g, 5, rs),
}


def cmd_audit(args) -> int:
    if args.lemma == "profile":
        theorem = {1: THM1, 2: THM2}[args.theorem or 1]
        res = audit.no_counterexample_profile(theorem, args.n_max)
        _emit(args, {"type": "profile", "theorem": theorem, "n_max": args.n_max,
                     "graphs_checked": res.graphs_checked, "witness": res.witness},
              f"{theorem} profile n<={args.n_max}: "
              + ("none found" if res.none_found else f"witness {res.witness}"))
        return OK if res.none_found else VIOLATION
    code = OK
    for iid, p, rs in _load(args):
        if args.lemma in LEMMAS:
            res = LEMMAS[args.lemma](p.graph, rs)
            _emit(args, {"type": "audit", **res.row(iid)},
                  f"{iid}: {res.lemma} lhs={res.lhs} rhs={res.rhs} slack={res.slack} "
                  f"{'holds' if res.holds else 'FAILS'}")
            if not res.holds:
                code = VIOLATION
        else:
            ledger = (audit.charge_ledger_thm1 if args.lemma == "ledger1" else audit.charge_ledger_thm2)(p, rs)
            neg = ", ".join(f"{k}{i}={ledger.final()[(k, i)]}" for k, i in ledger.negatives())
            _emit(args, {"type": "ledger", "instance": iid, **ledger.to_dict()},
                  f"{iid}: total={ledger.total()} negatives: {neg or 'none'}")
    return code


def cmd_gen(args) -> int:
    filters = args.filters.split(",") if args.filters else []
    if args.mode == "enumerate":
        graphs = list(enumerate_graphs(args.n, filters))
    else:
        graphs = [
            random_planar(args.n, args.m, filters, args.seed + i) for i in range(args.count)
        ]
    for i, g in enumerate(graphs):
        if args.backbone_kind:
            p = sample_backbone(g, args.backbone_kind, args.seed + i)
            _emit(args, {"type": "graph", "graph6": to_graph6(g), "backbone": sorted(map(list, p.backbone))},
                  f"{to_graph6(g)} {' '.join(f'{u}-{v}' for u, v in sorted(p.backbone))}")
        else:
            _emit(args, {"type": "graph", "graph6": to_graph6(g)}, to_graph6(g))
    return OK


def cmd_hunt(args) -> int:
    spec = GeneratorSpec(
        mode=args.mode, n_min=args.n_min, n_max=args.n_max, count=args.count,
        backbones=args.backbones, cbc_n_max=args.cbc_n_max, seed=args.seed,
    )
    rep = hunt(TARGETS[args.target], spec, budget=args.budget, workers=args.workers)
    lines = rep.lines(args.emit)
    if args.output:
        Path(args.output).write_text("\n".join(lines) + "\n")
    if args.format == "json" and not args.output:
        print("\n".join(lines))
    else:
        s = rep.summary
        print(f"{s['target']}: {s['in_class']} in-class instances, {s['violations']} violations, "
              f"max cbc {s['max_cbc']}, {s['tight']} tight")
    return VIOLATION if rep.violations else OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int, default=2)
    common.add_argument("--k", type=int)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--input", help="graph6 file, one graph per line")
    common.add_argument("--graph", help="a single graph6 string")
    common.add_argument("--backbone", help="backbone edge file ('u v' per line)")
    common.add_argument("--embedding", help="rotation system JSON file")
    common.add_argument("--format", choices=("json", "text"), default="text")

    ap = argparse.ArgumentParser(prog="cbclab", description="Circular backbone coloring workbench")
    sub = ap.add_subparsers(dest="cmd", required=True)

    s = sub.add_parser("solve", parents=[common], help="exact CBC (or BBC) number and coloring")
    s.add_argument("--linear", action="store_true", help="linear backbone coloring instead")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("verify", parents=[common], help="check a coloring")
    s.add_argument("--coloring", required=True, help="JSON {q,k,colors} or whitespace-separated colors")
    s.add_argument("--linear", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("color", parents=[common], help="constructive coloring from a theorem")
    s.add_argument("--theorem", type=int, choices=(1, 2, 3), required=True)
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("class", parents=[common], help="theorem-class report")
    s.set_defaults(func=cmd_class)

    s = sub.add_parser("audit", parents=[common], help="counting lemmas, ledgers, profiles")
    s.add_argument("--lemma", required=True, choices=list(LEMMAS) + ["ledger1", "ledger2", "profile"])
    s.add_argument("--theorem", type=int, choices=(1, 2), help="profile to search (default 1)")
    s.add_argument("--n-max", type=int, default=8)
    s.set_defaults(func=cmd_audit)

    s = sub.add_parser("gen", parents=[common], help="enumerate or sample graphs")
    s.add_argument("--mode", choices=("enumerate", "random"), default="enumerate")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int)
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--filters", default="", help="comma list: planar,c4_free,c5_free")
    s.add_argument("--backbone-kind", choices=("Matching", "LinearForest", "SpanningTree"))
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("hunt", parents=[common], help="search for bound violations")
    s.add_argument("--target", choices=sorted(TARGETS), required=True)
    s.add_argument("--mode", choices=("exhaustive", "random"), default="exhaustive")
    s.add_argument("--n-min", type=int, default=1)
    s.add_argument("--n-max", type=int, default=6)
    s.add_argument("--count", type=int, default=100)
    s.add_argument("--backbones", type=int, default=3)
    s.add_argument("--cbc-n-max", type=int, default=9)
    s.add_argument("--budget", type=int)
    s.add_argument("--workers", type=int)
    s.add_argument("--emit", choices=("notable", "all"), default="notable")
    s.add_argument("--output", help="write the JSON-lines report here")
    s.set_defaults(func=cmd_hunt)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.cmd == "gen" and args.mode == "random" and args.m is None:
        ap.error("--mode random needs --m")
    try:
        return args.func(args)
    except (InputError, OSError, NotInClass, CBCError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
