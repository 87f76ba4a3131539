"""Command-line interface.

JSON goes to stdout, diagnostics to stderr.  Exit status is 0 on success,
1 when a check fails (a labeling does not verify, a sequence is not
graphical, a search finds nothing) and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import degseq as ds
from . import groups as gr
from . import topcode as tc
from . import transforms as tf
from .graph import Graph, GraphError, parse_graph
from .labelings import KINDS, EdgeRule, Labeling, LabelingError, VerifierSpec, verify
from .solver import SearchTooLarge, count_labelings, realize, search

FAIL, USAGE = 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# input helpers

def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    if os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    return source


def load_graph(source: str) -> Graph:
    text = _read(source)
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return Graph.from_json(json.loads(text))
    return parse_graph(text)


def load_json(source: str):
    text = _read(source)
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"bad JSON in {source!r}: {exc}") from None


def load_labeling(source: str) -> Labeling:
    doc = load_json(source)
    if isinstance(doc, list):
        return Labeling(tuple(doc))
    return Labeling.from_json(doc)


def load_matrix(args) -> tc.TopcodeMatrix:
    if getattr(args, "matrix", None):
        return tc.TopcodeMatrix.from_json(load_json(args.matrix))
    if getattr(args, "graph", None) and getattr(args, "labeling", None):
        return tc.from_labeled_graph(load_graph(args.graph), load_labeling(args.labeling), _spec_or_none(args))
    raise UsageError("give --matrix, or --graph with --labeling")


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _spec(args) -> VerifierSpec:
    return VerifierSpec(
        kind=args.kind, k=args.k, d=args.d, lam=args.lam, c=args.c,
        tree_exception=args.tree_exception, coloring=args.coloring,
        target=None if args.target is None else tuple(_ints(args.target)),
        rule=None if args.rule is None else EdgeRule.parse(args.rule),
    )


def _spec_or_none(args) -> Optional[VerifierSpec]:
    return _spec(args) if getattr(args, "kind", None) else None


def _add_spec_flags(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--kind", required=required, choices=sorted(KINDS), metavar="KIND",
                   help="labeling kind (e.g. graceful, odd-graceful, edge-magic-total)")
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--lam", "--lambda", dest="lam", type=int)
    p.add_argument("--c", type=int, help="pin the magic constant")
    p.add_argument("--tree-exception", action="store_true")
    p.add_argument("--coloring", action="store_true", help="drop the bijection requirement")
    p.add_argument("--target", help="edge color multiset for kind=custom")
    p.add_argument("--rule", help="edge rule, e.g. abs-diff, sum, sum-mod:7")


# ---------------------------------------------------------------------------
# output

def _emit(doc, args) -> None:
    if getattr(args, "pretty", False):
        if isinstance(doc, dict):
            width = max((len(str(k)) for k in doc), default=0)
            for k, v in doc.items():
                print(f"{str(k):<{width}}  {json.dumps(v, sort_keys=True)}")
            return
        print(json.dumps(doc, indent=2, sort_keys=True))
        return
    print(json.dumps(doc, sort_keys=True))


# ---------------------------------------------------------------------------
# commands

def cmd_verify(args) -> int:
    G = load_graph(args.graph)
    f = load_labeling(args.labeling)
    rep = verify(G, f, _spec(args))
    _emit(rep.to_json(), args)
    return 0 if rep.passed else FAIL


def cmd_search(args) -> int:
    G = load_graph(args.graph)
    spec = _spec(args)
    if args.count:
        n = count_labelings(G, spec, symmetry_break=args.symmetry_break)
        _emit({"count": n}, args)
        return 0 if n else FAIL
    limit = None if args.all else args.limit
    found = 0
    # one labeling per line, printed as the search finds it
    for f in search(G, spec, limit=limit, symmetry_break=args.symmetry_break):
        print(json.dumps(f.to_json(), sort_keys=True), flush=True)
        found += 1
    return 0 if found else FAIL


def cmd_transform(args) -> int:
    G = load_graph(args.graph)
    f = load_labeling(args.labeling)
    op = args.op
    H = G
    if op == "dual":
        g = tf.dual(f, args.set)
    elif op == "partial-dual":
        g = tf.partial_dual(G, f, args.side)
    elif op == "reciprocal":
        g = tf.reciprocal(G, f, args.side)
    elif op == "linear":
        g = tf.linear(G, f, args.a, args.b)
    elif op in tf.HARMONIOUS_TARGETS:
        g = tf.harmonious_family(G, f, op, k=args.k or 1, d=args.d or 1)
    elif op in tf.EQUIVALENT_TARGETS:
        g = tf.equivalent_transform(G, f, op)
    elif op == "kd-graceful":
        g = tf.kd_graceful_from_graceful(G, f, args.k or 1, args.d or 1)
    elif op == "image-pair":
        if args.k is None:
            raise UsageError("image-pair needs --k")
        g = tf.image_pair(G, f, args.k)
    elif op == "leaf-add":
        counts = {int(a): int(b) for a, b in (t.split(":") for t in (args.leaves or "").split(",") if t)}
        H, g = tf.leaf_add_kd(G, f, counts, args.k or 1, args.d or 1)
    else:  # argparse restricts the choices
        raise UsageError(f"unknown transform {op!r}")
    doc = {"labeling": g.to_json()}
    if H is not G:
        doc["graph"] = H.to_json()
    _emit(doc, args)
    return 0


def cmd_topcode(args) -> int:
    if args.action == "partition":
        found = tc.partition_string(args.string, args.q, kind=args.kind, route=args.route,
                                    variant=args.variant, cap=args.cap)
        _emit({"matrices": [T.to_json() for T in found]}, args)
        return 0 if found else FAIL
    T = load_matrix(args)
    if args.action == "emit":
        route = args.route if args.perm is None else _ints(args.perm)
        s = tc.emit_string(T, route, args.variant)
        if args.pretty:
            print(s)
        else:
            _emit({"string": s}, args) if args.json else print(s)
        return 0
    if args.action == "classify":
        tags = sorted(tc.classify(T))
        _emit({"matrix": T.to_json(), "tags": [str(t) for t in tags]}, args)
        return 0
    if args.action == "analyze":
        _emit(tc.analyze(T).to_json(), args)
        return 0
    if args.action == "from-graph":
        _emit(T.to_json(), args)
        return 0
    raise UsageError(f"unknown topcode action {args.action!r}")


def _group_from_args(args) -> gr.GraphicGroup:
    G = load_graph(args.graph)
    f = load_labeling(args.labeling)
    return gr.build_group(G, f, args.n, args.mode, args.pmod, args.qmod)


def _index(text: str):
    vals = _ints(text)
    if len(vals) == 1:
        return vals[0]
    if len(vals) == 2:
        return tuple(vals)
    raise UsageError(f"bad element index {text!r}")


def cmd_group(args) -> int:
    if args.action == "op":
        # index arithmetic needs only the modulus
        g = gr.GraphicGroup(Graph(1, ()), Labeling((0,)), "vertex", args.n, labels=(), moduli=())
        fn = gr.add if args.operation == "add" else gr.subtract
        _emit({"result": fn(g, args.i, args.j, args.zero)}, args)
        return 0
    g = _group_from_args(args)
    if args.action == "build":
        _emit(g.to_json(), args)
        return 0
    if args.action == "check":
        rep = gr.check_axioms(g)
        _emit(rep.to_json(), args)
        return 0 if rep.passed else FAIL
    if args.action == "encrypt":
        H = load_graph(args.target)
        seed = load_json(args.seed_map) if args.seed_map else args.seed
        enc = gr.encrypt_graph(H, g, seed, _index(args.zero))
        _emit(enc.to_json(), args)
        return 0
    raise UsageError(f"unknown group action {args.action!r}")


def cmd_degseq(args) -> int:
    a = ds.DegreeSequence.parse(args.seq)
    if args.action == "check":
        ok = ds.is_graphical(a)
        doc = {"sequence": list(a), "graphical": ok}
        if ok and args.realize:
            doc["edges"] = [list(e) for e in realize(a).edges]
        _emit(doc, args)
        return 0 if ok else FAIL
    if args.action == "complement":
        out = ds.complement(a, args.n)
    elif args.action == "union":
        out = ds.union(a, ds.DegreeSequence.parse(args.other))
    elif args.action == "coincide":
        pairs = []
        for t in args.pairs.split(","):
            i, _, j = t.partition(":")
            pairs.append((int(i), int(j)))
        out = ds.coincide(a, ds.DegreeSequence.parse(args.other), pairs)
    elif args.action == "join":
        out = ds.join(a, ds.DegreeSequence.parse(args.other), args.i, args.j)
    else:
        raise UsageError(f"unknown degseq action {args.action!r}")
    _emit({"sequence": list(out), "graphical": ds.is_graphical(out)}, args)
    return 0


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output")

    ap = argparse.ArgumentParser(prog="topcoding", description="Graph labelings, Topcode-matrices and graphic groups.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="check a labeling against a kind")
    p.add_argument("--graph", required=True)
    p.add_argument("--labeling", required=True)
    _add_spec_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="enumerate labelings by backtracking")
    p.add_argument("--graph", required=True)
    _add_spec_flags(p)
    p.add_argument("--limit", type=int, help="stop after this many labelings")
    p.add_argument("--all", action="store_true", help="ignore --limit and list every labeling")
    p.add_argument("--count", action="store_true")
    p.add_argument("--symmetry-break", action="store_true")
    p.set_defaults(func=cmd_search)

    ops = (["dual", "partial-dual", "reciprocal", "linear", "kd-graceful", "image-pair", "leaf-add"]
           + sorted(tf.HARMONIOUS_TARGETS) + list(tf.EQUIVALENT_TARGETS))
    p = sub.add_parser("transform", parents=[common], help="apply a labeling transformation")
    p.add_argument("--graph", required=True)
    p.add_argument("--labeling", "--from", dest="labeling", required=True)
    p.add_argument("--op", "--target", dest="op", required=True, choices=ops)
    p.add_argument("--set", default="V", choices=["V", "E", "all"], help="element set for dual")
    p.add_argument("--side", default="X", choices=["X", "Y"])
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=0)
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--leaves", help="support:count pairs for leaf-add, e.g. 0:1,3:2")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("topcode", help="Topcode-matrix operations")
    tsub = p.add_subparsers(dest="action", required=True)
    for name in ("emit", "classify", "analyze", "from-graph"):
        t = tsub.add_parser(name, parents=[common])
        t.add_argument("--matrix", help="matrix JSON {X,E,Y}")
        t.add_argument("--graph")
        t.add_argument("--labeling")
        _add_spec_flags(t, required=False)
        if name == "emit":
            t.add_argument("--route", default="O1", type=str.upper, choices=tc.ROUTES)
            t.add_argument("--variant", default="base", choices=tc.VARIANTS)
            t.add_argument("--perm", help="comma-separated cell permutation (row-major X,E,Y)")
            t.add_argument("--json", action="store_true", help="wrap the string in JSON")
        t.set_defaults(func=cmd_topcode)
    t = tsub.add_parser("partition", parents=[common])
    t.add_argument("string")
    t.add_argument("--q", type=int, required=True)
    t.add_argument("--kind", help="class tag filter, e.g. graceful")
    t.add_argument("--route", default="O1", type=str.upper, choices=tc.ROUTES)
    t.add_argument("--variant", default="base", choices=tc.VARIANTS)
    t.add_argument("--cap", type=int, default=tc.PARTITION_CAP)
    t.set_defaults(func=cmd_topcode)

    p = sub.add_parser("group", help="every-zero graphic groups")
    gsub = p.add_subparsers(dest="action", required=True)
    for name in ("build", "check", "encrypt"):
        t = gsub.add_parser(name, parents=[common])
        t.add_argument("--graph", required=True)
        t.add_argument("--labeling", required=True)
        t.add_argument("--n", type=int)
        t.add_argument("--mode", default="vertex", choices=gr.MODES)
        t.add_argument("--pmod", type=int)
        t.add_argument("--qmod", type=int)
        if name == "encrypt":
            t.add_argument("--target", required=True, help="graph to encrypt")
            t.add_argument("--zero", default="1")
            t.add_argument("--seed", type=int, default=0)
            t.add_argument("--seed-map", help="JSON vertex->element map")
        t.set_defaults(func=cmd_group)
    t = gsub.add_parser("op", parents=[common])
    t.add_argument("operation", choices=["add", "subtract"])
    t.add_argument("i", type=int)
    t.add_argument("j", type=int)
    t.add_argument("--zero", type=int, default=1)
    t.add_argument("--n", type=int, required=True)
    t.set_defaults(func=cmd_group)

    p = sub.add_parser("degseq", help="degree-sequence algebra")
    dsub = p.add_subparsers(dest="action", required=True)
    t = dsub.add_parser("check", parents=[common])
    t.add_argument("seq")
    t.add_argument("--realize", action="store_true")
    t = dsub.add_parser("complement", parents=[common])
    t.add_argument("seq")
    t.add_argument("--n", type=int)
    for name in ("union", "coincide", "join"):
        t = dsub.add_parser(name, parents=[common])
        t.add_argument("seq")
        t.add_argument("other")
        if name == "coincide":
            t.add_argument("--pairs", required=True, help="i:j pairs, e.g. 0:0,1:1")
        if name == "join":
            t.add_argument("--i", type=int, default=0)
            t.add_argument("--j", type=int, default=0)
    for t in dsub.choices.values():
        t.set_defaults(func=cmd_degseq)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, GraphError, LabelingError, tc.TopcodeError, gr.GroupError,
            ds.DegreeSequenceError, tf.TransformError, SearchTooLarge, ValueError, KeyError,
            OSError) as exc:
        print(f"topcoding: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
