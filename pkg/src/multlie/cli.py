"""Command-line entry point: ``mla check|construct|verify|enumerate|iso|catalog``."""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import builtins
from .algebra import axiom_violation, quotient_mla, restrict
from .analysis import find_isomorphism, fingerprint
from .constructions import (direct_product_mla, excision, fiber_product, idealization,
                            iterated_excision_left, iterated_excision_right)
from .enumeration import classify, enumerate_structures
from .errors import MLAError
from .group import Morphism
from .io import algebra_to_dict, load_algebra, load_bundle_raw, load_group, parse_ideal, write_json
from .verify import CHECKS, REFUTED, Instance, builtin_instances, run_suite


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=1))
    else:
        for line in lines:
            print(line)


def cmd_check(args) -> int:
    G, star, name = load_bundle_raw(args.bundle)
    try:
        bad = axiom_violation(G, star)
    except ValueError as exc:
        _emit(args, {"bundle": name, "valid": False, "error": str(exc)}, [f"{name}: invalid ({exc})"])
        return 1
    if bad is None:
        _emit(args, {"bundle": name, "valid": True, "order": G.order}, [f"{name}: valid"])
        return 0
    names = [G.label(w) for w in bad.witnesses]
    _emit(args, {"bundle": name, "valid": False, "axiom": bad.axiom, "witness": names},
          [f"{name}: {bad}"])
    return 1


def _over(spec: str, M):
    """Target algebra and both maps for ``--over``."""
    if spec == "trivial":
        H = builtins.algebra("trivial")
        return H, Morphism.build(M, H, [0] * M.order)
    if spec.startswith("quotient:"):
        Q, pi = quotient_mla(M, parse_ideal(M, spec.split(":", 1)[1]))
        return Q, pi
    raise ValueError(f"unsupported --over {spec!r}; use trivial or quotient:<ideal>")


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "fiber":
        L, R = load_algebra(args.left), load_algebra(args.right)
        if args.over == "trivial":
            H, p1 = _over("trivial", L)
            p2 = Morphism.build(R, H, [0] * R.order)
        else:
            if args.left != args.right:
                raise ValueError("quotient fibers need the same algebra on both sides")
            H, p1 = _over(args.over, L)
            p2 = p1
        out = fiber_product(L, R, H, p1, p2)
    elif kind == "direct":
        out = direct_product_mla(load_algebra(args.left), load_algebra(args.right))
    else:
        M = load_algebra(args.input)
        I = parse_ideal(M, args.ideal)
        if kind == "excision":
            out = excision(M, I)
        elif kind == "idealization":
            out = idealization(M, I)
        elif kind == "iterated-left":
            out = iterated_excision_left(M, I, args.n)
        elif kind == "iterated-right":
            out = iterated_excision_right(M, I, args.n)
        elif kind == "quotient":
            out = quotient_mla(M, I)[0]
        elif kind == "restrict":
            out = restrict(M, I)
        else:
            raise ValueError(f"unknown construction {kind!r}")
    bundle = algebra_to_dict(out)
    if args.output:
        write_json(bundle, args.output)
    fp = fingerprint(out)
    _emit(args, {"kind": kind, "order": out.order, "output": args.output,
                 "fingerprint": fp.to_dict(), "bundle": None if args.output else bundle},
          [f"{kind}: order {out.order}, |star closure| {fp.star_closure}, "
           f"|LZ| {fp.lie_center}, |Z| {fp.center}"
           + (f" -> {args.output}" if args.output else "")])
    return 0


def _theorem_ids(ids: list[str]) -> list[str]:
    out = []
    for chunk in ids:
        for t in chunk.split(","):
            if t == "all":
                out.extend(CHECKS)
            elif t:
                out.append(t)
    return list(dict.fromkeys(out))


def cmd_verify(args) -> int:
    theorems = _theorem_ids(args.theorems)
    if args.input:
        M = load_algebra(args.input)
        instances = [Instance(f"{args.input}/{args.ideal}", M, parse_ideal(M, args.ideal))]
    elif args.instances == "builtin":
        instances = builtin_instances()
    else:
        raise ValueError("give --in ALGEBRA [--ideal SPEC] or --instances builtin")
    reports = run_suite(theorems, instances)
    refuted = sum(r.verdict == REFUTED for r in reports)
    if args.output:
        write_json([r.to_dict() for r in reports], args.output)
    lines = [f"{'theorem':7} {'instance':26} {'verdict':12} detail"]
    for r in reports:
        w = f" witness={r.witness}" if r.witness else ""
        lines.append(f"{r.theorem:7} {r.instance:26} {r.verdict:12} {r.detail}{w}")
    counts = {v: sum(r.verdict == v for r in reports) for v in ("verified", "inapplicable", "refuted")}
    lines.append(", ".join(f"{k}: {v}" for k, v in counts.items()))
    _emit(args, {"reports": [r.to_dict() for r in reports], "summary": counts}, lines)
    return 1 if refuted else 0


def cmd_enumerate(args) -> int:
    G = load_group(args.group)
    cat = enumerate_structures(G, limit=args.limit)
    if args.classify:
        cat = classify(cat)
    data = cat.to_dict()
    if args.output:
        write_json(data, args.output)
    lines = [f"{G.name or args.group}: {len(cat.tables)} structure(s)"]
    if args.classify:
        lines.append(f"  classes up to isomorphism: {len(cat.isomorphism_classes)}")
        lines.append(f"  orbits under Aut(G): {len(cat.automorphism_classes)}")
    _emit(args, data if not args.output else {"count": len(cat.tables), "output": args.output}, lines)
    return 0


def cmd_iso(args) -> int:
    A, B = load_algebra(args.a), load_algebra(args.b)
    f = find_isomorphism(A, B)
    if f is None:
        _emit(args, {"isomorphic": False}, ["not isomorphic"])
        return 0
    pairs = [f"{A.label_of(x)} -> {B.label_of(y)}" for x, y in enumerate(f.map)]
    _emit(args, {"isomorphic": True, "map": list(f.map)}, ["isomorphic:"] + ["  " + p for p in pairs])
    return 0


def cmd_catalog(args) -> int:
    data = {
        "groups": list(builtins.GROUP_FACTORIES),
        "algebras": list(builtins.ALGEBRA_FACTORIES),
        "instances": [{"name": n, "algebra": a, "ideal": s} for n, a, s in builtins.INSTANCES],
    }
    lines = ["groups:   " + " ".join(data["groups"]),
             "algebras: " + " ".join(data["algebras"]),
             "instances:"] + [f"  {n}" for n, _, _ in builtins.INSTANCES]
    _emit(args, data, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="mla", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", parents=[common], help="validate an algebra bundle")
    c.add_argument("bundle", help="bundle path or builtin algebra name")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("construct", parents=[common], help="build a new algebra")
    c.add_argument("kind", choices=["excision", "idealization", "iterated-left", "iterated-right",
                                    "fiber", "direct", "quotient", "restrict"])
    c.add_argument("--in", dest="input")
    c.add_argument("--ideal", default="all")
    c.add_argument("--left")
    c.add_argument("--right")
    c.add_argument("--over", default="trivial")
    c.add_argument("--n", type=int, default=2)
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("verify", parents=[common], help="run theorem checks")
    c.add_argument("theorems", nargs="+", help=f"ids or 'all' ({', '.join(CHECKS)})")
    c.add_argument("--instances", default=None)
    c.add_argument("--in", dest="input")
    c.add_argument("--ideal", default="all")
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_verify)

    c = sub.add_parser("enumerate", parents=[common], help="all star structures on a group")
    c.add_argument("--group", required=True)
    c.add_argument("--classify", action="store_true")
    c.add_argument("--limit", type=int)
    c.add_argument("-o", "--output")
    c.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("iso", parents=[common], help="isomorphism between two algebras")
    c.add_argument("a")
    c.add_argument("b")
    c.set_defaults(func=cmd_iso)

    c = sub.add_parser("catalog", parents=[common], help="builtin catalog")
    c.add_argument("action", choices=["list"])
    c.set_defaults(func=cmd_catalog)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (MLAError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        if getattr(args, "json", False):
            print(json.dumps({"error": type(exc).__name__, "message": msg}))
        else:
            print(f"error: {msg}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
