"""Command line front end.

Exit codes: 0 success, 1 a check or verification failed, 2 bad input
(unreadable file, malformed document, domain mismatch, missing
structure), 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import traceback

from . import cd, docio, maps, quantale, suite
from .errors import LatqError, NotContinuous
from .lattice import GeneratorSpec, build_poset, downset_lattice, generate


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _ref(target_abs: str, out: str | None) -> str:
    base = os.path.dirname(os.path.abspath(out)) if out else os.getcwd()
    return os.path.relpath(target_abs, base)


def _load_map_with_refs(path: str):
    doc = docio._load_json(path)
    base = os.path.dirname(os.path.abspath(path))
    f = docio.map_from_doc(doc, base)
    dom_abs = os.path.abspath(docio._resolve(doc["dom"], base))
    cod_abs = os.path.abspath(docio._resolve(doc["cod"], base))
    return f, dom_abs, cod_abs


def _emit_map(f, dom_abs: str, cod_abs: str, out: str | None) -> None:
    doc = docio.map_to_doc(f, _ref(dom_abs, out), _ref(cod_abs, out))
    _emit(docio.dumps(doc), out)


# ------------------------------------------------------------- subcommands

def _cmd_gen(args) -> int:
    if args.shape == "chain":
        L = generate(GeneratorSpec("chain", n=args.size))
    elif args.shape == "boolean":
        L = generate(GeneratorSpec("boolean", k=args.exponent))
    elif args.shape == "m3":
        L = generate(GeneratorSpec("m3"))
    elif args.shape == "n5":
        L = generate(GeneratorSpec("n5"))
    elif args.shape == "product":
        L = generate(GeneratorSpec("product", a=args.a, b=args.b))
    elif args.shape == "random":
        L = generate(GeneratorSpec("random", seed=args.seed, n=args.size))
    else:  # downsets
        doc = docio._load_json(args.posetfile)
        if not isinstance(doc, dict) or not isinstance(doc.get("name"), str) \
                or not isinstance(doc.get("n"), int) \
                or not isinstance(doc.get("covers"), list):
            raise docio.ParseError(
                "poset document needs name, n, and covers")
        p = build_poset(doc["n"], [tuple(c) for c in doc["covers"]])
        L = downset_lattice(p, name=f"downsets_{doc['name']}")
    _emit(docio.dumps(docio.lattice_to_doc(L)), args.output)
    return 0


def _cmd_check(args) -> int:
    L = docio.load_lattice(args.lattice)
    profile = cd.classify_lattice(L)
    checks = [
        cd.raney_join_criterion(L),
        cd.raney_meet_criterion(L),
        cd.distributive_oracle(L),
    ]
    agree = len({c.holds for c in checks}) == 1
    if args.json:
        doc = {
            "profile": profile.as_doc(),
            "criteria": [c.as_doc(args.timing) for c in checks],
            "criteria_agree": agree,
        }
        _emit(docio.dumps(doc), None)
        return 0
    lines = [f"{k}: {v}" for k, v in profile.as_doc().items()]
    for c in checks:
        status = "holds" if c.holds else f"fails (witness {c.witness})"
        stamp = f" [{c.elapsed * 1000.0:.3f} ms]" if args.timing else ""
        lines.append(f"{c.name}: {status}{stamp}")
    lines.append(f"criteria agree: {agree}")
    _emit("\n".join(lines) + "\n", None)
    return 0


def _cmd_map(args) -> int:
    if args.kind in ("o", "omega", "c", "a", "alpha", "nu"):
        L = docio.load_lattice(args.lattice)
        x = getattr(args, "element", None)
        f = maps.special(L, args.kind, x)
        lat_abs = os.path.abspath(args.lattice)
        _emit_map(f, lat_abs, lat_abs, args.output)
        return 0
    f, dom_abs, cod_abs = _load_map_with_refs(args.mapfile)
    if args.kind == "interior":
        _emit_map(maps.interior(f), dom_abs, cod_abs, args.output)
    elif args.kind == "adjoint":
        cls = maps.classify(f)
        if cls.join_continuous:
            _emit_map(maps.right_adjoint(f), cod_abs, dom_abs, args.output)
        elif cls.meet_continuous:
            _emit_map(maps.left_adjoint(f), cod_abs, dom_abs, args.output)
        else:
            raise NotContinuous(
                "map preserves neither joins nor meets; no adjoint on "
                "either side")
    elif args.kind == "raney-join":
        _emit_map(maps.raney_join(f), dom_abs, cod_abs, args.output)
    else:  # raney-meet
        _emit_map(maps.raney_meet(f), dom_abs, cod_abs, args.output)
    return 0


def _cmd_q(args) -> int:
    if args.op in ("enumerate", "cyclic", "central", "dualizing"):
        L = docio.load_lattice(args.lattice)
        Q = quantale.enumerate_homset(L, L, cap=args.cap)
        if args.op == "enumerate":
            lines = [f"count {len(Q)}"]
            if args.list:
                lines.extend(json.dumps(f.values.tolist()) for f in Q.maps)
        else:
            members = {
                "cyclic": quantale.cyclic_elements,
                "central": quantale.central_elements,
                "dualizing": quantale.dualizing_elements,
            }[args.op](Q)
            lines = [f"count {len(members)}"]
            lines.extend(json.dumps(f.values.tolist()) for f in members)
        _emit("\n".join(lines) + "\n", None)
        return 0
    if args.op == "star":
        f, dom_abs, cod_abs = _load_map_with_refs(args.mapfile)
        _emit_map(quantale.star(f), cod_abs, dom_abs, args.output)
        return 0
    if args.op == "compose":
        f, fdom, fcod = _load_map_with_refs(args.outer)
        g, gdom, gcod = _load_map_with_refs(args.inner)
        _emit_map(maps.compose(f, g), gdom, fcod, args.output)
        return 0
    if args.op == "residual-left":
        g, gdom, _ = _load_map_with_refs(args.g)
        h, hdom, _ = _load_map_with_refs(args.h)
        _emit_map(quantale.residual_left(g, h), hdom, gdom, args.output)
        return 0
    if args.op == "residual-right":
        h, _, hcod = _load_map_with_refs(args.h)
        f, _, fcod = _load_map_with_refs(args.f)
        _emit_map(quantale.residual_right(h, f), fcod, hcod, args.output)
        return 0
    # oplus
    g, _, gcod = _load_map_with_refs(args.g)
    f, fdom, _ = _load_map_with_refs(args.f)
    _emit_map(quantale.dual_tensor(g, f), fdom, gcod, args.output)
    return 0


def _cmd_verify(args) -> int:
    if args.corpus == "builtin":
        corpus = suite.builtin_corpus()
    else:
        if not os.path.isdir(args.corpus):
            raise LatqError(f"corpus directory not found: {args.corpus}")
        files = sorted(
            fn for fn in os.listdir(args.corpus) if fn.endswith(".json"))
        if not files:
            raise LatqError(f"no .json lattice files in {args.corpus}")
        corpus = [docio.load_lattice(os.path.join(args.corpus, fn))
                  for fn in files]
    checks = args.checks.split(",") if args.checks else None
    report = suite.run_suite(corpus=corpus, checks=checks,
                             seed=args.seed, cap=args.cap)
    if args.json:
        _emit(docio.dumps(report.as_doc(args.timing)), None)
    else:
        _emit(report.render_text(), None)
    return 0 if report.ok else 1


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="latq",
        description="finite-lattice workbench: join-continuous maps, "
                    "transforms, homset structure, law checks")
    sub = ap.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a lattice file")
    gsub = gen.add_subparsers(dest="shape", required=True)
    g_chain = gsub.add_parser("chain")
    g_chain.add_argument("size", type=int)
    g_bool = gsub.add_parser("boolean")
    g_bool.add_argument("exponent", type=int)
    gsub.add_parser("m3")
    gsub.add_parser("n5")
    g_prod = gsub.add_parser("product")
    g_prod.add_argument("a", type=int)
    g_prod.add_argument("b", type=int)
    g_rand = gsub.add_parser("random")
    g_rand.add_argument("--seed", type=int, default=0)
    g_rand.add_argument("--size", type=int, default=8)
    g_down = gsub.add_parser("downsets")
    g_down.add_argument("posetfile")
    for p in (g_chain, g_bool, gsub.choices["m3"], gsub.choices["n5"],
              g_prod, g_rand, g_down):
        p.add_argument("-o", "--output")

    chk = sub.add_parser("check", help="profile a lattice file")
    chk.add_argument("lattice")
    chk.add_argument("--json", action="store_true")
    chk.add_argument("--timing", action="store_true")

    mp = sub.add_parser("map", help="build or transform maps")
    msub = mp.add_subparsers(dest="kind", required=True)
    for kind in ("o", "omega"):
        p = msub.add_parser(kind)
        p.add_argument("lattice")
        p.add_argument("-o", "--output")
    for kind in ("c", "a", "alpha", "nu"):
        p = msub.add_parser(kind)
        p.add_argument("element", type=int)
        p.add_argument("lattice")
        p.add_argument("-o", "--output")
    for kind in ("interior", "adjoint", "raney-join", "raney-meet"):
        p = msub.add_parser(kind)
        p.add_argument("mapfile")
        p.add_argument("-o", "--output")

    q = sub.add_parser("q", help="endo-homset structure and residuals")
    qsub = q.add_subparsers(dest="op", required=True)
    for op in ("enumerate", "cyclic", "central", "dualizing"):
        p = qsub.add_parser(op)
        p.add_argument("lattice")
        p.add_argument("--cap", type=int, default=quantale.DEFAULT_CAP)
        if op == "enumerate":
            p.add_argument("--list", action="store_true")
    q_star = qsub.add_parser("star")
    q_star.add_argument("mapfile")
    q_star.add_argument("-o", "--output")
    q_comp = qsub.add_parser("compose")
    q_comp.add_argument("outer")
    q_comp.add_argument("inner")
    q_comp.add_argument("-o", "--output")
    q_rl = qsub.add_parser("residual-left")
    q_rl.add_argument("g")
    q_rl.add_argument("h")
    q_rl.add_argument("-o", "--output")
    q_rr = qsub.add_parser("residual-right")
    q_rr.add_argument("h")
    q_rr.add_argument("f")
    q_rr.add_argument("-o", "--output")
    q_op = qsub.add_parser("oplus")
    q_op.add_argument("g")
    q_op.add_argument("f")
    q_op.add_argument("-o", "--output")

    ver = sub.add_parser("verify", help="run the law-check suite")
    ver.add_argument("--corpus", default="builtin",
                     help="'builtin' or a directory of lattice .json files")
    ver.add_argument("--checks", default=None,
                     help="comma separated check ids, e.g. T3,T7")
    ver.add_argument("--json", action="store_true")
    ver.add_argument("--timing", action="store_true")
    ver.add_argument("--seed", type=int, default=0)
    ver.add_argument("--cap", type=int, default=quantale.DEFAULT_CAP)
    return ap


_DISPATCH = {
    "gen": _cmd_gen,
    "check": _cmd_check,
    "map": _cmd_map,
    "q": _cmd_q,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return _DISPATCH[args.command](args)
    except (LatqError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except Exception:
        traceback.print_exc()
        return 3


if __name__ == "__main__":
    sys.exit(main())
