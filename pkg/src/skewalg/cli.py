"""Command-line interface.  Every command prints a JSON report; the exit code
is 0 when all checks pass, 1 on a failed check, 2 on bad input and 3 when a
resource budget runs out."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .ar import knit
from .errors import InputError, SkewAlgError
from .groups import skew_basic_presentation, skew_group_algebra, twist
from .induction import SkewContext
from .modules import decompose, ext1_dim, hom_space, iso_classes, tau, tau_inv
from .report import RunReport
from .tilting import apr_tilt, endo_algebra, tilting_check
from .translation import (hereditary_component, parse_vertex_key, section_action, section_endo, sigma_section,
                          verify_section, vertex_key)


def _algebra(path):
    return io.parse_algebra(io.load_json(path))


def _modules(paths):
    """Parse module files that must share one algebra."""
    out, alg, alg_doc = [], None, None
    for p in paths:
        doc = io.load_json(p)
        io.validate(doc, io.MODULE_SCHEMA, "module")
        ref = doc["algebra"]
        adoc = io.load_json(Path(p).parent / ref) if isinstance(ref, str) else ref
        if alg is None:
            alg, alg_doc = io.parse_algebra(adoc), adoc
        elif adoc != alg_doc:
            raise InputError(f"{p} is over a different algebra")
        out.append(io.parse_module(doc, alg))
    return out


def _write(path, text):
    Path(path).write_text(text, encoding="utf-8")


def _presentation(bp):
    return {"algebra": io.algebra_to_doc(bp.algebra), "multiplicities": dict(bp.multiplicities)}


# ---------------------------------------------------------------------------
# commands


def cmd_algebra_check(a):
    rep = RunReport("algebra-check")
    alg = _algebra(a.algebra)
    rep.claim("valid", "relations are admissible and the quotient is finite-dimensional", True,
              dimension=alg.dimension)
    rep.data = {"field": str(alg.field), "dimension": alg.dimension, "basis": [str(p) for p in alg.basis]}
    return rep


def cmd_skew(a):
    rep = RunReport("skew")
    alg = _algebra(a.algebra)
    act = io.parse_action(io.load_json(a.action), alg)
    S = skew_group_algebra(alg, act)
    rep.data = {"dimension": S.dim, "radical_dimension": len(S.radical())}
    rep.claim("dimension", "dim A[G] = |G| dim A", S.dim == act.group.order * alg.dimension)
    if a.basic or a.dot:
        bp = skew_basic_presentation(S)
        rep.data["basic"] = _presentation(bp)
        if a.dot:
            _write(a.dot, io.quiver_to_dot(bp.algebra.quiver, "basic"))
    return rep


def cmd_ar(a):
    rep = RunReport("ar")
    alg = _algebra(a.algebra)
    ar = knit(alg, a.cap)
    rep.data = {"count": len(ar), "modules": [list(ar.dim_vector(i)) for i in range(len(ar))],
                "arrows": [[i, j, m] for (i, j), m in sorted(ar.arrows.items())],
                "tau": {str(y): x for y, x in sorted(ar.tau.items())},
                "projectives": {v: i for v, i in ar.projectives.items()}, "injectives": sorted(ar.injective)}
    rep.claim("complete", "knitting terminated with every mesh additive", True, count=len(ar))
    if a.dot:
        _write(a.dot, io.ar_to_dot(ar))
    return rep


def cmd_hom(a):
    M, N = _modules([a.source, a.target])
    rep = RunReport("hom")
    basis = hom_space(M, N)
    f = M.field
    rep.data = {"dimension": len(basis),
                "basis": [{v: [[f.format(x) for x in r] for r in h.mats[v]] for v in M.quiver.vertices} for h in basis]}
    return rep


def cmd_ext1(a):
    M, N = _modules([a.source, a.target])
    rep = RunReport("ext1")
    rep.data = {"dimension": ext1_dim(M, N)}
    return rep


def cmd_tau(a):
    (M,) = _modules([a.module])
    rep = RunReport("tau")
    X = tau_inv(M) if a.inverse else tau(M)
    rep.data = {"module": io.module_to_doc(X), "dim_vector": list(X.dim_vector())}
    return rep


def cmd_twist(a):
    (M,) = _modules([a.module])
    act = io.parse_action(io.load_json(a.action), M.alg)
    if a.element not in act.group.names:
        raise InputError(f"unknown group element {a.element!r}")
    X = twist(M, act.group.index(a.element), act)
    rep = RunReport("twist")
    rep.data = {"module": io.module_to_doc(X), "dim_vector": list(X.dim_vector())}
    return rep


def cmd_induce(a):
    (M,) = _modules([a.module])
    act = io.parse_action(io.load_json(a.action), M.alg)
    ctx = SkewContext(act)
    X = ctx.induce(M)
    rep = RunReport("induce")
    # X lives over the basic algebra; restriction recovers F M as an A-module
    rep.claim("dimension", "dim F M = |G| dim M", ctx.restrict(X).total_dim == act.group.order * M.total_dim)
    rep.data = {"module": io.module_to_doc(X), "dim_vector": list(X.dim_vector()),
                "basic": _presentation(ctx.basic)}
    return rep


def cmd_decompose(a):
    (M,) = _modules([a.module])
    rep = RunReport("decompose")
    classes = iso_classes([s.module for s in decompose(M)])
    rep.data = {"summands": [{"dim_vector": list(X.dim_vector()), "multiplicity": n,
                              "module": io.module_to_doc(X)} for X, n in classes]}
    return rep


def cmd_tilting_check(a):
    (T,) = _modules([a.module])
    rep = RunReport("tilting-check")
    tr = tilting_check(T, a.splitting, a.separating, a.cap)
    rep.claim("tilting", "pd <= 1, Ext^1(T,T) = 0 and as many summands as simples", tr.is_tilting)
    if a.splitting:
        rep.claim("splitting", "the induced torsion pair over End T splits", tr.splitting.ok)
    if a.separating:
        rep.claim("separating", "the torsion pair (Gen T, T-perp) splits", tr.separating.ok)
    rep.data = tr.to_dict()
    return rep


def cmd_endo(a):
    (M,) = _modules([a.module])
    rep = RunReport("endo")
    if a.basic:
        E, bp = endo_algebra(M, basic=True)
        rep.data = {"dimension": E.dim, "radical_dimension": len(E.radical()), "basic": _presentation(bp)}
    else:
        E = endo_algebra(M)
        rep.data = {"dimension": E.dim, "radical_dimension": len(E.radical())}
    return rep


def cmd_apr(a):
    alg = _algebra(a.algebra)
    act = io.parse_action(io.load_json(a.action), alg) if a.action else None
    T = apr_tilt(alg, a.vertices, act)
    tr = tilting_check(T, separating=True, cap=a.cap)
    rep = RunReport("apr")
    rep.claim("tilting", "the APR module is tilting", tr.is_tilting)
    rep.data = {"module": io.module_to_doc(T), "report": tr.to_dict()}
    return rep


def cmd_section(a):
    if a.fixture:
        tq, cact = io.parse_component(io.load_json(a.fixture))
    elif a.algebra and a.action:
        alg = _algebra(a.algebra)
        act = io.parse_action(io.load_json(a.action), alg)
        tq, cact = hereditary_component(act)
    else:
        raise InputError("give --fixture, or --algebra with --action")
    seed = parse_vertex_key(a.seed)
    if seed[0] not in tq.delta.vindex:
        raise InputError(f"unknown seed vertex {a.seed!r}")
    sec = sigma_section(tq, cact, seed, a.expansions)
    diags = verify_section(sec.tq, sec, cact)
    rep = RunReport("section")
    for kind in ("acyclic", "orbits", "convex", "connected", "G-stable"):
        bad = [d.message for d in diags if d.kind == kind]
        rep.claim(f"section.{kind}", f"section axiom: {kind}", not bad, failures=bad)
    H = section_endo(sec.tq, sec)
    sact = section_action(sec, cact, H)
    rep.data = {"vertices": [vertex_key(x) for x in sec.vertices], "labels": sec.names(),
                "endomorphism_algebra": io.algebra_to_doc(H), "action": io.action_to_doc(sact)}
    if a.dot:
        _write(a.dot, io.section_to_dot(sec))
    return rep


def cmd_verify_worked_example(a):
    from .worked_example import verify
    return verify()


# ---------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="skewalg", description=__doc__.split(".")[0])
    p.add_argument("--output", "-o", help="write the JSON report here instead of standard output")
    p.add_argument("--timing", action="store_true", help="include wall-clock timings (not reproducible)")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("algebra-check", cmd_algebra_check, "validate an algebra and list its basis")
    sp.add_argument("algebra")
    sp = add("skew", cmd_skew, "skew group algebra A[G]")
    sp.add_argument("algebra")
    sp.add_argument("action")
    sp.add_argument("--basic", action="store_true", help="compute the basic presentation")
    sp.add_argument("--dot", help="write the basic quiver as Graphviz")
    sp = add("ar", cmd_ar, "Auslander-Reiten quiver by knitting")
    sp.add_argument("algebra")
    sp.add_argument("--cap", type=int, default=None)
    sp.add_argument("--dot")
    for name, fn in (("hom", cmd_hom), ("ext1", cmd_ext1)):
        sp = add(name, fn, f"{name}(source, target)")
        sp.add_argument("source")
        sp.add_argument("target")
    sp = add("tau", cmd_tau, "Auslander-Reiten translate")
    sp.add_argument("module")
    sp.add_argument("--inverse", action="store_true")
    sp = add("twist", cmd_twist, "twist a module by a group element")
    sp.add_argument("module")
    sp.add_argument("action")
    sp.add_argument("--element", required=True)
    sp = add("induce", cmd_induce, "induce a module to the basic skew group algebra")
    sp.add_argument("module")
    sp.add_argument("action")
    sp = add("decompose", cmd_decompose, "indecomposable summands with multiplicities")
    sp.add_argument("module")
    sp = add("tilting-check", cmd_tilting_check, "tilting certificate")
    sp.add_argument("module")
    sp.add_argument("--splitting", action="store_true")
    sp.add_argument("--separating", action="store_true")
    sp.add_argument("--cap", type=int, default=None)
    sp = add("endo", cmd_endo, "endomorphism algebra")
    sp.add_argument("module")
    sp.add_argument("--basic", action="store_true")
    sp = add("apr", cmd_apr, "APR tilt at simple projective vertices")
    sp.add_argument("algebra")
    sp.add_argument("--vertices", nargs="+", required=True)
    sp.add_argument("--action")
    sp.add_argument("--cap", type=int, default=None)
    sp = add("section", cmd_section, "G-stable section through a seed")
    sp.add_argument("--fixture")
    sp.add_argument("--algebra")
    sp.add_argument("--action")
    sp.add_argument("--seed", required=True, help="vertex key such as r2@0")
    sp.add_argument("--expansions", type=int, default=None)
    sp.add_argument("--dot")
    add("verify-paper-example", cmd_verify_worked_example, "run the built-in worked example")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rep = args.fn(args)
    except SkewAlgError as e:
        doc = {"command": args.command, "error": type(e).__name__, "message": str(e), "passed": False}
        text = io.dumps(doc)
        if args.output:
            _write(args.output, text)
        else:
            sys.stdout.write(text)
        print(f"skewalg: {type(e).__name__}: {e}", file=sys.stderr)
        return e.exit_code
    text = io.dumps(rep.to_dict(with_timing=args.timing))
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
