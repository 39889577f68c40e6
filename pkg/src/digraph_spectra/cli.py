"""``spectra``: graph I/O, spectra, certificates and batch fuzzing from the shell.

Exit codes: 0 success / pass, 1 certificate failure, 2 input or hypothesis error.

Vertex sets are comma-separated ids (``--H a,b,c``); edge sets are
comma-separated ``x>y`` pairs (``--E1 '0>1,2>0'``, quoted for the shell).  Anything else (partitions,
flower petals) goes into a JSON sidecar passed with ``--params``; its keys
mirror the long flags, e.g. ``{"H": ["a", "b"], "partition": {...},
"core": [...], "petals": [[["p1", "p2"], "a"]]}``.
"""

from __future__ import annotations

import argparse
import inspect
import json
import sys

from . import __version__
from .eigen import BACKEND, eig_general, eig_m_symmetric
from .generators import cycle, random_balanced, random_tree, symmetric_star
from .graph import GraphError, validate
from .graph_io import load_graph, parse_graph, serialize_graph
from .operators import OperatorError, adjoint_laplacian, dirichlet, laplacian, special_laplacian
from .theorems import (
    FAMILIES,
    HypothesisError,
    Partition,
    TheoremId,
    batch_certify,
    certify,
    flower_from_parts,
    partition_from_split,
    validate_partition,
)
from .theorems import checks
from .theorems.batch import GenerationError

OPERATORS = ("Delta", "DeltaStar", "S")


class InputError(Exception):
    pass


def _read_graph(path):
    try:
        if path in (None, "-"):
            return parse_graph(sys.stdin.buffer.read())
        return load_graph(path)
    except json.JSONDecodeError as exc:
        where = "stdin" if path in (None, "-") else path
        raise InputError(f"{where}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    except OSError as exc:
        raise InputError(str(exc)) from None


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    except OSError as exc:
        raise InputError(str(exc)) from None


def _ids(text):
    if text is None:
        return None
    if isinstance(text, list):
        return [str(v) for v in text]
    return [v.strip() for v in text.split(",") if v.strip()]


def _edges(text):
    if text is None:
        return None
    if isinstance(text, list):
        return [(str(e[0]), str(e[1])) for e in text]
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        if ">" not in tok:
            raise InputError(f"edge {tok!r} must look like x>y")
        x, y = tok.split(">", 1)
        out.append((x.strip(), y.strip()))
    return out


def _ints(text):
    if text is None:
        return None
    if isinstance(text, list):
        return [int(v) for v in text]
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise InputError(f"index list {text!r} must be comma-separated integers") from None


def _emit(args, text: str):
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def _fmt(x) -> str:
    if isinstance(x, complex):
        return f"{x.real:.10g}{x.imag:+.10g}i"
    return f"{x:.10g}"


# -- commands ----------------------------------------------------------------


def cmd_validate(args) -> int:
    g = _read_graph(args.input)
    rep = validate(g)
    if args.output == "json":
        doc = {"n": g.n, "edges": len(g.edges), "ok": rep.ok, **rep.to_dict()}
        _emit(args, json.dumps(doc, indent=2))
    else:
        v, d = rep.worst_defect()
        lines = [
            f"vertices            {g.n}",
            f"edges               {len(g.edges)}",
            f"no loops            {not rep.has_loops}",
            f"weights positive    {rep.weights_positive}",
            f"hypothesis (cnx)    {rep.hypothesis_cnx}" + (f"  fails at {list(rep.cnx_failures)}" if rep.cnx_failures else ""),
            f"connected           {rep.connected}",
            f"strongly connected  {rep.strongly_connected}",
            f"Kirchhoff balance   {rep.beta_balanced}  worst defect {_fmt(d)} at {v!r}",
            "VALID" if rep.ok else "INVALID",
        ]
        _emit(args, "\n".join(lines))
    return 0 if rep.ok else 2


def _operator(g, name, mode):
    if name == "Delta":
        return laplacian(g, mode)
    if name == "DeltaStar":
        return adjoint_laplacian(g, mode)
    return special_laplacian(g, mode)


def cmd_spectrum(args) -> int:
    g = _read_graph(args.input)
    A = _operator(g, args.operator, args.mode)
    if args.dirichlet:
        A = dirichlet(A, _ids(args.dirichlet))
    if args.operator == "S":
        spec = eig_m_symmetric(A, vectors=False)
    else:
        spec = eig_general(A)
    doc = {"operator": args.operator, "mode": args.mode, "dirichlet": _ids(args.dirichlet), "backend": BACKEND, "n": len(spec)}
    doc.update(spec.to_dict())
    if args.output == "json":
        _emit(args, json.dumps(doc, indent=2))
        return 0
    lines = [f"# sigma({args.operator}) mode={args.mode} n={len(spec)} residual={doc['residual']}"]
    if doc["type"] == "real":
        lines.append(f"{'k':>4}  {'lambda':>18}")
        for k, lam in enumerate(spec.eigenvalues, 1):
            lines.append(f"{k:>4}  {_fmt(lam):>18}")
    else:
        lines.append(f"{'k':>4}  {'Re':>18}  {'Im':>18}")
        for k, z in enumerate(spec.eigenvalues, 1):
            lines.append(f"{k:>4}  {_fmt(z.real):>18}  {_fmt(z.imag):>18}")
    _emit(args, "\n".join(lines))
    return 0


def cmd_matrix(args) -> int:
    g = _read_graph(args.input)
    A = _operator(g, args.operator, args.mode)
    if args.dirichlet:
        A = dirichlet(A, _ids(args.dirichlet))
    if args.output == "json":
        _emit(args, json.dumps(A.to_dict(), indent=2))
    else:
        head = "".join(f" {v:>17}" for v in A.order)
        rows = [f"{'':>8}{head}"]
        for v, row in zip(A.order, A.entries):
            rows.append(f"{v:>8}" + "".join(f" {_fmt(x):>17}" for x in row))
        _emit(args, "\n".join(rows))
    return 0


def _param(args, params: dict, key: str):
    val = getattr(args, key, None)
    return val if val is not None else params.get(key)


def _certify_call(th: TheoremId, args):
    params = _read_json(args.params) if args.params else {}
    g = _read_graph(args.input)
    kw = {}
    H = _ids(_param(args, params, "H"))
    if th in (
        TheoremId.SUBGRAPH_INTERLACE,
        TheoremId.DIRICHLET_INTERLACE,
        TheoremId.DIRICHLET_MAX_COMBINE,
        TheoremId.CYCLE_SUBGRAPH_COROLLARY,
    ):
        if not H:
            raise InputError(f"{th.value} needs a subgraph: --H a,b,...")
        pos = (g, H)
    elif th is TheoremId.DIRICHLET_REALPART:
        U = _ids(_param(args, params, "U"))
        if not U:
            raise InputError("DIRICHLET_REALPART needs --U a,b,...")
        pos = (g, U)
    elif th in (TheoremId.EDGE_WEYL, TheoremId.EDGE_SANDWICH):
        E1 = _edges(_param(args, params, "E1"))
        if E1 is None:
            raise InputError(f"{th.value} needs the edge set E_1: --E1 x>y,...")
        pos = (g, E1)
    elif th is TheoremId.EDGE_MONOTONE:
        plus = _param(args, params, "plus")
        if not plus:
            raise InputError("EDGE_MONOTONE needs --plus graph.json (G with added edges)")
        pos = (g, _read_graph(plus))
    elif th is TheoremId.SINGLE_EDGE_ATTACH:
        other = _param(args, params, "other")
        attach = _param(args, params, "attach")
        oattach = _param(args, params, "other_attach")
        if not (other and attach is not None and oattach is not None):
            raise InputError("SINGLE_EDGE_ATTACH needs --other graph.json --attach x --other-attach y")
        pos = (g, _read_graph(other), attach, oattach)
        w = _param(args, params, "weight")
        if w is not None:
            kw["weight"] = float(w)
    elif th is TheoremId.FLOWER_MONOTONE:
        core = _ids(_param(args, params, "core"))
        petals = params.get("petals")
        if not core or petals is None:
            raise InputError('FLOWER_MONOTONE needs --core and a "petals" list in --params')
        pos = (flower_from_parts(g, core, petals),)
    elif th in (TheoremId.PARTITION_BOUND, TheoremId.PARTITION_REALPART):
        pos = (g, _partition(args, params, g))
    else:
        pos = (g,)
    if th in (TheoremId.GREEN_IDENTITY, TheoremId.POSITIVITY_S):
        kw["trials"] = args.trials
        kw["seed"] = args.seed
    for key in ("ks", "js", "ls"):
        v = _ints(_param(args, params, key))
        if v is not None:
            kw[key] = v
    if args.mode is not None:
        kw["mode"] = args.mode
    if args.tol is not None:
        kw["tol"] = args.tol
    return pos, kw


def _partition(args, params, g):
    doc = params.get("partition")
    if getattr(args, "partition", None):
        doc = _read_json(args.partition)
    if doc is not None:
        return Partition.from_dict(doc)
    A = _ids(_param(args, params, "A"))
    if not A:
        raise InputError("a partition is needed: --partition file.json or --A a,b,...")
    return partition_from_split(g, A)


def _accepts(th: TheoremId, kw: dict):
    sig = inspect.signature(checks._DISPATCH[th])
    for k in kw:
        if k not in sig.parameters:
            flag = "--" + k.replace("_", "-")
            raise InputError(f"{th.value} does not take {flag}")


def cmd_certify(args) -> int:
    th = TheoremId.parse(args.theorem)
    pos, kw = _certify_call(th, args)
    _accepts(th, kw)
    cert = certify(th, *pos, **kw)
    if args.output == "json":
        _emit(args, json.dumps(cert.to_dict(), indent=2))
    else:
        lines = [cert.summary()]
        for c in cert.failures():
            lines.append(f"  FAIL {c.desc}: lhs={_fmt(c.lhs)} rhs={_fmt(c.rhs)} margin={c.margin:.3e}")
        if args.verbose:
            for c in cert.checks:
                lines.append(f"  {c.desc}: margin={c.margin:.3e}")
        _emit(args, "\n".join(lines))
    return 0 if cert.passed else 1


def cmd_batch(args) -> int:
    tol = args.tol
    summary = batch_certify(
        args.theorem, args.trials, args.seed, n_max=args.n_max, family=args.family, tol=tol, workers=args.workers
    )
    if args.output == "json":
        _emit(args, json.dumps(summary.to_dict(), indent=2))
    else:
        mm = summary.to_dict()["min_margin"]
        lines = [
            f"{summary.theorem.value}: trials={summary.trials} passed={summary.passed} "
            f"failed={summary.failed} checks={summary.checks} min_margin={mm if mm is None else f'{mm:.3e}'}"
        ]
        for c in summary.failures:
            lines.append(json.dumps(c.to_dict()))
        _emit(args, "\n".join(lines))
    return 0 if summary.ok else 1


def cmd_generate(args) -> int:
    if args.family == "cycle":
        g = cycle(args.n)
    elif args.family == "star":
        g = symmetric_star(args.q)
    elif args.family == "tree":
        g = random_tree(args.n, args.seed)
    else:
        g = random_balanced(args.n, args.extra, args.seed, random_measure=args.random_measure)
    _emit(args, serialize_graph(g, indent=None if args.compact else 2))
    return 0


def cmd_partition_check(args) -> int:
    g = _read_graph(args.input)
    params = _read_json(args.params) if args.params else {}
    p = _partition(args, params, g)
    rep = validate_partition(g, p)
    if args.output == "json":
        _emit(args, json.dumps({"partition": p.to_dict(), **rep.to_dict()}, indent=2))
    else:
        lines = []
        for key, label in (
            ("condition1", "(1) vertex splits"),
            ("condition2", "(2) edge split"),
            ("condition3", "(3) edge boundaries"),
            ("structure", "subgraphs and part"),
        ):
            ok = getattr(rep, key)
            lines.append(f"{label:<22} {'ok' if ok else 'FAIL'}")
            for msg in rep.problems.get(key, ()):
                lines.append(f"    {msg}")
        lines.append(f"int(A) = {sorted(rep.interior_A)}  int(B) = {sorted(rep.interior_B)}")
        lines.append("VALID" if rep.ok else "INVALID")
        _emit(args, "\n".join(lines))
    return 0 if rep.ok else 2


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="spectra",
        description="Spectra and eigenvalue-inequality certificates for Kirchhoff-balanced directed graphs.",
        epilog="Environment: SPECTRA_TOL overrides the default inequality tolerance; "
        "DIGRAPH_SPECTRA_PURE=1 forces the pure-Python eigen kernels.",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND} kernels)")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, graph=True):
        if graph:
            sp.add_argument("--input", help="graph JSON file (default: stdin)")
        sp.add_argument("--out", help="write the report here instead of stdout")
        sp.add_argument("--output", choices=("text", "json"), default="text")

    sp = sub.add_parser("validate", help="check loops, weights, Hypothesis (cnx), connectivity, balance")
    common(sp)
    sp.set_defaults(func=cmd_validate)

    for name, func, hlp in (
        ("spectrum", cmd_spectrum, "eigenvalues of Delta, DeltaStar or S"),
        ("matrix", cmd_matrix, "dump an operator matrix"),
    ):
        sp = sub.add_parser(name, help=hlp)
        common(sp)
        sp.add_argument("--operator", choices=OPERATORS, default="S")
        sp.add_argument("--mode", choices=("raw", "normalized"), default="raw")
        sp.add_argument("--dirichlet", metavar="IDS", help="restrict to these vertices (Dirichlet)")
        sp.set_defaults(func=func)

    sp = sub.add_parser(
        "certify",
        help="certify one theorem on one input",
        description="Theorem-specific inputs: --H (subgraph), --U (Dirichlet set), --E1 (edge part), "
        "--plus (G with added edges), --other/--attach/--other-attach/--weight (single-edge attach), "
        "--core plus petals in --params (flower), --partition or --A (repartition).",
    )
    common(sp)
    sp.add_argument("--theorem", required=True, type=str.upper, choices=[t.value for t in TheoremId])
    sp.add_argument("--params", help="JSON sidecar with theorem inputs")
    sp.add_argument("--mode", choices=("raw", "normalized", "both"))
    sp.add_argument("--tol", type=float)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--trials", type=int, default=1, help="random test functions (GREEN_IDENTITY, POSITIVITY_S)")
    sp.add_argument("--H", metavar="IDS")
    sp.add_argument("--U", metavar="IDS")
    sp.add_argument("--A", metavar="IDS", help="split V into A and its complement")
    sp.add_argument("--E1", metavar="EDGES", help="edges x>y, comma-separated; quote for the shell")
    sp.add_argument("--plus", metavar="FILE")
    sp.add_argument("--other", metavar="FILE")
    sp.add_argument("--attach")
    sp.add_argument("--other-attach", dest="other_attach")
    sp.add_argument("--weight", type=float)
    sp.add_argument("--core", metavar="IDS")
    sp.add_argument("--partition", metavar="FILE")
    sp.add_argument("--ks", metavar="INTS")
    sp.add_argument("--js", metavar="INTS")
    sp.add_argument("--ls", metavar="INTS")
    sp.add_argument("-v", "--verbose", action="store_true", help="list every check")
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("batch", help="certify many generated instances")
    common(sp, graph=False)
    sp.add_argument("--theorem", required=True, type=str.upper, choices=[t.value for t in TheoremId])
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--n-max", dest="n_max", type=int, default=10)
    sp.add_argument("--family", choices=FAMILIES)
    sp.add_argument("--tol", type=float)
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_batch)

    sp = sub.add_parser("generate", help="write a graph JSON")
    common(sp, graph=False)
    sp.add_argument("family", choices=("cycle", "star", "tree", "balanced"))
    sp.add_argument("--n", type=int, default=5)
    sp.add_argument("--q", type=int, default=3)
    sp.add_argument("--extra", type=int, default=2, help="extra random cycles (balanced)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--random-measure", action="store_true")
    sp.add_argument("--compact", action="store_true")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("partition-check", help="check the repartition conditions (1)-(3)")
    common(sp)
    sp.add_argument("--partition", metavar="FILE")
    sp.add_argument("--A", metavar="IDS")
    sp.add_argument("--params", help="JSON sidecar holding a partition")
    sp.set_defaults(func=cmd_partition_check)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GraphError, OperatorError, HypothesisError, GenerationError, ValueError) as exc:
        sys.stderr.write(f"spectra: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
