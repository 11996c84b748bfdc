"""Command-line front end.

Exit codes: 0 accept/success, 1 reject (or crosscheck disagreements),
2 usage error, 3 precondition error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .classes import CLASS_RECOGNIZERS
from .graph import GraphError, PreconditionError
from .oracles import is_1po_2sat
from .patterns import find_containment, pattern
from .structural import (
    Certificate,
    Witness,
    orient_sink_free,
    recognize,
)
from .workbench import formats
from .workbench.crosscheck import SUITES, crosscheck
from .workbench.generators import KINDS, GeneratorSpec, generate

EXIT_ACCEPT, EXIT_REJECT, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


def _read_graph(args):
    text = open(args.inp).read() if args.inp and args.inp != "-" else sys.stdin.read()
    fmt = args.format
    if fmt == "auto":
        stripped = text.strip()
        fmt = "edgelist" if (" " in stripped or "\n" in stripped or stripped.startswith("n=")) else "graph6"
    return formats.parse(text, fmt)


def _write(args, text):
    if args.out and args.out != "-":
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit(args, value, default="json"):
    fmt = args.out_format or default
    _write(args, formats.serialize(value, fmt))


def cmd_recognize(args):
    g = _read_graph(args)
    cls = args.cls
    if cls in ("1po-k4mf", "1po-outerplanar"):
        cert = recognize(g, "k4mf" if cls == "1po-k4mf" else "outerplanar")
    elif cls == "1po-2sat":
        res = is_1po_2sat(g)
        cert = Certificate("accept", orientation=res.orientation, reason="2-SAT satisfiable") if res \
            else Certificate("reject", reason="2-SAT unsatisfiable")
    elif cls in CLASS_RECOGNIZERS:
        ok = CLASS_RECOGNIZERS[cls](g)
        _write(args, json.dumps({"class": cls, "member": bool(ok)}) + "\n")
        return EXIT_ACCEPT if ok else EXIT_REJECT
    else:
        raise SystemExit(f"unknown class {cls!r}")
    _emit(args, cert)
    return EXIT_ACCEPT if cert.accepted else EXIT_REJECT


def cmd_orient(args):
    g = _read_graph(args)
    if args.sink is not None:
        res = is_1po_2sat(g, args.sink)
        if not res:
            _write(args, json.dumps({"verdict": "reject", "reason": f"no 1-perfect orientation with sink {args.sink}"}) + "\n")
            return EXIT_REJECT
        d = res.orientation
    elif args.sink_free:
        d = orient_sink_free(g)
    else:
        res = is_1po_2sat(g)
        if not res:
            _write(args, json.dumps({"verdict": "reject", "reason": "not 1-perfectly orientable"}) + "\n")
            return EXIT_REJECT
        d = res.orientation
    _emit(args, d, default="dot")
    return EXIT_ACCEPT


def cmd_witness(args):
    g = _read_graph(args)
    model = find_containment(g, pattern(args.pattern), "induced")
    if model is None:
        _write(args, json.dumps({"pattern": args.pattern, "branch_sets": None}) + "\n")
        return EXIT_REJECT
    cert = Certificate("reject", witness=Witness(args.pattern, model), reason=f"{args.pattern} induced minor")
    _write(args, json.dumps(formats.certificate_to_dict(cert)["witness"]) + "\n")
    return EXIT_ACCEPT


def cmd_generate(args):
    params = {}
    if args.n is not None:
        params["n"] = args.n
    if args.k is not None:
        params["k"] = args.k
    if args.hole is not None:
        params["hole"] = args.hole
    if args.pieces is not None:
        params["pieces"] = args.pieces
    g = generate(GeneratorSpec(args.kind, params, args.seed))
    _emit(args, g, default="graph6")
    return EXIT_ACCEPT


def cmd_crosscheck(args):
    report = crosscheck(args.max_n, args.suite.split(","), workers=args.workers)
    lines = [f"checked {report.graphs_checked} graphs up to n={report.n_max}: "
             f"{len(report.disagreements)} disagreements"]
    lines += [f"{g6}\t{pair}\t{verdicts}" for g6, pair, verdicts in report.disagreements]
    _write(args, "\n".join(lines) + "\n")
    return EXIT_ACCEPT if report.ok else EXIT_REJECT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="onepo", description="1-perfect orientations of small graphs")
    io = argparse.ArgumentParser(add_help=False)
    io.add_argument("--in", dest="inp", default="-", help="input file (default stdin)")
    io.add_argument("--out", default="-", help="output file (default stdout)")
    io.add_argument("--format", default="auto", choices=["auto", "graph6", "edgelist", "json"],
                    help="input graph format")
    io.add_argument("--out-format", choices=list(formats.FORMATS), help="output format")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", parents=[io], help="decide class membership")
    p.add_argument("--class", dest="cls", required=True,
                   choices=["1po-k4mf", "1po-outerplanar", "1po-2sat", *CLASS_RECOGNIZERS])
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("orient", parents=[io], help="produce a 1-perfect orientation")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--sink", type=int)
    group.add_argument("--sink-free", action="store_true")
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("witness", parents=[io], help="find an induced-minor model of a pattern")
    p.add_argument("--pattern", required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("generate", parents=[io], help="generate a graph")
    p.add_argument("--kind", required=True, choices=KINDS)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--hole", type=int)
    p.add_argument("--pieces", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("crosscheck", parents=[io], help="exhaustive theorem sweeps")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--suite", required=True, help=f"comma-separated: {','.join(SUITES)}")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_crosscheck)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_ACCEPT
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"precondition error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (GraphError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
