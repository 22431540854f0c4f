"""Command-line interface: ``alpha-spectra <command> ...``.

Exit codes: 0 pass, 1 verification failure (witnesses printed), 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from importlib import resources
from typing import Sequence, TextIO

from . import enumerate as en
from . import families as fam
from .appendix import APPENDIX_IDS, appendix_check
from .graph import Graph, GraphError, is_connected
from .graph6 import decode, encode
from .invariants import independence_number, is_bipartite, is_tree, matching_number
from .search import (
    SCHEMA,
    THEOREM_IDS,
    HypothesisError,
    SearchRangeError,
    TheoremVerdict,
    extremal,
    resolve_threads,
    verify_theorem,
)
from .spectral import (
    coarsest_equitable,
    index_bounds,
    largest_eigenvalue_of_quotient,
    quotient_matrix,
    spectral_radius,
)

FAMILY_HELP = """\
graph arguments are graph6 strings or family:kind(p1,...) specs:
  path(n) cycle(n) complete(n) empty(n) star(n) complete_bipartite(a,b)
  tshape(a,b,c)      spider T(a,b,c), legs of a <= b <= c vertices
  doublesnake(n)     two degree-3 vertices joined by a path, two leaves each
  g1(s,t) g2(s,t)    edge (g2: subdivided edge) with s and t pendants
  h1..h4(s,t,k)      three-centre caterpillars with s, t, k pendants
  f(s,t)             cliques K_s and K_t joined by one bridge
  sstar(n,k)         star K(1,n-k) with a pendant on k-1 of its leaves
  ksplit(n,i)        independent i-set joined to a clique on n-i vertices
"""


class UsageError(Exception):
    pass


def report_schema() -> dict:
    """The shipped ``report-v1`` JSON schema."""
    return json.loads(resources.files(__package__).joinpath("schema/report-v1.json").read_text())


# -- argument helpers ---------------------------------------------------------------

def parse_graph(text: str) -> Graph:
    """``family:kind(...)``, a bare ``kind(...)``, or graph6."""
    t = text.strip()
    if t.startswith("family:"):
        return fam.build(t[len("family:"):])
    if "(" in t:
        return fam.build(t)
    return decode(t)


def parse_range(text: str) -> list[int]:
    """``a..b`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected a..b") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def parse_grid(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad alpha grid {text!r}; expected comma-separated numbers") from None


def parse_classes(text: str) -> list[list[int]]:
    """Classes separated by ``|`` or ``;``, vertices by commas: ``0,5|1,2,3|4``."""
    try:
        return [[int(v) for v in part.split(",") if v.strip()] for part in text.replace(";", "|").split("|")]
    except ValueError:
        raise UsageError(f"bad partition {text!r}; expected e.g. 0,5|1,2,3|4") from None


def _alpha(text: str) -> float:
    try:
        a = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 <= a <= 1.0:
        raise argparse.ArgumentTypeError(f"alpha must lie in [0, 1], got {a}")
    return a


# -- output -------------------------------------------------------------------------

def _emit(args, record: dict, out: TextIO, rows: list[dict] | None = None, table: list[tuple[str, object]] | None = None) -> None:
    """Print ``record`` as JSON, CSV (``rows`` or the flat record) or a table."""
    if args.json:
        record = {"kind": record.pop("kind"), "schema": SCHEMA, **record}
        json.dump(record, out, indent=2)
        out.write("\n")
    elif args.csv:
        if rows is None:
            rows = [{k: _cell(v) for k, v in record.items() if k != "kind"}]
        if rows:
            w = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
    else:
        items = table if table is not None else [(k, v) for k, v in record.items() if k != "kind"]
        width = max((len(k) for k, _ in items), default=0)
        for k, v in items:
            out.write(f"{k:<{width}}  {_text(v)}\n")


def _cell(v) -> object:
    if isinstance(v, (list, tuple)):
        return " ".join(str(_cell(x)) for x in v)
    return "" if v is None else v


def _text(v) -> str:
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, (list, tuple)):
        return ", ".join(_text(x) for x in v) if v else "-"
    return "-" if v is None else str(v)


def _verdict_out(args, v: TheoremVerdict, out: TextIO, err: TextIO) -> int:
    d = v.to_dict()
    if args.csv:
        rows = [{k: _cell(x) for k, x in p.items()} for p in d["points"]]
        if not rows:
            rows = [{"theorem_id": v.theorem_id, "status": v.status, "notes": " | ".join(v.notes)}]
        _emit(args, d, out, rows=rows)
    elif args.json:
        _emit(args, d, out)
    else:
        out.write(f"{v.theorem_id}: {v.status.upper()}  ({v.parameter_grid}; {v.elapsed:.1f}s)\n")
        for p in v.points:
            gap = "-" if p.runner_up_gap is None else f"{p.runner_up_gap:.3g}"
            out.write(
                f"  n={p.n:<3} i={p.i:<3} alpha={p.alpha:<8.6g} {p.status:<11} "
                f"lambda={p.lam:.10f} gap={gap} winners={' '.join(p.winners)}\n"
            )
        for note in v.notes:
            out.write(f"  note: {note}\n")
    if v.status != "pass":
        for w in v.witnesses:
            err.write(f"witness: {w}\n")
        if v.status == "tie-flagged":
            err.write(f"{v.theorem_id}: near-ties flagged, see notes\n")
        return 1
    return 0


# -- commands -----------------------------------------------------------------------

def cmd_lambda(args, out, err) -> int:
    g = parse_graph(args.graph)
    conn = is_connected(g)
    r = spectral_radius(g, args.alpha, require_connected=False)
    rec = {
        "kind": "lambda",
        "graph": encode(g),
        "n": g.n,
        "alpha": args.alpha,
        "lambda": r.lam,
        "perron_residual": r.residual,
        "connected": conn,
    }
    _emit(args, rec, out)
    return 0


def cmd_family(args, out, err) -> int:
    spec = fam.parse_spec(args.spec[len("family:"):] if args.spec.startswith("family:") else args.spec)
    g = spec.build()
    if args.emit == "dot" and not (args.json or args.csv):
        out.write(f'graph "{spec}" {{\n')
        for v in range(g.n):
            out.write(f"  {v};\n")
        for u, v in g.edges():
            out.write(f"  {u} -- {v};\n")
        out.write("}\n")
        return 0
    if not (args.json or args.csv):
        out.write(encode(g) + "\n")
        return 0
    rec = {"kind": "family", "spec": str(spec), "graph": encode(g), "n": g.n, "edges": [list(e) for e in g.edges()]}
    _emit(args, rec, out)
    return 0


def cmd_invariants(args, out, err) -> int:
    g = parse_graph(args.graph)
    try:
        mu = matching_number(g)
    except GraphError:
        mu = None
    rec = {
        "kind": "invariants",
        "graph": encode(g),
        "n": g.n,
        "edges": g.size,
        "independence_number": independence_number(g),
        "matching_number": mu,
        "connected": is_connected(g),
        "bipartite": is_bipartite(g),
        "tree": is_tree(g),
    }
    _emit(args, rec, out)
    return 0


def cmd_quotient(args, out, err) -> int:
    g = parse_graph(args.graph)
    seed = parse_classes(args.seed) if args.seed else None
    pi = coarsest_equitable(g, seed) if not args.exact_seed else tuple(tuple(c) for c in seed or [range(g.n)])
    q = quotient_matrix(g, args.alpha, pi)
    lam_q = largest_eigenvalue_of_quotient(q) if q.equitable else None
    lam = spectral_radius(g, args.alpha, require_connected=False).lam
    rec = {
        "kind": "quotient",
        "graph": encode(g),
        "alpha": args.alpha,
        "partition": [list(c) for c in pi],
        "matrix": q.matrix.tolist(),
        "equitable": q.equitable,
        "lambda_quotient": lam_q,
        "lambda_full": lam,
    }
    if args.json:
        _emit(args, rec, out)
    elif args.csv:
        rows = [{"row": i, "class": " ".join(map(str, c)), **{f"q{j}": x for j, x in enumerate(r)}}
                for i, (c, r) in enumerate(zip(pi, q.matrix.tolist()))]
        _emit(args, rec, out, rows=rows)
    else:
        out.write(f"partition  {' | '.join(','.join(map(str, c)) for c in pi)}\n")
        out.write(f"equitable  {q.equitable}\n")
        for r in q.matrix:
            out.write("  " + "  ".join(f"{x:10.6f}" for x in r) + "\n")
        out.write(f"lambda (quotient)  {_text(lam_q)}\n")
        out.write(f"lambda (full)      {lam!r}\n")
    if lam_q is not None and abs(lam_q - lam) > 1e-8:
        err.write(f"witness: quotient index {lam_q!r} differs from full index {lam!r}\n")
        return 1
    return 0


def cmd_enumerate(args, out, err) -> int:
    gen = en.stream(args.cls, args.n, long_run=args.long_run)
    if args.out:
        with open(args.out, "w") as fh:
            count = 0
            for g in gen:
                fh.write(encode(g) + "\n")
                count += 1
        rec = {"kind": "enumeration", "class": args.cls, "n": args.n, "count": count, "out": args.out}
        _emit(args, rec, out)
        return 0
    if args.json:
        codes = [encode(g) for g in gen]
        _emit(args, {"kind": "enumeration", "class": args.cls, "n": args.n, "count": len(codes), "out": None, "graphs": codes}, out)
        return 0
    if args.csv:
        out.write("graph6\n")
    for g in gen:
        out.write(encode(g) + "\n")
    return 0


def cmd_extremal(args, out, err) -> int:
    r = extremal(args.n, args.i, args.alpha, args.direction, args.cls, threads=args.threads)
    d = r.to_dict()
    table = [
        ("n", r.n), ("i", r.i), ("alpha", r.alpha), ("direction", r.direction), ("class", r.cls),
        ("winners", list(r.winners)), ("lambda", r.lam), ("runner-up gap", r.runner_up_gap),
        ("space", f"{r.space} ({r.candidates} graphs)"), ("elapsed", f"{r.elapsed:.2f}s"),
    ]
    _emit(args, d, out, table=table)
    return 0


def cmd_verify(args, out, err) -> int:
    grid = parse_grid(args.alpha_grid) if args.alpha_grid else None
    v = verify_theorem(args.theorem, parse_range(args.n_range), grid, threads=args.threads)
    return _verdict_out(args, v, out, err)


def cmd_appendix(args, out, err) -> int:
    v = appendix_check(args.identity, samples=args.samples, seed=args.seed)
    return _verdict_out(args, v, out, err)


def cmd_bounds(args, out, err) -> int:
    g = parse_graph(args.graph)
    b = index_bounds(g, args.alpha)
    lam = spectral_radius(g, args.alpha, require_connected=False).lam
    rec = {"kind": "bounds", "graph": encode(g), "alpha": args.alpha, "lower": b.lower, "upper": b.upper,
           "lower_star": b.lower_star, "lambda": lam}
    _emit(args, rec, out)
    return 0


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", help="emit one report-v1 JSON object")
    fmt.add_argument("--csv", action="store_true", help="emit CSV with a header row")
    common.add_argument("--threads", type=int, default=None,
                        help="worker processes (default: $ALPHA_SPECTRA_THREADS, else all cores)")

    p = argparse.ArgumentParser(
        prog="alpha-spectra",
        description="A_alpha-index extremal graphs by independence number.",
        epilog=FAMILY_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, func, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help_, epilog=FAMILY_HELP,
                            formatter_class=argparse.RawDescriptionHelpFormatter)
        sp.set_defaults(func=func)
        return sp

    sp = add("lambda", cmd_lambda, "A_alpha-index and Perron residual")
    sp.add_argument("graph")
    sp.add_argument("--alpha", type=_alpha, required=True)

    sp = add("family", cmd_family, "build a named family member")
    sp.add_argument("spec")
    sp.add_argument("--emit", choices=("graph6", "dot"), default="graph6")

    sp = add("invariants", cmd_invariants, "independence and matching numbers, class flags")
    sp.add_argument("graph")

    sp = add("quotient", cmd_quotient, "equitable partition and quotient matrix")
    sp.add_argument("graph")
    sp.add_argument("--alpha", type=_alpha, required=True)
    sp.add_argument("--seed", help="seed classes, e.g. 0,5|1,2,3|4 (refined to the coarsest equitable partition)")
    sp.add_argument("--exact-seed", action="store_true", help="use the seed partition as given, without refining")

    sp = add("enumerate", cmd_enumerate, "stream non-isomorphic graphs as graph6")
    sp.add_argument("cls", metavar="class", choices=en.CLASSES)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--out", help="write graph6 lines here instead of stdout")
    sp.add_argument("--long-run", action="store_true", help=f"allow connected graphs up to n={en.MAX_LONG_RUN}")

    sp = add("extremal", cmd_extremal, "minimize or maximize the index for given n and i")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--i", type=int, required=True)
    sp.add_argument("--alpha", type=_alpha, required=True)
    sp.add_argument("--direction", choices=("min", "max"), default="min")
    sp.add_argument("--class", dest="cls", choices=("all", "trees", "bipartite", "any"), default="all")

    sp = add("verify", cmd_verify, "check an extremal statement over a grid")
    sp.add_argument("theorem", metavar="theorem-id", help=", ".join(THEOREM_IDS))
    sp.add_argument("--n-range", required=True, help="a..b inclusive")
    sp.add_argument("--alpha-grid", help="comma-separated alphas (default: per-statement grid)")

    sp = add("appendix", cmd_appendix, "check a polynomial identity or sign claim at sampled points")
    sp.add_argument("identity", choices=APPENDIX_IDS)
    sp.add_argument("--samples", type=int, default=200)
    sp.add_argument("--seed", type=int, default=0)

    sp = add("bounds", cmd_bounds, "degree-based bounds on the index")
    sp.add_argument("graph")
    sp.add_argument("--alpha", type=_alpha, required=True)
    return p


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        args.threads = resolve_threads(args.threads)
        return args.func(args, out, err)
    except (UsageError, GraphError, HypothesisError, SearchRangeError, ValueError) as e:
        err.write(f"alpha-spectra {args.command}: error: {e}\n")
        return 2
    except AssertionError as e:
        err.write(f"witness: {e}\n")
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
