"""Command-line frontend.

Subcommands map one-to-one onto the library surface: zeta (engines on a
graph file), family (closed forms), trees (spanning-tree counts), rank2
(distinctness table), verify (engine-agreement sweep). Output is
deterministic: no timestamps, fixed orderings, and json mode re-serializes
byte-identically.

Exit codes: 0 success, 1 disagreement or violated cross-check, 2 bad
input, 3 size cap exceeded.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import json
import sys

from .errors import (
    ConsistencyError,
    GraphValidationError,
    InputError,
    ParameterError,
    SizeCapError,
    UnsupportedFormError,
    VerificationError,
)
from .families import (
    MobiusLadderProduct,
    closed_form,
    gen_family,
    parse_family_spec,
    verify_family,
)
from .intpoly import IntPoly, format_poly
from .multigraph import parse_edge_list_text, validate_zeta_input
from .ranktwo import completeness_check
from .smallgraphs import canonical_key, connected_multigraphs
from .trees import (
    tree_count_closed_form,
    tree_count_from_zeta,
    tree_count_kirchhoff,
)
from .zeta import (
    DEFAULT_ENUM_CAP,
    poly_invariants,
    zeta_bass,
    zeta_enum,
    zeta_line_det,
)

_ENGINES = {"bass": zeta_bass, "linedet": zeta_line_det, "enum": zeta_enum}
_ENGINE_ORDER = ("bass", "linedet", "enum")


def _load_graph(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    g = parse_edge_list_text(text)
    validate_zeta_input(g)
    return g


def _graph_json(g):
    return {
        "vertices": g.n,
        "edges": [[u, v] for u, v in g.edge_list()],
    }


def _coeff_strings(poly: IntPoly):
    return [str(poly.coeff(k)) for k in range(poly.degree + 1)]


def _poly_hash(poly: IntPoly) -> str:
    blob = ",".join(_coeff_strings(poly)).encode()
    return hashlib.sha256(blob).hexdigest()[:12]


def _emit_json(obj):
    print(json.dumps(obj, indent=2, sort_keys=True))


def _cmd_zeta(args) -> int:
    g = _load_graph(args.graph)
    names = list(_ENGINE_ORDER) if args.engine == "all" else [args.engine]
    reports = []
    for name in names:
        fn = _ENGINES[name]
        reports.append((name, fn(g) if name != "enum" else fn(g, cap=args.enum_cap)))
    polys = [r.poly for _, r in reports]
    if any(p != polys[0] for p in polys):
        for name, r in reports:
            print(f"{name}: {format_poly(r.poly)}", file=sys.stderr)
        print("engines disagree", file=sys.stderr)
        return 1
    check = poly_invariants(polys[0], g)  # raises on violation -> exit 1
    if args.format == "json":
        _emit_json({
            "graph": _graph_json(g),
            "engine": args.engine,
            "coeffs": _coeff_strings(polys[0]),
            "invariants": {
                "degree": polys[0].degree,
                "leading_coeff": str(check.leading_coeff),
                "girth_readout": check.girth_readout,
                "even": check.even,
                "bipartite": check.bipartite,
                "rank": g.rank,
            },
        })
    elif args.format == "csv":
        print("engine,power,coeff")
        for name, r in reports:
            for k in range(r.poly.degree + 1):
                print(f"{name},{k},{r.poly.coeff(k)}")
    else:
        print(format_poly(polys[0]))
        if len(names) > 1:
            print(f"agreement: {' '.join(names)}")
    return 0


def _cmd_family(args) -> int:
    spec = parse_family_spec(args.spec)
    form = closed_form(spec)
    numeric = isinstance(form, MobiusLadderProduct)
    if args.format == "json":
        if numeric:
            body = {"type": "roots-of-unity-product", "order": form.n}
        else:
            body = {"type": "polynomial", "coeffs": _coeff_strings(form)}
        obj = {"spec": str(spec), "closed_form": body}
        if args.verify:
            verify_family(spec)  # raises on mismatch -> exit 1
            obj["verify"] = "match"
        _emit_json(obj)
        return 0
    if args.format == "csv":
        if numeric:
            raise UnsupportedFormError(
                "the Moebius ladder closed form has no coefficient list; "
                "use the zeta subcommand for coefficients"
            )
        print("power,coeff")
        for k in range(form.degree + 1):
            print(f"{k},{form.coeff(k)}")
        if args.verify:
            verify_family(spec)
        return 0
    if numeric:
        print(f"{spec}: numeric product over roots of unity "
              "(no exact polynomial; engines provide coefficients)")
    else:
        print(format_poly(form))
    if args.verify:
        check = verify_family(spec)
        print(f"verify: MATCH ({check.detail})")
    return 0


def _cmd_trees(args) -> int:
    spec = None
    if args.spec is not None:
        spec = parse_family_spec(args.spec)
        g = gen_family(spec)
        validate_zeta_input(g)
    else:
        g = _load_graph(args.graph)
    methods = []
    if spec is not None:
        try:
            methods.append(("closed-form", tree_count_closed_form(spec).kappa))
        except ParameterError:
            pass  # family without a published formula; other methods carry on
    if g.rank >= 2:
        kappa = tree_count_from_zeta(zeta_bass(g).poly, g.rank).kappa
        methods.append(("zeta-derivative", kappa))
    methods.append(("kirchhoff", tree_count_kirchhoff(g).kappa))
    values = {v for _, v in methods}
    agree = len(values) == 1
    if args.format == "json":
        _emit_json({
            "graph": _graph_json(g),
            "methods": {name: str(v) for name, v in methods},
            "agree": agree,
            "kappa": str(methods[-1][1]) if agree else None,
        })
    elif args.format == "csv":
        print("method,kappa")
        for name, v in methods:
            print(f"{name},{v}")
    else:
        for name, v in methods:
            print(f"{name}: {v}")
        if not agree:
            print("DISAGREEMENT", file=sys.stderr)
    return 0 if agree else 1


def _cmd_rank2(args) -> int:
    report = completeness_check(args.max_edges)  # collision raises -> exit 1
    rows = [
        {
            "spec": str(r.spec),
            "edges": r.edge_count,
            "leading_coeff": str(r.leading_coeff),
            "girth_readout": r.girth_readout,
            "tree_count": str(r.tree_count),
            "poly_hash": _poly_hash(r.poly),
        }
        for r in report.rows
    ]
    if args.format == "json":
        _emit_json({
            "max_edges": report.max_edges,
            "count": len(rows),
            "rows": rows,
        })
    elif args.format == "csv":
        # spec strings contain commas, so let the csv module quote them
        columns = ("spec", "edges", "leading_coeff", "girth_readout",
                   "tree_count", "poly_hash")
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(columns)
        for r in rows:
            writer.writerow([r[k] for k in columns])
    else:
        print(f"{len(rows)} canonical rank-two graphs with at most "
              f"{report.max_edges} edges; all zeta polynomials distinct")
        header = f"{'spec':<14}{'|E|':>4}{'lead':>6}{'girth':>6}{'trees':>8}  hash"
        print(header)
        for r in rows:
            print(f"{r['spec']:<14}{r['edges']:>4}{r['leading_coeff']:>6}"
                  f"{r['girth_readout']:>6}{r['tree_count']:>8}  {r['poly_hash']}")
    return 0


def _cmd_verify(args) -> int:
    graphs = connected_multigraphs(args.max_edges)
    failures = []
    enum_checked = 0
    for g in graphs:
        label = f"n={g.n} key={canonical_key(g)}"
        bass = zeta_bass(g)
        line = zeta_line_det(g)
        if bass.poly != line.poly:
            failures.append(f"{label}: bass != linedet")
        if 2 * g.edge_count <= args.enum_cap:
            enum = zeta_enum(g, cap=args.enum_cap)
            enum_checked += 1
            if enum.poly != bass.poly:
                failures.append(f"{label}: enum != bass")
        try:
            poly_invariants(bass.poly, g)
        except VerificationError as exc:
            failures.append(f"{label}: {exc}")
    if args.format == "json":
        _emit_json({
            "max_edges": args.max_edges,
            "graphs": len(graphs),
            "enum_checked": enum_checked,
            "failures": failures,
        })
    else:
        print(f"checked {len(graphs)} multigraphs with at most "
              f"{args.max_edges} edges ({enum_checked} also via enum)")
        for f in failures:
            print(f"FAIL {f}")
        if not failures:
            print("all engines agree")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="iharazeta",
        description="Reciprocal Ihara zeta polynomials of multigraphs, "
                    "computed exactly.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("human", "json", "csv"),
                       default="human")

    z = sub.add_parser("zeta", help="zeta polynomial of a graph file")
    z.add_argument("--graph", required=True, metavar="FILE",
                   help="edge-list file ('n <count>' header, 'u v' lines)")
    z.add_argument("--engine", choices=("bass", "linedet", "enum", "all"),
                   default="bass")
    z.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP,
                   help="largest directed-edge count the enum engine accepts")
    add_format(z)
    z.set_defaults(fn=_cmd_zeta)

    f = sub.add_parser("family", help="closed form for a family spec")
    f.add_argument("--spec", required=True, metavar="STR",
                   help="family string such as 'G(3,4)' or 'Kb(2,3)'")
    f.add_argument("--verify", action="store_true",
                   help="cross-check the closed form against an engine")
    add_format(f)
    f.set_defaults(fn=_cmd_family)

    t = sub.add_parser("trees", help="spanning-tree count by all methods")
    src = t.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", metavar="FILE")
    src.add_argument("--spec", metavar="STR")
    add_format(t)
    t.set_defaults(fn=_cmd_trees)

    r = sub.add_parser("rank2", help="rank-two distinctness table")
    r.add_argument("--max-edges", type=int, required=True)
    add_format(r)
    r.set_defaults(fn=_cmd_rank2)

    v = sub.add_parser("verify", help="engine-agreement sweep")
    v.add_argument("--max-edges", type=int, required=True)
    v.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)
    add_format(v)
    v.set_defaults(fn=_cmd_verify)
    return ap


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except SizeCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InputError, GraphValidationError, UnsupportedFormError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (VerificationError, ConsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
