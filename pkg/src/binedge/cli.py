"""Command line: build, decompose, reg-formula, reg-oracle, verify, scan.

Exit codes: 0 success, 2 input error, 3 budget exceeded, 4 a verified check failed.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .algebra import (BudgetExceeded, betti_table, dimension_and_cm, herzog_check,
                      split_bound_check, ohtani_split)
from .algebra.betti import REQUIRED_MAX_VERTICES
from .decompose import decomposition_to_json, recognize_cm_bipartite
from .families import FamilyError, eval_expr, expr_from_json
from .formulas import FormulaError, reg_formula, reg_from_graph, reg_result_to_json
from .graph import GraphError, free_vertices, graph_from_json, graph_to_json
from .scan import CHECKS, HARD_CHECKS, dump_report, run_scan

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_FAILED = 0, 2, 3, 4


class InputError(Exception):
    pass


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def _graph(path: str):
    data = _read_json(path)
    # accept the output of `build` and the graph records of a scan report
    if isinstance(data, dict) and "graph" in data and "n" not in data:
        data = data["graph"]
    return graph_from_json(data)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True) + "\n")


def _slack(text: str):
    if text == "uncapped":
        return None
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError("expected an integer or 'uncapped'") from None
    if v < 0:
        raise argparse.ArgumentTypeError("slack must be >= 0")
    return v


def _engine_kw(args) -> dict:
    return {"p": args.prime, "backend": args.backend, "degree_slack": args.degree_slack,
            "timeout": args.timeout_seconds, "max_vertices": args.max_vertices}


# -- subcommands -----------------------------------------------------------

def cmd_build(args) -> int:
    built = eval_expr(expr_from_json(_read_json(args.expr)), strict=args.strict)
    out = graph_to_json(built.graph)
    _emit(out)
    return EXIT_OK


def cmd_decompose(args) -> int:
    _emit(decomposition_to_json(recognize_cm_bipartite(_graph(args.graph))))
    return EXIT_OK


def cmd_reg_formula(args) -> int:
    data = _read_json(args.expr)
    if isinstance(data, dict) and "decomposable" in data:
        if not data["decomposable"]:
            raise InputError(f"decomposition failed earlier: {data.get('reason')}")
        if "expr" not in data:
            raise InputError("decomposition JSON is missing field 'expr'")
        data = data["expr"]
    if isinstance(data, dict) and "n" in data and "edges" in data:
        res = reg_from_graph(graph_from_json(data))
    else:
        res = reg_formula(expr_from_json(data))
    _emit(reg_result_to_json(res))
    return EXIT_OK


def cmd_reg_oracle(args) -> int:
    G = _graph(args.graph)
    table = betti_table(G, **_engine_kw(args))
    dim, depth, cm = dimension_and_cm(G, table)
    out = table.to_json()
    out.update({"dim": dim, "depth": depth, "cm": cm, "prime": args.prime,
                "backend": table.backend, "degree_slack": args.degree_slack})
    _emit(out)
    return EXIT_OK


def cmd_verify(args) -> int:
    G = _graph(args.graph)
    nonfree = [v for v in G.vertices if v not in free_vertices(G)]
    if args.check == "herzog":
        variants = [args.variant] if args.variant else (["all", "cut"] if G.n <= 5 else ["cut"])
        res = {v: herzog_check(G, v, p=args.prime) for v in variants}
        ok = all(res.values())
        _emit({"check": "herzog", "ok": ok, "variants": res})
        return EXIT_OK if ok else EXIT_FAILED
    if args.vertex is not None:
        if args.vertex not in G.vertices:
            raise InputError(f"--vertex {args.vertex} is not a vertex of the graph")
        vertices = [args.vertex]
    else:
        vertices = nonfree
    results = []
    if args.check == "ohtani":
        for v in vertices:
            s = ohtani_split(G, v, args.prime)
            results.append({"vertex": v, "ok": s.ok,
                            "J_eq_Q1_cap_Q2": s.checks[0], "Q1_plus_Q2": s.checks[1],
                            "Q2_eq": s.checks[2]})
    else:
        kw = _engine_kw(args)
        p = kw.pop("p")
        for v in vertices:
            r = split_bound_check(G, v, p=p, **kw)
            results.append(dict(r.to_json(), ok=r.holds))
    ok = all(r["ok"] for r in results)
    _emit({"check": args.check, "ok": ok, "non_free_vertices": nonfree, "results": results})
    return EXIT_OK if ok else EXIT_FAILED


def cmd_scan(args) -> int:
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    bad = [c for c in checks if c not in CHECKS]
    if bad:
        raise InputError(f"--checks: unknown check(s) {bad}; choose from {list(CHECKS)}")
    if args.n_max > 6 and not args.allow_large:
        raise InputError("--n-max above 6 needs --allow-large")
    report = run_scan(args.n_max, checks, p=args.prime, backend=args.backend,
                      degree_slack=args.degree_slack, timeout=args.timeout_seconds,
                      workers=args.workers, roundtrip=args.roundtrip, seed=args.seed)
    text = dump_report(report)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        s = report["summary"]
        print(f"{s['graphs']} graphs, violations {s['violations_per_check']} -> {args.out}",
              file=sys.stderr)
    hard = [v for v in report["violations"] if v["check"] in HARD_CHECKS]
    rt = report.get("roundtrip", {}).get("failures", [])
    return EXIT_FAILED if hard or rt else EXIT_OK


# -- parser ----------------------------------------------------------------

def _add_engine(p: argparse.ArgumentParser) -> None:
    p.add_argument("--prime", type=int, default=32003)
    p.add_argument("--max-vertices", type=int, default=REQUIRED_MAX_VERTICES,
                   help="vertex budget for the Betti engine (at most 10)")
    p.add_argument("--degree-slack", type=_slack, default=2,
                   help="internal degree cap j <= i + n - 1 + slack, or 'uncapped'")
    p.add_argument("--backend", choices=["resolution", "koszul", "schreyer"],
                   default="resolution", help="'schreyer' is an alias of 'resolution'")
    p.add_argument("--timeout-seconds", type=float, default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="binedge", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("build", help="evaluate an expression JSON to a graph JSON")
    p.add_argument("expr")
    p.add_argument("--strict", action="store_true",
                   help="o requires the pendants' neighbours to have degree >= 3")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("decompose", help="recognise a Cohen-Macaulay bipartite graph")
    p.add_argument("graph")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("reg-formula", help="closed-form regularity of an expression")
    p.add_argument("expr", help="expression, decomposition, or graph JSON")
    p.set_defaults(func=cmd_reg_formula)

    p = sub.add_parser("reg-oracle", help="Betti table, reg, pd, dim and CM via F_p algebra")
    p.add_argument("graph")
    _add_engine(p)
    p.set_defaults(func=cmd_reg_oracle)

    p = sub.add_parser("verify", help="ideal identities and the regularity inequality")
    p.add_argument("check", choices=["ohtani", "herzog", "lemma24"])
    p.add_argument("graph")
    p.add_argument("--vertex", type=int, default=None)
    p.add_argument("--variant", choices=["all", "cut"], default=None,
                   help="herzog: all subsets T or only T in C(G)")
    _add_engine(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="check the bounds on every connected graph up to n-max")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--checks", default="mm,sk", help=f"comma list from {','.join(CHECKS)}")
    p.add_argument("--out", required=True, help="report path ('-' for stdout)")
    p.add_argument("--seed", type=int, default=0, help="seed for the round-trip generator")
    p.add_argument("--roundtrip", type=int, default=0,
                   help="also round-trip this many random normal-form expressions")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--allow-large", action="store_true", help="permit --n-max 7")
    _add_engine(p)
    p.set_defaults(func=cmd_scan)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, GraphError, FamilyError, FormulaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
