"""Command-line interface.

Subcommands: gen (emit a graph), construct (emit an explicit optimal
function), verify (check a weight file against a graph file), solve (exact
optimum), table (closed form / construction / solver agreement grid), and
export (DOT drawing, optionally colored by weights).

Exit codes: 0 = valid or proven, 1 = invalid or unproven, 2 = usage error
(bad arguments, unreadable files, hash mismatch, capacity). JSON payloads go
to stdout; one-line summaries go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .constructions import (
    closed_form_italian,
    closed_form_perfect,
    construct,
)
from .domination import ITALIAN, PERFECT, VARIANTS, total_weight, verify
from .errors import CapacityError, InvalidInputError, OutOfRegimeError, SelfCheckError
from .graphs import Graph, SierpinskiGraph, build_complete, build_path, build_sierpinski
from .serialize import (
    canonical_json_bytes,
    graph_from_dict,
    graph_to_dict,
    to_dot,
    weights_from_dict,
    weights_to_dict,
)
from .solvers import (
    ENGINE_BRANCH_BOUND,
    ENGINE_EXHAUSTIVE,
    ENGINE_PATH_DP,
    SearchConfig,
    SolveResult,
    solve_branch_bound,
    solve_exhaustive,
    solve_path_dp,
)

# Instances at most this large go to the exhaustive engine under --engine
# auto; larger ones go to branch-and-bound (3**12 assignments stay fast even
# on the pure Python kernels).
_AUTO_EXHAUSTIVE_MAX = 12


def _emit(data: bytes, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def _say(message: str) -> None:
    print(message, file=sys.stderr)


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidInputError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(payload, dict):
        raise InvalidInputError(f"{path}: expected a JSON object")
    return payload


def _describe(g: Graph) -> str:
    if isinstance(g, SierpinskiGraph):
        return f"S(K_{g.n},{g.t})"
    if g.family == "path":
        return f"P_{g.n_vertices}"
    if g.family == "complete":
        return f"K_{g.n_vertices}"
    return f"graph on {g.n_vertices} vertices"


def _variant_tag(variant: str) -> str:
    return "PID" if variant == PERFECT else "IDF"


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_gen(args: argparse.Namespace) -> int:
    g = build_sierpinski(args.n, args.t)
    if args.format == "json":
        data = canonical_json_bytes(graph_to_dict(g))
    else:
        data = to_dot(g).encode("utf-8")
    _emit(data, args.output)
    _say(f"{_describe(g)}: {g.n_vertices} vertices, {g.n_edges} edges")
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    built = construct(args.n, args.t)
    report = verify(built.graph, built.weights, args.variant)
    payload = weights_to_dict(
        built.graph,
        built.weights,
        extra={"regime": built.regime.value, "closed_form": built.closed_form},
    )
    _emit(canonical_json_bytes(payload), args.output)
    verdict = f"valid {_variant_tag(args.variant)}" if report.valid else "INVALID"
    _say(
        f"{_describe(built.graph)}: regime {built.regime.value},"
        f" weight {total_weight(built.weights)}, closed form {built.closed_form}, {verdict}"
    )
    return 0 if report.valid else 1


def cmd_verify(args: argparse.Namespace) -> int:
    g = graph_from_dict(_load_json(args.graph))
    weights = weights_from_dict(g, _load_json(args.weights))
    report = verify(g, weights, args.variant)
    _emit(canonical_json_bytes(report.to_dict()), None)
    if report.valid:
        _say(f"{_describe(g)}: valid {_variant_tag(args.variant)}, weight {report.total_weight}")
        return 0
    _say(f"{_describe(g)}: INVALID, {len(report.violations)} violation(s)")
    return 1


def _solve_instance(args: argparse.Namespace) -> tuple[Graph, int | None]:
    """Build the instance; the int is m when vertex order is path line order."""
    if args.sierpinski is not None:
        n, t = args.sierpinski
        g: Graph = build_sierpinski(n, t)
        return g, 2**t if n == 2 else None
    if args.path is not None:
        return build_path(args.path), args.path
    if args.complete is not None:
        return build_complete(args.complete), None
    g = graph_from_dict(_load_json(args.graph))
    if g.family == "path":
        return g, g.n_vertices
    if isinstance(g, SierpinskiGraph) and g.n == 2:
        return g, g.n_vertices
    return g, None


def _auto_incumbent(g: Graph) -> list[int] | None:
    # Constructed functions are perfect, hence valid seeds for both variants.
    if isinstance(g, SierpinskiGraph):
        return construct(g.n, g.t).weights
    return None


def _run_solver(g: Graph, path_m: int | None, variant: str, engine: str, budget: int | None) -> SolveResult:
    if engine == "auto":
        if path_m is not None:
            engine = ENGINE_PATH_DP
        elif g.n_vertices <= _AUTO_EXHAUSTIVE_MAX:
            engine = ENGINE_EXHAUSTIVE
        else:
            engine = ENGINE_BRANCH_BOUND
    config = SearchConfig() if budget is None else SearchConfig(node_budget=budget)
    if engine == ENGINE_PATH_DP:
        if path_m is None:
            raise InvalidInputError("the path-dp engine needs a path instance")
        return solve_path_dp(path_m, variant)
    if engine == ENGINE_EXHAUSTIVE:
        return solve_exhaustive(g, variant, config)
    return solve_branch_bound(g, variant, config, incumbent=_auto_incumbent(g))


def cmd_solve(args: argparse.Namespace) -> int:
    g, path_m = _solve_instance(args)
    result = _run_solver(g, path_m, args.variant, args.engine, args.budget)
    _emit(canonical_json_bytes(result.to_dict()), args.output)
    state = "proven" if result.proven else "unproven (budget exhausted)"
    _say(
        f"{_describe(g)} {args.variant}: optimum {result.optimum} ({state},"
        f" engine {result.engine}, {result.nodes_explored} nodes)"
    )
    return 0 if result.proven else 1


def _parse_range(text: str, what: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError as exc:
        raise InvalidInputError(f"bad {what} range {text!r}; want N or A..B") from exc
    if a > b:
        raise InvalidInputError(f"empty {what} range {text!r}")
    return list(range(a, b + 1))


def _table_rows(ns: Sequence[int], ts: Sequence[int], max_solve: int, budget: int | None):
    for n in ns:
        for t in ts:
            built = construct(n, t)
            g = built.graph
            valid = verify(g, built.weights, PERFECT).valid
            weight = total_weight(built.weights)
            cf_i = closed_form_italian(n, t)
            cf_p = closed_form_perfect(n, t)
            agree = valid and weight == cf_i == cf_p
            solved: SolveResult | None = None
            if n == 2:
                solved = solve_path_dp(2**t, ITALIAN)
            elif g.n_vertices <= max_solve:
                solved = _run_solver(g, None, ITALIAN, "auto", budget)
            if solved is not None and solved.proven:
                agree = agree and solved.optimum == cf_i
            yield {
                "n": n,
                "t": t,
                "closed_form_italian": cf_i,
                "closed_form_perfect": cf_p,
                "construction_weight": weight,
                "construction_valid": valid,
                "solver_optimum": solved.optimum if solved is not None else None,
                "solver_proven": solved.proven if solved is not None else None,
                "agree": agree,
            }


_TABLE_COLUMNS = (
    "n", "t", "closed_form_italian", "closed_form_perfect",
    "construction_weight", "construction_valid",
    "solver_optimum", "solver_proven", "agree",
)


def cmd_table(args: argparse.Namespace) -> int:
    ns = _parse_range(args.n, "n")
    ts = _parse_range(args.t, "t")
    if min(ns) < 2:
        raise InvalidInputError("table needs n >= 2")
    if min(ts) < 1:
        raise InvalidInputError("table needs t >= 1")
    rows = list(_table_rows(ns, ts, args.max_solve_vertices, args.budget))
    out = []
    if args.csv:
        out.append(",".join(_TABLE_COLUMNS))
        for row in rows:
            out.append(",".join(_csv_cell(row[c]) for c in _TABLE_COLUMNS))
    else:
        widths = {c: len(c) for c in _TABLE_COLUMNS}
        cells = []
        for row in rows:
            rendered = {c: _text_cell(row[c]) for c in _TABLE_COLUMNS}
            cells.append(rendered)
            for c in _TABLE_COLUMNS:
                widths[c] = max(widths[c], len(rendered[c]))
        out.append("  ".join(c.ljust(widths[c]) for c in _TABLE_COLUMNS))
        for rendered in cells:
            out.append("  ".join(rendered[c].ljust(widths[c]) for c in _TABLE_COLUMNS))
    _emit(("\n".join(out) + "\n").encode("utf-8"), args.output)
    bad = sum(1 for row in rows if not row["agree"])
    _say(f"{len(rows)} row(s), {len(rows) - bad} agreeing" + (f", {bad} DISAGREEING" if bad else ""))
    return 0 if bad == 0 else 1


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _text_cell(value) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "NO"
    return str(value)


def cmd_export(args: argparse.Namespace) -> int:
    if args.sierpinski is not None:
        n, t = args.sierpinski
        g: Graph = build_sierpinski(n, t)
    else:
        g = graph_from_dict(_load_json(args.graph))
    weights = None
    if args.weights is not None:
        weights = weights_from_dict(g, _load_json(args.weights))
    _emit(to_dot(g, weights).encode("utf-8"), args.output)
    colored = ", weights colored" if weights is not None else ""
    _say(f"{_describe(g)}: DOT with {g.n_vertices} vertices{colored}")
    return 0


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("-o", "--output", metavar="PATH", help="write here instead of stdout")


def _add_variant(p: argparse.ArgumentParser, default: str) -> None:
    p.add_argument("--variant", choices=VARIANTS, default=default)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sierpdom",
        description="Italian and perfect Italian domination on Sierpinski graphs S(K_n, t).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate S(K_n, t) as JSON or DOT")
    p.add_argument("n", type=int)
    p.add_argument("t", type=int)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    _add_output(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("construct", help="emit the explicit optimal weight function")
    p.add_argument("n", type=int)
    p.add_argument("t", type=int)
    _add_variant(p, PERFECT)
    _add_output(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="verify a weight file against a graph file")
    p.add_argument("graph", metavar="GRAPH_JSON")
    p.add_argument("weights", metavar="WEIGHTS_JSON")
    _add_variant(p, ITALIAN)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="compute the exact domination number")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--sierpinski", nargs=2, type=int, metavar=("N", "T"))
    group.add_argument("--path", type=int, metavar="M")
    group.add_argument("--complete", type=int, metavar="N")
    group.add_argument("--graph", metavar="GRAPH_JSON")
    _add_variant(p, ITALIAN)
    p.add_argument(
        "--engine",
        choices=("auto", ENGINE_EXHAUSTIVE, ENGINE_BRANCH_BOUND, ENGINE_PATH_DP),
        default="auto",
    )
    p.add_argument("--budget", type=int, help="branch-and-bound node budget")
    _add_output(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("table", help="closed form vs construction vs solver grid")
    p.add_argument("--n", required=True, metavar="A..B")
    p.add_argument("--t", required=True, metavar="C..D")
    p.add_argument("--csv", action="store_true")
    p.add_argument(
        "--max-solve-vertices",
        type=int,
        default=27,
        metavar="K",
        help="run the exact solver only on instances up to this size (default 27)",
    )
    p.add_argument("--budget", type=int, help="branch-and-bound node budget")
    _add_output(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("export", help="export DOT, optionally colored by a weight file")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--sierpinski", nargs=2, type=int, metavar=("N", "T"))
    group.add_argument("--graph", metavar="GRAPH_JSON")
    p.add_argument("--weights", metavar="WEIGHTS_JSON")
    _add_output(p)
    p.set_defaults(func=cmd_export)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SelfCheckError as exc:
        _say(f"error: {exc}")
        return 1
    except (InvalidInputError, CapacityError, OutOfRegimeError) as exc:
        _say(f"error: {exc}")
        return 2
    except OSError as exc:
        _say(f"error: {exc}")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
