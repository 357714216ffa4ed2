"""Command-line front end.

Exit status: 0 success, 1 unreadable graph, 2 precondition violated,
3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import catalog, census as cz, oracle, series
from .algebra import trace_powers
from .errors import CoveringCyclesError, PreconditionError
from .graph import (
    DEFAULT_SUBSET_LIMIT,
    MultiGraph,
    directed_edge_matrix,
    edge_adjacency_matrix,
    is_connected,
    parse_graph,
    symmetrize,
)

log = logging.getLogger("covering_cycles")


def _common_options() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("-g", "--graph", type=Path, help="graph file")
    src.add_argument("--builtin", help="rose:R | theta | cycle:n | dircycle:n")
    p.add_argument("-N", "--length", help="length N or range LO..HI")
    p.add_argument("--order", type=int, help="truncation order M (default 2|E|+4)")
    p.add_argument("--sign", choices=["plus", "minus", "both"], default="both")
    p.add_argument("--subset-limit", type=int, default=DEFAULT_SUBSET_LIMIT)
    p.add_argument("--oracle-cap", type=int, default=oracle.DEFAULT_ORACLE_CAP)
    p.add_argument("--format", choices=["json", "table"], default="json")
    p.add_argument("--plot", type=Path, help="also write a figure to this file")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covering-cycles",
        description="Exact counts of covering cycles, Euler cycles and their generating function.",
    )
    common = _common_options()
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("census", parents=[common], help="omega(N) and theta(N) over a length range")
    sub.add_parser("euler", parents=[common], help="Euler cycles, or Hamiltonian cycles if directed")
    sp = sub.add_parser("series", parents=[common], help="d+/d- coefficients through order M")
    sp.add_argument("--route", choices=["exp", "partition", "determinant"], default="exp")
    sub.add_parser("verify", parents=[common], help="three-route agreement and identity checks")
    sub.add_parser("oracle", parents=[common], help="brute-force counts against the matrix route")
    return parser


def load_graph(args: argparse.Namespace) -> MultiGraph:
    if args.builtin:
        g = catalog.builtin(args.builtin)
    else:
        g = parse_graph(args.graph.read_text(encoding="utf-8"))
    if not is_connected(g):
        raise PreconditionError("input graph is not connected")
    if g.edge_count > args.subset_limit:
        raise PreconditionError(
            f"graph has {g.edge_count} edges, above --subset-limit {args.subset_limit}"
        )
    return g


def _order(args: argparse.Namespace, g: MultiGraph) -> int:
    M = args.order if args.order is not None else series.default_order(g.edge_count)
    if M < max(g.edge_count, 1):
        raise PreconditionError(f"--order {M} must be at least |E| = {g.edge_count}")
    return M


def _lengths(args: argparse.Namespace, default_hi: int) -> list[int]:
    if args.length:
        return list(cz.iter_lengths(args.length))
    return list(range(1, default_hi + 1))


def _strs(d: dict) -> dict[str, str]:
    return {str(k): str(v) for k, v in d.items()}


def _signs(args: argparse.Namespace) -> list[str]:
    return {"plus": ["+"], "minus": ["-"], "both": ["+", "-"]}[args.sign]


def cmd_census(args, g: MultiGraph) -> tuple[dict, int]:
    Ns = _lengths(args, _order(args, g))
    table = cz.census_table(g, max(Ns), subset_limit=args.subset_limit)
    out = {
        "omega": {str(N): str(table.omega[N]) for N in Ns},
        "theta": {str(N): str(table.theta[N]) for N in Ns},
    }
    if args.plot:
        from .plotting import plot_census

        plot_census({N: table.omega[N] for N in Ns}, {N: table.theta[N] for N in Ns}, args.plot)
    return out, 0


def cmd_euler(args, g: MultiGraph) -> tuple[dict, int]:
    if not g.directed:
        return {"euler_cycles": str(cz.euler_count(g, subset_limit=args.subset_limit))}, 0
    rep = cz.hamiltonian_count(g, subset_limit=args.subset_limit)
    if rep.discrepancy:
        log.warning(
            "directed cycles have no inverse; halving the class count gives %s, "
            "reporting %d classes as the Hamiltonian count",
            rep.halved,
            rep.classes,
        )
    return {
        "hamiltonian_classes": str(rep.classes),
        "halved_value": str(rep.halved),
        "discrepancy": rep.discrepancy,
    }, 0


def _d_route(route: str, g: MultiGraph, M: int, sign: str, args) -> list[Fraction]:
    if route == "determinant":
        return series.d_from_determinants(g, M, sign, subset_limit=args.subset_limit)
    table = cz.census_table(g, M, subset_limit=args.subset_limit)
    if route == "partition":
        return [series.d_from_partitions(table, i, sign) for i in range(1, M + 1)]
    return series.d_from_exp(series.h_series(table, M), sign)


def cmd_series(args, g: MultiGraph) -> tuple[dict, int]:
    M = _order(args, g)
    out: dict = {"order": M, "route": args.route}
    values = {}
    for sign in _signs(args):
        d = _d_route(args.route, g, M, sign, args)
        values[sign] = d
        out["d_plus" if sign == "+" else "d_minus"] = {str(i): str(x) for i, x in enumerate(d, 1)}
    status = 0
    if any(x.denominator != 1 for d in values.values() for x in d):
        log.error("non-integral coefficient")
        status = 3
    if args.plot:
        from .plotting import plot_coefficients

        table = cz.census_table(g, M, subset_limit=args.subset_limit)
        plot_coefficients(table.omega, values.get("+"), values.get("-"), args.plot, g.edge_count)
    return out, status


def cmd_verify(args, g: MultiGraph) -> tuple[dict, int]:
    report = series.verify(g, _order(args, g), subset_limit=args.subset_limit)
    if args.plot:
        from .plotting import plot_coefficients

        plot_coefficients(
            report.omega, report.d_plus["exp"], report.d_minus["exp"], args.plot, g.edge_count
        )
    return report.to_json(), 0 if report.passed else 3


def cmd_oracle(args, g: MultiGraph) -> tuple[dict, int]:
    Ns = _lengths(args, max(2 * g.edge_count, 1))
    top = max(Ns)
    m = directed_edge_matrix(g) if g.directed else edge_adjacency_matrix(symmetrize(g))
    traces = trace_powers(m, top)
    table = cz.census_table(g, top, subset_limit=args.subset_limit)
    rows = {}
    bad = []
    for N in Ns:
        row = {
            "trace": traces[N - 1],
            "closed_walks": oracle.count_closed_walks(g, N, args.oracle_cap),
            "omega": table.omega[N],
            "covering_walks": oracle.count_covering_walks(g, N, args.oracle_cap),
            "theta": table.theta[N],
            "nonperiodic_classes": oracle.count_nonperiodic_classes(g, N, args.oracle_cap),
        }
        ok = (
            row["trace"] == row["closed_walks"]
            and row["omega"] == row["covering_walks"]
            and row["theta"] == row["nonperiodic_classes"]
        )
        if not ok:
            bad.append(N)
        rows[str(N)] = {**_strs(row), "match": ok}
    return {"lengths": rows, "discrepancies": bad}, 3 if bad else 0


COMMANDS = {
    "census": cmd_census,
    "euler": cmd_euler,
    "series": cmd_series,
    "verify": cmd_verify,
    "oracle": cmd_oracle,
}


def _table(payload: dict) -> str:
    """Flatten nested dicts into aligned ``key  value`` lines."""
    lines: list[tuple[str, str]] = []

    def walk(prefix: str, obj) -> None:
        if isinstance(obj, dict):
            for k, v in obj.items():
                walk(f"{prefix}.{k}" if prefix else str(k), v)
        else:
            lines.append((prefix, json.dumps(obj) if isinstance(obj, (list, bool)) or obj is None else str(obj)))

    walk("", payload)
    width = max((len(k) for k, _ in lines), default=0)
    return "\n".join(f"{k.ljust(width)}  {v}" for k, v in lines)


def run(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s: %(message)s"))
    log.addHandler(handler)
    log.propagate = False
    try:
        return _run(args)
    finally:
        log.removeHandler(handler)
        log.propagate = True


def _run(args: argparse.Namespace) -> int:
    try:
        g = load_graph(args)
        g, _ = cz.prepare(g)
        if g.edge_count == 0:
            raise PreconditionError("no edges left after removing degree-1 vertices")
        payload, status = COMMANDS[args.command](args, g)
    except OSError as exc:
        log.error("%s", exc)
        return 1
    except CoveringCyclesError as exc:
        log.error("%s", exc)
        return exc.exit_code
    if args.format == "json":
        sys.stdout.write(json.dumps(payload) + "\n")
    else:
        sys.stdout.write(_table(payload) + "\n")
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
