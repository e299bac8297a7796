"""Command-line front end.

Subcommands:
  classify    classify a rank-3 exchange matrix
  enumerate   BFS a mutation class and export the exchange graph
  rank2       periods of the rank-2 sector orbits as CSV
  verify      run the named verification suites

Matrix shorthand: entries are given as "cos(a/b)" meaning 2cos(a*pi/b),
optionally signed, or as exact rationals ("3/2", "-1"); an inline matrix
spec lists the upper triangle row-major as "b12,b13,b23".  The environment
variable QUIVERBELT_PRECISION_BITS sets the initial precision of the
certified sign oracle.
"""

from __future__ import annotations

import argparse
import json
import random
import re
import sys
from fractions import Fraction

from quiverbelt import exgraph, verification
from quiverbelt.cycfield import FieldElem, cos_multiple
from quiverbelt.exmatrix import (
    ExchangeMatrix,
    NotCosineForm,
    SearchBudgetExceeded,
    classify,
    markov_constant,
    spherical_matrix,
)
from quiverbelt.rank2 import period_grid
from quiverbelt.seedgeom import initial_seed, spherical_seed


class ParseError(ValueError):
    pass


_COS_RE = re.compile(r"^(-?)\s*cos\(\s*(\d+)\s*/\s*(\d+)\s*\)$")


def parse_entry(text: str) -> FieldElem | Fraction:
    text = text.strip()
    m = _COS_RE.match(text)
    if m:
        sign = -1 if m.group(1) == "-" else 1
        k, l = int(m.group(2)), int(m.group(3))
        if l < 1:
            raise ParseError(f"bad cosine denominator in {text!r}")
        return cos_multiple(l, k) * sign
    try:
        return Fraction(text)
    except ValueError as exc:
        raise ParseError(f"cannot parse entry {text!r}") from exc


def parse_matrix_spec(text: str) -> ExchangeMatrix:
    """Upper-triangle spec 'b12,b13,b23' (rank 3) or 'b12' (rank 2)."""
    parts = [p for p in text.split(",") if p.strip()]
    entries = [parse_entry(p) for p in parts]
    if len(entries) == 1:
        return ExchangeMatrix.from_upper(entries[0])
    if len(entries) == 3:
        return ExchangeMatrix.from_upper(*entries)
    raise ParseError("matrix spec needs 1 or 3 upper-triangle entries")


def load_matrix(path: str) -> ExchangeMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if isinstance(data, dict) and "entries" in data:
        return ExchangeMatrix.from_json(data)
    if isinstance(data, list):
        return parse_matrix_spec(",".join(str(x) for x in data))
    raise ParseError(f"unrecognised matrix file format in {path}")


def _matrix_from_args(args) -> ExchangeMatrix:
    if args.sph:
        t1, t2 = (Fraction(t) for t in args.sph.split(","))
        return spherical_matrix(t1, t2)
    if args.affine:
        return initial_seed(args.affine).B
    if args.matrix:
        return load_matrix(args.matrix)
    if args.entries:
        return parse_matrix_spec(args.entries)
    raise ParseError("no matrix given: use --sph, --affine, --matrix or --entries")


def _write_out(args, payload: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def cmd_classify(args) -> int:
    B = _matrix_from_args(args)
    try:
        result = classify(B, budget=args.budget)
    except (NotCosineForm, SearchBudgetExceeded) as exc:
        print(f"classification failed: {exc}", file=sys.stderr)
        return 2
    payload = {
        "class": str(result),
        "kind": result.kind,
        "markov_constant": result.markov.to_json() if result.markov else None,
        "markov_constant_float": result.markov.to_float() if result.markov else None,
        "class_size": result.class_size,
        "closed": result.closed,
    }
    if result.pair:
        payload["pair"] = [str(t) for t in result.pair]
    if result.level:
        payload["denominator"] = result.level
    if args.format == "json":
        _write_out(args, json.dumps(payload, indent=1) + "\n")
    else:
        lines = [f"class: {payload['class']}"]
        if result.markov is not None:
            lines.append(f"markov constant: {payload['markov_constant_float']:.6f}")
        lines.append(f"mutation class size: {result.class_size}")
        _write_out(args, "\n".join(lines) + "\n")
    return 0


def cmd_enumerate(args) -> int:
    rng = random.Random(args.seed)
    if args.affine:
        seed = initial_seed(args.affine)
        depth = args.depth or (14 if args.affine <= 7 else 10)
        try:
            graph = exgraph.bfs(
                seed, depth_limit=depth, vertex_limit=args.max_vertices or None
            )
        except exgraph.BudgetExceeded as exc:
            graph = exc.partial
        summary = {
            "vertices": graph.order(),
            "edges": graph.size(),
            "closed": graph.closed,
            "depth": depth,
        }
    else:
        B = _matrix_from_args(args)
        result = classify(B, budget=args.budget)
        if result.kind == "finite":
            _, graph = exgraph.compatible_spherical_graph(B, rng)
        else:
            seed = spherical_seed(B)
            graph = exgraph.bfs(
                seed,
                depth_limit=args.depth or None,
                vertex_limit=args.max_vertices or 4096,
            )
        summary = {
            "vertices": graph.order(),
            "edges": graph.size(),
            "closed": graph.closed,
            "class": str(result),
        }
    if args.format == "dot":
        _write_out(args, exgraph.export_dot(graph))
    elif args.format == "svg":
        _write_out(args, exgraph.export_svg(graph))
    elif args.format == "json":
        _write_out(args, exgraph.export_json(graph) + "\n")
    else:
        _write_out(args, json.dumps(summary) + "\n")
    print(
        f"enumerated {summary['vertices']} seeds, {summary['edges']} edges, "
        f"closed={summary['closed']}",
        file=sys.stderr,
    )
    return 0


def cmd_rank2(args) -> int:
    rows = period_grid(args.max_b)
    lines = ["a,b,u_halfsteps,period"]
    lines.extend(f"{a},{b},{u},{p}" for a, b, u, p in rows)
    _write_out(args, "\n".join(lines) + "\n")
    return 0


def cmd_verify(args) -> int:
    levels = [int(x) for x in args.levels.split(",")] if args.levels else [3, 5, 7]
    names = args.checks.split(",") if args.checks else None
    results = verification.run_checks(names=names, levels=levels, seed=args.seed)
    worst = 0
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"{status} {res.name} ({res.elapsed:.2f}s): {res.detail}")
        if not res.passed:
            worst = 1
    return worst


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverbelt",
        description="Exact mutation of rank-2/3 quivers with cosine weights",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_matrix_opts(p):
        p.add_argument("--sph", help="finite-type pair t1,t2 (e.g. 1/3,2/5)")
        p.add_argument("--affine", type=int, help="affine level d")
        p.add_argument("--matrix", help="path to a matrix JSON file")
        p.add_argument(
            "--entries", help="inline upper-triangle spec, e.g. 'cos(1/3),0,cos(2/5)'"
        )
        p.add_argument("--budget", type=int, default=512)

    pc = sub.add_parser("classify", help="classify an exchange matrix")
    add_matrix_opts(pc)
    pc.add_argument("--format", choices=("text", "json"), default="text")
    pc.add_argument("--out")
    pc.set_defaults(func=cmd_classify)

    pe = sub.add_parser("enumerate", help="enumerate an exchange graph")
    add_matrix_opts(pe)
    pe.add_argument("--depth", type=int, default=0)
    pe.add_argument("--max-vertices", type=int, default=0)
    pe.add_argument(
        "--format", choices=("text", "json", "dot", "svg"), default="text"
    )
    pe.add_argument("--out")
    pe.add_argument("--seed", type=int, default=2024)
    pe.set_defaults(func=cmd_enumerate)

    pr = sub.add_parser("rank2", help="rank-2 sector orbit periods as CSV")
    pr.add_argument("--max-b", type=int, default=12)
    pr.add_argument("--out")
    pr.set_defaults(func=cmd_rank2)

    pv = sub.add_parser("verify", help="run verification suites")
    pv.add_argument("--levels", help="comma-separated affine levels (default 3,5,7)")
    pv.add_argument("--checks", help="comma-separated check names (default all)")
    pv.add_argument("--seed", type=int, default=2024)
    pv.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
