"""Command-line front end.

Graph files are plain text: lines starting with `#` are comments, an optional
first line `p <vertex_count>` fixes the vertex count, `u v` adds an undirected
edge, and `u > v` adds a directed edge. Directed edges only separate chain
components; no attempt is made to prove the input is a valid essential graph
beyond the chain-graph shape.

Exit codes: 0 ok, 1 engine disagreement, 2 parse or argument error,
3 invalid graph, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import statistics
import sys
import time
from pathlib import Path

from .counting import size_benchmark
from .essential import ChainGraph, is_chain_graph
from .formula import evaluate, format_polynomial, size_f, size_formula_based
from .graphs import (
    InvalidGraphError,
    UndirectedGraph,
    connected_components,
    core_decomposition,
    induced_subgraph,
    is_chordal,
)
from .testkit import ORACLE_MAX_VERTICES, oracle_count, random_chordal

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_IO = 4


class ParseError(ValueError):
    """Graph file syntax or consistency error, pinned to a line."""

    def __init__(self, line_no, message):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_graph_text(text):
    """Parse GraphFile text into a ChainGraph."""
    header_p = None
    undirected = []
    directed = []
    pairs = {}
    max_seen = -1
    saw_edge = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "p":
            if header_p is not None:
                raise ParseError(line_no, "duplicate vertex-count header")
            if saw_edge:
                raise ParseError(line_no, "vertex-count header must precede edges")
            if len(tokens) != 2:
                raise ParseError(line_no, "header must be 'p <vertex_count>'")
            try:
                header_p = int(tokens[1])
            except ValueError:
                raise ParseError(line_no, f"bad vertex count {tokens[1]!r}") from None
            if header_p < 0:
                raise ParseError(line_no, "vertex count must be nonnegative")
            continue
        if len(tokens) == 2:
            kind = "undirected"
        elif len(tokens) == 3 and tokens[1] == ">":
            kind = "directed"
            tokens = (tokens[0], tokens[2])
        else:
            raise ParseError(line_no, f"unrecognized line {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(line_no, f"bad vertex labels in {line!r}") from None
        if u < 0 or v < 0:
            raise ParseError(line_no, "vertex labels must be nonnegative")
        if u == v:
            raise ParseError(line_no, f"self-loop at vertex {u}")
        if header_p is not None and (u >= header_p or v >= header_p):
            raise ParseError(line_no, f"vertex out of range for p={header_p}")
        pair = (min(u, v), max(u, v))
        if pair in pairs:
            raise ParseError(
                line_no, f"duplicate pair {u},{v} (first seen on line {pairs[pair]})"
            )
        pairs[pair] = line_no
        saw_edge = True
        max_seen = max(max_seen, u, v)
        if kind == "undirected":
            undirected.append(pair)
        else:
            directed.append((u, v))
    p = header_p if header_p is not None else max_seen + 1
    return ChainGraph(p, undirected, directed)


def format_graph_text(cg, comment=None):
    """Render a ChainGraph as GraphFile text (round-trips through the parser)."""
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"p {cg.p}")
    for u, v in sorted(cg.undirected):
        lines.append(f"{u} {v}")
    for a, b in sorted(cg.directed):
        lines.append(f"{a} > {b}")
    return "\n".join(lines) + "\n"


def _load(path):
    return parse_graph_text(Path(path).read_text())


def _undirected_only(cg, command):
    if cg.directed:
        raise InvalidGraphError(f"{command} requires a fully undirected graph")
    return UndirectedGraph(cg.p, sorted(cg.undirected))


def _validated_components(cg):
    """Edge-bearing undirected components, compacted; non-chordal ones fail."""
    und = UndirectedGraph(cg.p, sorted(cg.undirected))
    out = []
    for comp in connected_components(und):
        sub, labels = induced_subgraph(und, comp)
        if sub.edge_count == 0:
            continue
        if not is_chordal(sub):
            raise InvalidGraphError(
                f"chain component on vertices {list(labels)} is not chordal"
            )
        out.append(sub)
    return out


def _check_chain_shape(cg):
    if not is_chain_graph(cg):
        raise InvalidGraphError(
            "directed edges form a partially directed cycle (not a chain graph)"
        )


def cmd_size(args):
    cg = _load(args.path)
    _check_chain_shape(cg)
    _validated_components(cg)
    if args.engine == "formula":
        print(size_formula_based(cg))
        return EXIT_OK
    if args.engine == "benchmark":
        print(size_benchmark(cg))
        return EXIT_OK
    by_formula = size_formula_based(cg)
    by_benchmark = size_benchmark(cg)
    print(f"formula: {by_formula}")
    print(f"benchmark: {by_benchmark}")
    if by_formula != by_benchmark:
        print("error: engines disagree", file=sys.stderr)
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_formula(args):
    cg = _load(args.path)
    g = _undirected_only(cg, "formula")
    _validated_components(cg)
    dec = core_decomposition(g)
    poly = size_f(dec.core)
    print(f"core: p={dec.core.p} n={dec.core.edge_count} m={dec.dominating_count}")
    print(format_polynomial(poly))
    if args.at is not None:
        if args.at < 0:
            raise ParseError(0, "--at must be nonnegative")
        print(f"f({args.at}) = {evaluate(poly, args.at)}")
    return EXIT_OK


def cmd_core(args):
    cg = _load(args.path)
    g = _undirected_only(cg, "core")
    _validated_components(cg)
    dec = core_decomposition(g)
    print(f"dominating: {dec.dominating_count}")
    print(f"p {dec.core.p}")
    for u, v in dec.core.edges:
        print(f"{u} {v}")
    return EXIT_OK


def cmd_gen(args):
    if args.count < 1:
        raise ValueError("--count must be at least 1")
    if args.count > 1 and args.out_dir is None:
        raise ValueError("--count above 1 requires --out-dir (one file per sample)")
    for i in range(args.count):
        sample_seed = args.seed + i
        g = random_chordal(args.vertices, args.edges, sample_seed)
        text = format_graph_text(
            ChainGraph.from_undirected(g),
            comment=f"p={args.vertices} n={args.edges} seed={sample_seed}",
        )
        if args.out_dir is None:
            sys.stdout.write(text)
        else:
            out_dir = Path(args.out_dir)
            out_dir.mkdir(parents=True, exist_ok=True)
            (out_dir / f"sample_{i:04d}.graph").write_text(text)
    return EXIT_OK


def _check_one(label, cg):
    """Compare engines on one chain graph; return (ok, message)."""
    comps = _validated_components(cg)
    by_formula = size_formula_based(cg)
    by_benchmark = size_benchmark(cg)
    engines = {"formula": by_formula, "benchmark": by_benchmark}
    if all(c.p <= ORACLE_MAX_VERTICES for c in comps):
        by_oracle = 1
        for comp in comps:
            by_oracle *= oracle_count(comp)
        engines["oracle"] = by_oracle
    values = set(engines.values())
    if len(values) == 1:
        names = ",".join(engines)
        return True, f"{label}: size={by_formula} ok ({names})"
    detail = " ".join(f"{name}={value}" for name, value in engines.items())
    return False, f"{label}: DISAGREE {detail}"


def cmd_check(args):
    if args.random is not None:
        p, n, seed, count = args.random
        cases = []
        for i in range(count):
            g = random_chordal(p, n, seed + i)
            cases.append((f"seed={seed + i}", ChainGraph.from_undirected(g)))
    else:
        if args.path is None:
            raise ValueError("check needs a path or --random P N SEED COUNT")
        cg = _load(args.path)
        _check_chain_shape(cg)
        cases = [(args.path, cg)]
    all_ok = True
    for label, cg in cases:
        ok, message = _check_one(label, cg)
        print(message)
        all_ok = all_ok and ok
    return EXIT_OK if all_ok else EXIT_DISAGREE


def _timed(fn, arg):
    """(result, elapsed ns) with one discarded warm-up run."""
    fn(arg)
    start = time.perf_counter_ns()
    result = fn(arg)
    return result, time.perf_counter_ns() - start


def cmd_bench(args):
    p = args.vertices
    max_edges = p * (p - 1) // 2
    if not p - 1 <= args.min_edges <= args.max_edges <= max_edges:
        raise ValueError(
            f"need p-1 <= min-edges <= max-edges <= {max_edges} for p={p}"
        )
    if args.samples < 1:
        raise ValueError("--samples must be at least 1")
    data = []
    per_n = {}
    counter = 0
    for n in range(args.min_edges, args.max_edges + 1):
        for i in range(args.samples):
            sample_seed = args.seed + counter
            counter += 1
            g = random_chordal(p, n, sample_seed)
            by_benchmark, t_benchmark = _timed(size_benchmark, g)
            by_formula, t_formula = _timed(size_formula_based, g)
            if by_benchmark != by_formula:
                print(
                    f"error: engines disagree at n={n} seed={sample_seed}: "
                    f"benchmark={by_benchmark} formula={by_formula}",
                    file=sys.stderr,
                )
                return EXIT_DISAGREE
            data.append((p, n, i, sample_seed, by_benchmark, t_benchmark, t_formula))
            per_n.setdefault(n, []).append((t_benchmark, t_formula))
    rows = [("p", "n", "sample_index", "seed", "size", "t_benchmark_ns", "t_formula_ns")]
    rows.extend(data)
    stats = (
        ("mean", statistics.fmean),
        ("min", min),
        ("median", statistics.median),
        ("max", max),
    )
    for n in sorted(per_n):
        t_b = [t for t, _ in per_n[n]]
        t_f = [t for _, t in per_n[n]]
        for stat_name, fn in stats:
            rows.append((p, n, -1, stat_name, "", fn(t_b), fn(t_f)))
    try:
        with open(args.out, "w", newline="") as handle:
            csv.writer(handle).writerows(rows)
    except OSError:
        raise
    return EXIT_OK


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="mecsize",
        description=(
            "Exact Markov equivalence class sizes from essential graphs. "
            "Directed edges in input files only separate chain components; "
            "no essential-graph validity proof is attempted."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_size = sub.add_parser("size", help="print the class size of a graph file")
    p_size.add_argument("path")
    p_size.add_argument(
        "--engine",
        choices=("formula", "benchmark", "both"),
        default="formula",
    )
    p_size.set_defaults(func=cmd_size)

    p_formula = sub.add_parser(
        "formula", help="print the size polynomial of a graph's core"
    )
    p_formula.add_argument("path")
    p_formula.add_argument("--at", type=int, default=None, metavar="M")
    p_formula.set_defaults(func=cmd_formula)

    p_core = sub.add_parser("core", help="print dominating count and core edges")
    p_core.add_argument("path")
    p_core.set_defaults(func=cmd_core)

    p_gen = sub.add_parser("gen", help="generate random connected chordal graphs")
    p_gen.add_argument("--vertices", type=int, required=True, metavar="P")
    p_gen.add_argument("--edges", type=int, required=True, metavar="N")
    p_gen.add_argument("--seed", type=int, required=True, metavar="S")
    p_gen.add_argument("--count", type=int, default=1, metavar="C")
    p_gen.add_argument("--out-dir", default=None, metavar="DIR")
    p_gen.set_defaults(func=cmd_gen)

    p_check = sub.add_parser(
        "check", help="compare oracle, benchmark, and formula engines"
    )
    p_check.add_argument("path", nargs="?", default=None)
    p_check.add_argument(
        "--random",
        type=int,
        nargs=4,
        default=None,
        metavar=("P", "N", "SEED", "COUNT"),
    )
    p_check.set_defaults(func=cmd_check)

    p_bench = sub.add_parser("bench", help="time both engines over a random grid")
    p_bench.add_argument("--vertices", type=int, required=True, metavar="P")
    p_bench.add_argument("--min-edges", type=int, required=True, metavar="A")
    p_bench.add_argument("--max-edges", type=int, required=True, metavar="B")
    p_bench.add_argument("--samples", type=int, required=True, metavar="N")
    p_bench.add_argument("--seed", type=int, required=True, metavar="S")
    p_bench.add_argument("--out", required=True, metavar="FILE")
    p_bench.set_defaults(func=cmd_bench)

    return parser


def main(argv=None):
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
