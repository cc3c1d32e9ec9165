"""Command-line entry point: ``twoproper <subcommand> ...``.

Exit codes: 0 success, 1 failed check, 2 sigma* < n, 3 construction
failure, 4 malformed partition file, 5 malformed graph input.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import exceptional, generators
from .checks import STATEMENTS, run_exhaustive, run_random
from .graph import Graph, GraphFormatError, emit_edge_list, emit_graph6, parse_edge_list, parse_graph6
from .invariants import format_ext, format_witness, summarize
from .oracle import BudgetExceeded, OracleBudget, oracle_alpha_star, oracle_min_2pp, oracle_sigma_star
from .partition import (
    ConstructionFailure,
    Exceptional,
    Partition,
    PartitionKind,
    Partitioned,
    PreconditionError,
    PreconditionFailed,
    construct_2pp,
    construct_almost_2pp,
    format_partition,
    parse_partition,
    verify_partition,
)

EXIT_FAIL = 1
EXIT_PRECONDITION = 2
EXIT_CONSTRUCTION = 3
EXIT_BAD_PARTITION = 4
EXIT_BAD_GRAPH = 5


def _looks_like_graph6(text: str) -> bool:
    first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
    return bool(first) and all(63 <= ord(ch) <= 126 for ch in first.removeprefix(">>graph6<<"))


def read_graph(path: str, fmt: str = "auto") -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text(encoding="utf-8")
    if fmt == "auto":
        fmt = "graph6" if _looks_like_graph6(text) else "edgelist"
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphFormatError("expected exactly one graph6 line")
        return parse_graph6(lines[0])
    return parse_edge_list(text)


def _write_graph(g: Graph, fmt: str) -> None:
    sys.stdout.write(emit_graph6(g) + "\n" if fmt == "graph6" else emit_edge_list(g))


def _oracle_max_n(args: argparse.Namespace) -> int:
    if getattr(args, "oracle_max_n", None) is not None:
        return args.oracle_max_n
    return OracleBudget.from_env().partition_max_n


# -- subcommands ---------------------------------------------------------------


def cmd_invariants(args: argparse.Namespace) -> int:
    g = read_graph(args.graph, args.format)
    if g.n == 0:
        print("n=0")
        return 0
    s = summarize(g)
    print(
        f"n={s.n} delta={s.delta} sigma2={format_ext(s.sigma2)} pi2={format_ext(s.pi2)} "
        f"sigma_star={format_ext(s.sigma_star)} alpha_star={s.alpha_star} alpha={s.alpha}"
    )
    print(f"sigma_star_witness={format_witness(s.sigma_star_witness)}")
    print(f"alpha_star_witness={format_witness(s.alpha_star_witness)}")
    return 0


def cmd_partition(args: argparse.Namespace) -> int:
    g = read_graph(args.graph, args.format)
    budget = _oracle_max_n(args)
    if args.almost:
        try:
            p = construct_almost_2pp(g, oracle_max_n=budget)
        except PreconditionError as exc:
            print("status=precondition-failed")
            print(f"witness={format_witness(exc.witness)} weight={exc.witness.weight}")
            return EXIT_PRECONDITION
        except (RuntimeError, BudgetExceeded) as exc:
            print("status=construction-failed")
            print(f"diagnostic={exc}")
            return EXIT_CONSTRUCTION
        print("status=partitioned")
        print(f"parts={len(p)}")
        sys.stdout.write(format_partition(p))
        return 0

    res = construct_2pp(g, all_roots=args.all_roots, oracle_max_n=budget)
    print(f"status={res.status}")
    if isinstance(res, Partitioned):
        print(f"path={res.path} parts={len(res.partition)} alpha_star={res.parts_bound}")
        sys.stdout.write(format_partition(res.partition))
        return 0
    if isinstance(res, Exceptional):
        print(f"exceptional: {res.cls}")
        return 0
    if isinstance(res, PreconditionFailed):
        print(f"witness={format_witness(res.witness)} weight={res.witness.weight}")
        return EXIT_PRECONDITION
    assert isinstance(res, ConstructionFailure)
    print(f"diagnostic={res.diagnostic}")
    return EXIT_CONSTRUCTION


def cmd_verify(args: argparse.Namespace) -> int:
    g = read_graph(args.graph, args.format)
    try:
        p = parse_partition(Path(args.partition).read_text(encoding="utf-8"))
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_PARTITION
    if args.kind:
        p = Partition(p.parts, PartitionKind(args.kind))
    check = verify_partition(g, p)
    print("result=pass" if check else "result=fail")
    for problem in check.problems:
        print(f"problem={problem}")
    return 0 if check else EXIT_FAIL


def cmd_oracle(args: argparse.Namespace) -> int:
    g = read_graph(args.graph, args.format)
    budget = OracleBudget.from_env()
    max_n = args.oracle_max_n if args.oracle_max_n is not None else budget.partition_max_n
    print(f"sigma_star={format_ext(oracle_sigma_star(g, max(budget.invariant_max_n, max_n)))}")
    if g.n:
        print(f"alpha_star={oracle_alpha_star(g, max(budget.invariant_max_n, max_n))}")
    hit = oracle_min_2pp(g, allow_k2_first=args.almost, max_n=max_n)
    if hit is None:
        print("min_parts=none")
        return 0
    print(f"min_parts={hit[0]}")
    kind = PartitionKind.ALMOST if args.almost else PartitionKind.TWO_PROPER
    sys.stdout.write(format_partition(Partition(tuple(hit[1]), kind)))
    return 0


def _split_L(raw: Optional[str]) -> list[str]:
    return [e for e in (raw or "").replace("{", "").replace("}", "").split(",") if e]


def cmd_gen(args: argparse.Namespace) -> int:
    kind = args.family
    if kind == "k2":
        g = exceptional.generate(exceptional.K2())
    elif kind == "f5":
        g = exceptional.generate(exceptional.F5())
    elif kind == "f11":
        g = exceptional.generate(exceptional.F11(_split_L(args.L)))
    elif kind == "f12":
        g = exceptional.generate(exceptional.F12(_split_L(args.L)))
    elif kind == "h":
        g = exceptional.generate(exceptional.H(args.s, args.t, args.minus))
    elif kind == "gt":
        g = generators.sharp_gt(args.t, strict=args.strict)
    elif kind == "gt-prime":
        g = generators.sharp_gt_prime(args.t, strict=args.strict)
    elif kind == "complete":
        g = generators.complete(args.n)
    elif kind == "cycle":
        g = generators.cycle(args.n)
    elif kind == "path":
        g = generators.path(args.n)
    elif kind == "bipartite":
        g = generators.complete_bipartite(args.a, args.b)
    else:
        g = generators.random_graph(args.n, args.p, args.seed)
    _write_graph(g, args.out_format)
    return 0


def cmd_theorem_check(args: argparse.Namespace) -> int:
    budget = _oracle_max_n(args)
    statement = args.which or args.statement or "ind"
    if args.exhaustive is not None:
        report = run_exhaustive(args.exhaustive, statement, allow_large=args.allow_n7, jobs=args.jobs, oracle_max_n=budget)
    else:
        count, n, p, seed = args.random
        seed = seed.removeprefix("seed=")
        report = run_random(int(count), int(n), float(p), int(seed), statement, oracle_max_n=budget)
    for line in report.lines():
        print(line)
    return 0 if report.ok else EXIT_FAIL


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twoproper", description="2-proper partitions and degree-sum invariants")
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("graph", nargs="?", default="-", help="graph file (edge list or graph6); '-' for stdin")
        p.add_argument("--format", choices=["auto", "edgelist", "graph6"], default="auto")

    p = sub.add_parser("invariants", help="print n, delta, sigma2, pi2, sigma*, alpha*, alpha")
    graph_input(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("partition", help="construct a 2-proper (or almost 2-proper) partition")
    graph_input(p)
    p.add_argument("--almost", action="store_true")
    p.add_argument("--all-roots", action="store_true", help="try every end-block as root, keep the smallest result")
    p.add_argument("--oracle-fallback-budget", dest="oracle_max_n", type=int, default=None)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("verify", help="check a partition file against a graph")
    p.add_argument("graph")
    p.add_argument("partition")
    p.add_argument("--format", choices=["auto", "edgelist", "graph6"], default="auto")
    p.add_argument("--kind", choices=[k.value for k in PartitionKind], default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="brute-force sigma*, alpha* and minimum partition")
    graph_input(p)
    p.add_argument("--almost", action="store_true")
    p.add_argument("--max-n", dest="oracle_max_n", type=int, default=None)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="write a generated graph to stdout")
    p.add_argument("--format", dest="out_format", choices=["edgelist", "graph6"], default="edgelist")
    # the flag is also accepted after the family name
    out = argparse.ArgumentParser(add_help=False)
    out.add_argument("--format", dest="out_format", choices=["edgelist", "graph6"], default=argparse.SUPPRESS)
    fam = p.add_subparsers(dest="family", required=True)

    def family(name: str) -> argparse.ArgumentParser:
        return fam.add_parser(name, parents=[out])

    family("k2")
    family("f5")
    for name in ("f11", "f12"):
        q = family(name)
        q.add_argument("--L", default="", help="comma-separated optional edges, e.g. ab1,ac9")
    q = family("h")
    q.add_argument("s", type=int)
    q.add_argument("t", type=int)
    q.add_argument("--minus", action="store_true")
    for name in ("gt", "gt-prime"):
        q = family(name)
        q.add_argument("t", type=int, nargs="+")
        q.add_argument("--strict", action="store_true", help="also require d(d+1)+1 < n")
    for name in ("complete", "cycle", "path"):
        family(name).add_argument("n", type=int)
    q = family("bipartite")
    q.add_argument("a", type=int)
    q.add_argument("b", type=int)
    q = family("random")
    q.add_argument("n", type=int)
    q.add_argument("p", type=float)
    q.add_argument("seed", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("theorem-check", help="check a statement over a graph corpus")
    corpus = p.add_mutually_exclusive_group(required=True)
    corpus.add_argument("--exhaustive", type=int, metavar="N")
    corpus.add_argument("--random", nargs=4, metavar=("COUNT", "N", "P", "SEED"))
    p.add_argument("which", nargs="?", choices=STATEMENTS, help="statement to check (default ind)")
    p.add_argument("--statement", "--which", dest="statement", choices=STATEMENTS, default=None)
    p.add_argument("--allow-n7", action="store_true", help="permit the 2^21-graph corpus for n=7")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.add_argument("--oracle-max-n", type=int, default=None)
    p.set_defaults(func=cmd_theorem_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_GRAPH
    except (ValueError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
