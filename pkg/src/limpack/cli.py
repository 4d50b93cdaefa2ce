"""Command-line interface: gen, solve, construct, verify, bounds, bench.

Exit codes: 0 success or valid certificate, 1 invalid certificate or
infeasible/failed solve, 2 usage error, 3 input error.  All randomness
takes an explicit --seed (default 0, never wall-clock), so identical
invocations produce byte-identical reports; `bench --no-timing` drops
the only non-deterministic column.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import replace
from fractions import Fraction
from typing import Optional

from .bounds import bound_sheet
from .cubic import construct_two_limited
from .errors import (
    GraphInputError,
    InfeasibleError,
    LimpackError,
    PreconditionError,
    ResourceLimitError,
)
from .generators import gen_cycle, gen_named, gen_projective, gen_random_regular
from .graph import (
    Graph,
    TypedMultigraph,
    degree_stats,
    disjoint_union,
    parse_graph,
    parse_packing,
    serialize_graph,
)
from .greedy import greedy_packing
from .randomized import LLLParameters, lll_parameters, lll_resample, sample_and_repair
from .solver import max_k_limited, min_tuple_dominating
from .verify import verify_k_limited, verify_tuple_dominating, verify_typed_two_limited


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="limpack",
        description="k-limited packings and tuple domination: generate, solve,"
        " construct, verify, bound, benchmark.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("gen", help="generate a graph file")
    p_gen.add_argument(
        "--family",
        required=True,
        choices=["cycle", "h6", "petersen", "k4", "projective", "random-regular"],
    )
    p_gen.add_argument("--n", type=int)
    p_gen.add_argument("--r", type=int)
    p_gen.add_argument("--q", type=int)
    p_gen.add_argument("--k", type=int)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--copies", type=int, default=1)
    p_gen.add_argument("--out", required=True)
    p_gen.set_defaults(func=_cmd_gen)

    p_solve = sub.add_parser("solve", help="exact optimum by branch and bound")
    p_solve.add_argument("--exact", action="store_true", help="accepted for clarity; solves are always exact")
    p_solve.add_argument("--dominating", action="store_true")
    p_solve.add_argument("--l", type=int)
    p_solve.add_argument("--k", type=int, required=True)
    p_solve.add_argument("file")
    p_solve.set_defaults(func=_cmd_solve)

    p_con = sub.add_parser("construct", help="build a packing by a chosen method")
    p_con.add_argument(
        "--method", required=True, choices=["cubic2", "greedy", "sample-repair", "lll"]
    )
    p_con.add_argument("--k", type=int, required=True)
    p_con.add_argument("--seed", type=int, default=0)
    p_con.add_argument("--p", type=float)
    p_con.add_argument("--max-rounds", type=int, default=100_000)
    p_con.add_argument("--trace")
    p_con.add_argument("file")
    p_con.set_defaults(func=_cmd_construct)

    p_ver = sub.add_parser("verify", help="check a packing or dominating set file")
    p_ver.add_argument("--k", type=int, required=True)
    p_ver.add_argument("--packing", required=True)
    p_ver.add_argument("--dominating", action="store_true")
    p_ver.add_argument("--l", type=int)
    p_ver.add_argument("graph")
    p_ver.set_defaults(func=_cmd_verify)

    p_bounds = sub.add_parser("bounds", help="print the closed-form bound sheet")
    p_bounds.add_argument("--k", type=int, required=True)
    p_bounds.add_argument("--n", type=int)
    p_bounds.add_argument("--maxdeg", type=int)
    p_bounds.add_argument("--mindeg", type=int)
    p_bounds.add_argument("file", nargs="?")
    p_bounds.set_defaults(func=_cmd_bounds)

    p_bench = sub.add_parser("bench", help="reproduce the tightness examples")
    p_bench.add_argument("--suite", required=True, choices=["paper"])
    p_bench.add_argument("--no-timing", action="store_true")
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 1
    except (GraphInputError, PreconditionError, ResourceLimitError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except LimpackError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


class _UsageError(Exception):
    pass


def _read_graph(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _read_plain_graph(path: str, context: str) -> Graph:
    g = _read_graph(path)
    if isinstance(g, TypedMultigraph):
        raise GraphInputError(f"{context} requires a plain (untyped) graph file: {path}")
    return g


def _cmd_gen(args) -> int:
    family = args.family
    if family == "cycle":
        if args.n is None:
            raise _UsageError("gen --family cycle needs --n")
        g = gen_cycle(args.n)
    elif family in ("h6", "petersen", "k4"):
        g = gen_named(family)
    elif family == "projective":
        if args.q is None or args.k is None:
            raise _UsageError("gen --family projective needs --q and --k")
        g = gen_projective(args.q, args.k)
    else:
        if args.n is None or args.r is None:
            raise _UsageError("gen --family random-regular needs --n and --r")
        g = gen_random_regular(args.n, args.r, args.seed)
    if args.copies < 1:
        raise _UsageError("--copies must be at least 1")
    out = g
    for _ in range(args.copies - 1):
        out = disjoint_union(out, g)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(serialize_graph(out))
    return 0


def _cmd_solve(args) -> int:
    g = _read_plain_graph(args.file, "solve")
    if args.dominating:
        if args.l is None:
            raise _UsageError("solve --dominating needs --l")
        result = min_tuple_dominating(g, args.l)
    else:
        result = max_k_limited(g, args.k)
    sys.stdout.write(result.to_text())
    return 0


def _cmd_construct(args) -> int:
    method = args.method
    if method == "cubic2":
        if args.k != 2:
            raise _UsageError("construct --method cubic2 requires --k 2")
        parsed = _read_graph(args.file)
        tm = (
            parsed
            if isinstance(parsed, TypedMultigraph)
            else TypedMultigraph.from_graph(parsed)
        )
        chosen, trace = construct_two_limited(tm)
        if args.trace:
            with open(args.trace, "w", encoding="utf-8") as fh:
                fh.write(trace.to_text())
        _print_witness_report(chosen)
        return 0
    g = _read_plain_graph(args.file, f"construct --method {method}")
    if method == "greedy":
        chosen = greedy_packing(g, args.k)
        _print_witness_report(chosen)
        return 0
    if method == "sample-repair":
        p = "auto" if args.p is None else args.p
        report = sample_and_repair(g, args.k, p=p, seed=args.seed)
        print(f"size: {len(report.packing.vertices)}")
        print(f"rounds: {report.rounds}")
        print(f"repairs: {report.repairs}")
        print("clamped: false")
        _print_witness(report.packing.vertices)
        return 0
    # lll
    params = None
    if args.p is not None:
        stats = degree_stats(g)
        if args.k > stats.max_degree:
            base = LLLParameters(0.0, 0.0, 1.0, False)
        else:
            base = lll_parameters(max(2, stats.max_degree), args.k)
        params = replace(base, p=args.p)
    report = lll_resample(g, args.k, params=params, seed=args.seed, max_rounds=args.max_rounds)
    print(f"size: {len(report.packing.vertices)}")
    print(f"rounds: {report.rounds}")
    print(f"clamped: {'true' if report.params and report.params.clamped else 'false'}")
    print(f"success: {'true' if report.success else 'false'}")
    _print_witness(report.packing.vertices)
    return 0 if report.success else 1


def _print_witness_report(chosen) -> None:
    print(f"size: {len(chosen)}")
    _print_witness(chosen)


def _print_witness(chosen) -> None:
    print("witness: " + " ".join(str(v) for v in sorted(chosen)))


def _cmd_verify(args) -> int:
    parsed = _read_graph(args.graph)
    with open(args.packing, "r", encoding="utf-8") as fh:
        vertices = parse_packing(fh.read())
    if isinstance(parsed, TypedMultigraph):
        if args.dominating:
            raise GraphInputError("typed multigraphs support packing verification only")
        if args.k != 2:
            raise GraphInputError("typed multigraphs support only --k 2")
        report = verify_typed_two_limited(parsed, vertices)
    elif args.dominating:
        if args.l is None:
            raise _UsageError("verify --dominating needs --l")
        report = verify_tuple_dominating(parsed, vertices, args.l)
    else:
        report = verify_k_limited(parsed, vertices, args.k)
    sys.stdout.write(report.to_text())
    return 0 if report.valid else 1


def _cmd_bounds(args) -> int:
    if args.file is not None:
        g = _read_plain_graph(args.file, "bounds")
        stats = degree_stats(g)
        avg = 2.0 * stats.edge_count / stats.vertex_count if stats.vertex_count else 0.0
        sheet = bound_sheet(
            stats.vertex_count, stats.max_degree, stats.min_degree, args.k, avg_degree=avg
        )
    else:
        if args.n is None or args.maxdeg is None or args.mindeg is None:
            raise _UsageError("bounds needs either a graph file or --n, --maxdeg, --mindeg")
        sheet = bound_sheet(args.n, args.maxdeg, args.mindeg, args.k)
    sys.stdout.write(sheet.to_text())
    return 0


def _bench_rows():
    h6 = gen_named("h6")
    h6x2 = disjoint_union(h6, h6)
    h6x3 = disjoint_union(h6x2, h6)
    petersen = gen_named("petersen")
    return [
        ("c4", gen_cycle(4), 2),
        ("c5", gen_cycle(5), 1),
        ("c6", gen_cycle(6), 1),
        ("c6", gen_cycle(6), 2),
        ("petersen", petersen, 1),
        ("petersen", petersen, 2),
        ("petersen", petersen, 3),
        ("h6", h6, 2),
        ("h6x2", h6x2, 2),
        ("h6x3", h6x3, 2),
        ("k4", gen_named("k4"), 2),
        ("proj-2-1", gen_projective(2, 1), 1),
        ("proj-3-1", gen_projective(3, 1), 1),
        ("proj-2-2", gen_projective(2, 2), 2),
    ]


def _cmd_bench(args) -> int:
    show_timing = not args.no_timing
    header = "family n k method size exact upper"
    if show_timing:
        header += " time_ms"
    print(header)
    for family, g, k in _bench_rows():
        stats = degree_stats(g)
        exact = max_k_limited(g, k).optimum
        upper = Fraction(k * g.n, stats.min_degree + 1)
        methods = [("exact", lambda: max_k_limited(g, k).optimum)]
        methods.append(("greedy", lambda: len(greedy_packing(g, k))))
        methods.append(
            ("sample-repair", lambda: len(sample_and_repair(g, k, seed=0).packing.vertices))
        )
        methods.append(
            ("lll", lambda: len(lll_resample(g, k, seed=0).packing.vertices))
        )
        if k == 2 and stats.max_degree <= 3:
            methods.append(
                ("cubic2", lambda: len(construct_two_limited(TypedMultigraph.from_graph(g))[0]))
            )
        for name, run in methods:
            start = time.perf_counter()
            size = run()
            elapsed_ms = (time.perf_counter() - start) * 1000.0
            line = f"{family} {g.n} {k} {name} {size} {exact} {upper}"
            if show_timing:
                line += f" {elapsed_ms:.3f}"
            print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
