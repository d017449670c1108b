"""Command-line front end: generate, solve, verify, benchmark.

Exit codes are a stable contract:
  0 ok, 1 parse failure, 2 usage/flag error, 3 oracle size guard,
  4 invalid solution, 5 benchmark/regression failure.
"""

from __future__ import annotations

import argparse
import sys

from . import bench, formats
from .coloring import dsatur, exact_coloring, validate_coloring, welsh_powell
from .errors import ConfigError, GuardError
from .generators import GenConfig, gen_conflict_graph, gen_hospital
from .graphs import ConflictGraph
from .hospital import Assignment, HospitalInstance, solve, validate

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_INVALID = 4
EXIT_BENCH = 5


def _probability(text: str) -> float:
    value = float(text)
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"probability must be in [0, 1], got {text}")
    return value


def _size_list(text: str) -> list[int]:
    try:
        sizes = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"sizes must be a comma list of ints, got {text!r}")
    if any(n < 0 for n in sizes):
        raise argparse.ArgumentTypeError("sizes must be nonnegative")
    return sizes


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schedflow",
        description="Hospital bed assignment (max-flow) and course "
        "timetabling (greedy coloring) solvers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a random instance file")
    gen.add_argument("kind", choices=["hospital", "courses"])
    gen.add_argument("--n", type=int, required=True, help="instance size")
    gen.add_argument("--seed", type=int, default=42)
    gen.add_argument("--departments", type=int, default=5)
    gen.add_argument("--compat-min", type=int, default=1)
    gen.add_argument("--compat-max", type=int, default=3)
    gen.add_argument("--density", type=_probability, default=0.3)
    gen.add_argument("--out", required=True, help="output instance path")

    slv = sub.add_parser("solve", help="solve an instance, solution JSON to stdout")
    slv.add_argument("instance", help="instance JSON path")
    slv.add_argument(
        "--algorithm",
        choices=["flow", "wp", "dsatur", "exact"],
        help="default: flow for hospital instances, wp for courses",
    )

    ver = sub.add_parser("verify", help="check a solution against its instance")
    ver.add_argument("instance", help="instance JSON path")
    ver.add_argument("solution", help="solution JSON path")

    bch = sub.add_parser("bench", help="run a timing suite, write CSV, print summary")
    bch.add_argument("--suite", choices=["flow", "coloring"], required=True)
    bch.add_argument("--sizes", type=_size_list, help="comma list, e.g. 20,40,60")
    bch.add_argument("--trials", type=int, default=5)
    bch.add_argument("--seed", type=int, default=42)
    bch.add_argument("--density", type=_probability, default=0.3)
    bch.add_argument("--out", default="bench.csv", help="CSV output path")
    return parser


def _read_text(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise formats.FormatError(f"cannot read {path}: {exc}") from exc


def cmd_gen(args) -> int:
    try:
        cfg = GenConfig(
            seed=args.seed,
            n=args.n,
            num_departments=args.departments,
            compat_min=args.compat_min,
            compat_max=args.compat_max,
            density=args.density,
        )
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    instance = gen_hospital(cfg) if args.kind == "hospital" else gen_conflict_graph(cfg)
    with open(args.out, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(formats.dumps(formats.instance_to_dict(instance)))
    print(f"wrote {args.kind} instance (n={args.n}) to {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_solve(args) -> int:
    try:
        kind, instance = formats.parse_instance(_read_text(args.instance))
    except formats.FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    algorithm = args.algorithm or ("flow" if kind == "hospital" else "wp")
    if kind == "hospital":
        if algorithm != "flow":
            print(f"error: algorithm {algorithm!r} does not apply to hospital instances", file=sys.stderr)
            return EXIT_USAGE
        assignment = solve(instance)
        sys.stdout.write(formats.dumps(formats.assignment_to_dict(assignment)))
        return EXIT_OK
    solvers = {"wp": welsh_powell, "dsatur": dsatur, "exact": exact_coloring}
    if algorithm not in solvers:
        print(f"error: algorithm {algorithm!r} does not apply to courses instances", file=sys.stderr)
        return EXIT_USAGE
    try:
        coloring = solvers[algorithm](instance)
    except GuardError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    sys.stdout.write(formats.dumps(formats.schedule_to_dict(coloring)))
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        inst_kind, instance = formats.parse_instance(_read_text(args.instance))
        sol_kind, solution = formats.parse_solution(_read_text(args.solution))
    except formats.FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    pairs = {"hospital": "hospital_solution", "courses": "schedule"}
    if pairs[inst_kind] != sol_kind:
        print(
            f"error: {sol_kind!r} solution does not match {inst_kind!r} instance",
            file=sys.stderr,
        )
        return EXIT_USAGE
    if inst_kind == "hospital":
        report = validate(instance, solution)
    else:
        report = validate_coloring(instance, solution)
    print(report)
    return EXIT_OK if report.ok else EXIT_INVALID


def _print_flow_summary(rows) -> None:
    print(f"{'n':>6}  {'mean time (s)':>14}  {'mean matching':>14}")
    for row in rows:
        stats = row["flow"]
        print(f"{row['n']:>6}  {stats['mean_seconds']:>14.6f}  {stats['mean_quality']:>14.1f}")


def _print_coloring_summary(rows) -> None:
    print(
        f"{'n':>6}  {'wp time (s)':>12}  {'dsatur time (s)':>16}  "
        f"{'wp colors':>10}  {'dsatur colors':>14}  {'max deg':>8}"
    )
    for row in rows:
        wp, ds = row["wp"], row["dsatur"]
        print(
            f"{row['n']:>6}  {wp['mean_seconds']:>12.6f}  {ds['mean_seconds']:>16.6f}  "
            f"{wp['mean_quality']:>10.1f}  {ds['mean_quality']:>14.1f}  "
            f"{wp['mean_delta']:>8.1f}"
        )


def cmd_bench(args) -> int:
    try:
        if args.suite == "flow":
            sizes = args.sizes or list(bench.FLOW_SIZES)
            records = bench.time_flow_suite(sizes, args.trials, args.seed)
            algorithms = ["flow"]
        else:
            sizes = args.sizes or list(bench.COLORING_SIZES)
            records = bench.time_coloring_suite(sizes, args.trials, args.density, args.seed)
            algorithms = ["wp", "dsatur"]
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    with open(args.out, "w", encoding="utf-8", newline="\n") as handle:
        bench.write_csv(records, handle)
    rows = bench.summarize(records)
    if args.suite == "flow":
        _print_flow_summary(rows)
    else:
        _print_coloring_summary(rows)
    status = EXIT_OK
    for algorithm in algorithms:
        try:
            fit = bench.loglog_slope(records, algorithm)
        except bench.RegressionError as exc:
            print(f"error: {exc}", file=sys.stderr)
            status = EXIT_BENCH
            continue
        print(f"slope[{algorithm}] = {fit.slope:.3f} (r^2 = {fit.r_squared:.4f})")
    print(f"wrote {len(records)} records to {args.out}", file=sys.stderr)
    return status


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {"gen": cmd_gen, "solve": cmd_solve, "verify": cmd_verify, "bench": cmd_bench}
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
