"""Command-line front end: sort files, run benchmarks, dump graph stages.

Usage:
    graphsort sort <file> [--algorithm trivial|graph|graph-merge] [--out FILE]
    graphsort bench --algorithm ALGO --sizes SIZES [--distribution D]
                    [--seed S] [--trials T] [--visit-order ORDER]
    graphsort inspect <file> [--algorithm ALGO] [--out-dir DIR] [--max-n N]

Input files hold one decimal number per line (scientific notation is
fine, NaN is refused).  sort reorders the original tokens, it never
reformats them, so stability is visible byte for byte.  bench writes one
CSV row per (n, trial) to stdout; sizes accept plain integers, comma
lists, and power ranges like 2^8..2^16.  inspect writes one DOT file per
pipeline stage with newly added merge arcs drawn bold.

--shuffle-visits SEED randomizes the first search's visit order for the
graph algorithm; --visit-order sweep forces the plain 1..n order instead
of the default minimum-first order.

Exit codes: 0 success, 1 usage or configuration, 2 unreadable or
unparsable input, 3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import csv
import math
import random
import re
import sys
import time
from pathlib import Path
from typing import Callable, Sequence

from .errors import ParameterError, ParseError, StructuralError
from .graph_core import ComparisonGraph
from .sort import SortOutcome, graph_merge_sort, graph_sort, trivial_graph_sort

ALGORITHMS = ("trivial", "graph", "graph-merge", "reference")
DISTRIBUTIONS = ("random", "sorted", "reverse", "partial", "duplicates")
TRIVIAL_SIZE_CAP = 4096  # quadratic arc count; refuse silly sizes
INSPECT_DEFAULT_MAX_N = 200

CSV_COLUMNS = (
    "algorithm",
    "n",
    "distribution",
    "seed",
    "comparisons",
    "arcs_added",
    "dfs_traversals",
    "merge_rounds",
    "first_forest_components",
    "wall_time_ns",
)


# ---- input files -----------------------------------------------------------

def read_value_file(path: str) -> tuple[list[str], list[float]]:
    """Tokens and parsed values from a newline-separated decimal file."""
    tokens: list[str] = []
    values: list[float] = []
    with open(path, "r", encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, start=1):
            token = raw.strip()
            if not token:
                raise ParseError(path, line_no, "blank line where a number was expected")
            try:
                value = float(token)
            except ValueError:
                raise ParseError(path, line_no, f"not a decimal number: {token!r}") from None
            if math.isnan(value):
                raise ParseError(path, line_no, "NaN is not totally ordered and is refused")
            tokens.append(token)
            values.append(value)
    return tokens, values


# ---- benchmark inputs ------------------------------------------------------

def make_input(distribution: str, n: int, rng: random.Random) -> list[float]:
    """Seeded benchmark array of size n for one of the named distributions."""
    if distribution == "random":
        return [rng.random() for _ in range(n)]
    if distribution == "sorted":
        return sorted(rng.random() for _ in range(n))
    if distribution == "reverse":
        return sorted((rng.random() for _ in range(n)), reverse=True)
    if distribution == "partial":
        xs = sorted(rng.random() for _ in range(n))
        if n >= 2:
            for _ in range(n // 20):
                i = rng.randrange(n - 1)
                xs[i], xs[i + 1] = xs[i + 1], xs[i]
        return xs
    if distribution == "duplicates":
        return [float(rng.randrange(16)) for _ in range(n)]
    raise ParameterError(f"unknown distribution {distribution!r}")


def parse_sizes(text: str) -> list[int]:
    """Size list from arguments like '100', '8,16,32', '2^8..2^16', or a mix."""
    sizes: list[int] = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        span = re.fullmatch(r"(\d+)\^(\d+)\.\.(\d+)\^(\d+)", item)
        if span:
            base_a, exp_a, base_b, exp_b = (int(x) for x in span.groups())
            if base_a != base_b or base_a < 2 or exp_a > exp_b:
                raise ParameterError(f"bad size range {item!r}")
            sizes.extend(base_a**e for e in range(exp_a, exp_b + 1))
            continue
        power = re.fullmatch(r"(\d+)\^(\d+)", item)
        if power:
            sizes.append(int(power.group(1)) ** int(power.group(2)))
            continue
        if not item.isdigit():
            raise ParameterError(f"bad size {item!r}")
        sizes.append(int(item))
    if not sizes or any(n < 1 for n in sizes):
        raise ParameterError(f"size argument {text!r} yields no positive sizes")
    return sizes


class _ComparisonCounterCell:
    __slots__ = ("count",)

    def __init__(self) -> None:
        self.count = 0


class _CountedValue:
    """Wrapper so the platform sort's comparisons can be tallied."""

    __slots__ = ("value", "cell")

    def __init__(self, value: float, cell: _ComparisonCounterCell):
        self.value = value
        self.cell = cell

    def __lt__(self, other: "_CountedValue") -> bool:
        self.cell.count += 1
        return self.value < other.value


def _run_reference(values: Sequence[float]) -> tuple[list[int], int, int]:
    """Stable platform sort: (1-based permutation, comparisons, wall ns)."""
    cell = _ComparisonCounterCell()
    keyed = [_CountedValue(v, cell) for v in values]
    t0 = time.perf_counter_ns()
    order = sorted(range(len(values)), key=keyed.__getitem__)
    wall = time.perf_counter_ns() - t0
    return [i + 1 for i in order], cell.count, wall


def _first_visit_for(args: argparse.Namespace, n: int) -> list[int] | None:
    if getattr(args, "shuffle_visits", None) is not None:
        order = list(range(1, n + 1))
        random.Random(args.shuffle_visits).shuffle(order)
        return order
    if getattr(args, "visit_order", "min-first") == "sweep":
        return list(range(1, n + 1))
    return None


def run_algorithm(
    name: str,
    values: Sequence[float],
    args: argparse.Namespace,
    observer: Callable | None = None,
) -> SortOutcome:
    if name == "trivial":
        return trivial_graph_sort(values, observer=observer)
    if name == "graph":
        return graph_sort(values, first_visit=_first_visit_for(args, len(values)), observer=observer)
    if name == "graph-merge":
        return graph_merge_sort(values, observer=observer)
    raise ParameterError(f"unknown algorithm {name!r}")


# ---- DOT rendering ---------------------------------------------------------

def graph_to_dot(
    stage: str,
    g: ComparisonGraph,
    labels: Sequence[str],
    new_arcs: set[tuple[int, int]] | None,
) -> str:
    """Graphviz text for one stage; arcs added by this stage are drawn bold."""
    lines = [f'digraph "{stage}" {{', "  rankdir=LR;"]
    for v in range(1, g.n + 1):
        text = labels[v - 1].replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  v{v} [label="{text}"];')
    for u, v in g.arcs():
        style = " [penwidth=2]" if new_arcs and (u, v) in new_arcs else ""
        lines.append(f"  v{u} -> v{v}{style};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---- subcommands -----------------------------------------------------------

def cmd_sort(args: argparse.Namespace) -> int:
    tokens, values = read_value_file(args.input)
    outcome = run_algorithm(args.algorithm, values, args)
    text = "".join(tokens[i - 1] + "\n" for i in outcome.permutation)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def cmd_bench(args: argparse.Namespace) -> int:
    sizes = parse_sizes(args.sizes)
    if args.trials < 1:
        raise ParameterError("trials must be at least 1")
    if args.algorithm == "trivial":
        oversized = [n for n in sizes if n > TRIVIAL_SIZE_CAP]
        if oversized:
            raise ParameterError(
                f"trivial builds n(n-1)/2 arcs and is refused above n={TRIVIAL_SIZE_CAP}; got {oversized}"
            )
    writer = csv.writer(sys.stdout)
    writer.writerow(CSV_COLUMNS)
    for n in sizes:
        for trial in range(args.trials):
            rng = random.Random(f"{args.seed}:{args.distribution}:{n}:{trial}")
            values = make_input(args.distribution, n, rng)
            if args.algorithm == "reference":
                _, comparisons, wall = _run_reference(values)
                row = [args.algorithm, n, args.distribution, args.seed, comparisons, 0, 0, 0, 0, wall]
            else:
                t0 = time.perf_counter_ns()
                outcome = run_algorithm(args.algorithm, values, args)
                wall = time.perf_counter_ns() - t0
                m = outcome.metrics
                row = [
                    args.algorithm,
                    n,
                    args.distribution,
                    args.seed,
                    m.comparisons,
                    m.arcs_added,
                    m.dfs_arc_traversals,
                    m.merge_rounds,
                    outcome.first_forest_components,
                    wall,
                ]
            writer.writerow(row)
    return 0


def cmd_inspect(args: argparse.Namespace) -> int:
    tokens, values = read_value_file(args.input)
    n = len(values)
    if n > args.max_n:
        raise ParameterError(
            f"{n} vertices would render unreadably; raise --max-n (currently {args.max_n}) to force"
        )
    stages: list[tuple[str, str]] = []

    def observer(stage: str, g: ComparisonGraph, new_arcs: set[tuple[int, int]] | None) -> None:
        stages.append((stage, graph_to_dot(stage, g, tokens, new_arcs)))

    run_algorithm(args.algorithm, values, args, observer=observer)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for idx, (stage, text) in enumerate(stages):
        (out_dir / f"{idx:02d}-{stage}.dot").write_text(text, encoding="utf-8")
    print(f"wrote {len(stages)} stage files to {out_dir}", file=sys.stderr)
    return 0


# ---- argument plumbing -----------------------------------------------------

class _Parser(argparse.ArgumentParser):
    # usage problems are exit code 1; argparse defaults to 2 which this
    # tool reserves for unparsable input files
    def error(self, message: str) -> None:  # type: ignore[override]
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_visit_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--shuffle-visits",
        type=int,
        metavar="SEED",
        default=None,
        help="randomize the first search's visit order (graph algorithm only)",
    )
    sub.add_argument(
        "--visit-order",
        choices=("min-first", "sweep"),
        default="min-first",
        help="first search visit order: start at the minimum (default) or sweep 1..n",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="graphsort", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    commands = parser.add_subparsers(dest="command", required=True)

    p_sort = commands.add_parser("sort", help="sort a numeric file")
    p_sort.add_argument("input")
    p_sort.add_argument("--algorithm", choices=ALGORITHMS[:3], default="graph")
    p_sort.add_argument("--out", default=None)
    _add_visit_flags(p_sort)
    p_sort.set_defaults(func=cmd_sort)

    p_bench = commands.add_parser("bench", help="run instrumented benchmarks, CSV to stdout")
    p_bench.add_argument("--algorithm", choices=ALGORITHMS, required=True)
    p_bench.add_argument("--sizes", required=True, help="e.g. 1000 or 2^8..2^16 or 64,128")
    p_bench.add_argument("--distribution", choices=DISTRIBUTIONS, default="random")
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument("--trials", type=int, default=1)
    _add_visit_flags(p_bench)
    p_bench.set_defaults(func=cmd_bench)

    p_inspect = commands.add_parser("inspect", help="write DOT snapshots of every pipeline stage")
    p_inspect.add_argument("input")
    p_inspect.add_argument("--algorithm", choices=ALGORITHMS[:3], default="graph")
    p_inspect.add_argument("--out-dir", default="stages")
    p_inspect.add_argument("--max-n", type=int, default=INSPECT_DEFAULT_MAX_N)
    _add_visit_flags(p_inspect)
    p_inspect.set_defaults(func=cmd_inspect)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        if code is None:
            return 0
        return code if isinstance(code, int) else 1
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"graphsort: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"graphsort: {exc}", file=sys.stderr)
        return 2
    except ParameterError as exc:
        print(f"graphsort: {exc}", file=sys.stderr)
        return 1
    except StructuralError as exc:
        print(f"graphsort: internal invariant violated: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
