"""The three end-to-end sorters plus their small helpers.

Every sorter follows the same scheme: encode the array as a comparison
graph, manipulate the graph until a single component carries a chain
through all vertices, then read the sorted order off the final search
stack.  They differ only in how the graph starts out:

* trivial_graph_sort saturates the graph up front (quadratic arcs) so
  one search from the minimum suffices.
* graph_sort starts from the reach-one graph, searches once, then
  alternates merge rounds and searches until one component remains.
* graph_merge_sort seeds with consecutive-pair arcs, fixing the starting
  component count at ceil(n/2), and runs the same merge loop.

All outputs are stable: equal values keep their original order because
keys tie-break on the original index.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .construct import construct_complete, construct_graph, construct_pairs
from .dfs import DfsRun, dfs_iterative, dfs_replace, find_roots
from .errors import ParameterError, StructuralError
from .graph_core import ComparisonGraph, Metrics
from .merge import merge_sub_trees, merge_trees

# Called as observer(stage_label, graph, newly_added_arcs_or_None) after
# each pipeline stage; used by the CLI to snapshot intermediate graphs.
Observer = Callable[[str, ComparisonGraph, Optional[set[tuple[int, int]]]], None]


@dataclass
class RoundSnapshot:
    """Per-merge-round accounting: survivors and what the round cost."""

    components: int
    arcs_added: int
    comparisons: int
    roots: list[int] = field(default_factory=list)


@dataclass
class SortOutcome:
    """Everything a sorter run produced, counters and trajectory included."""

    output: list[float]
    permutation: list[int]
    metrics: Metrics
    rounds: list[RoundSnapshot]
    first_forest_components: int
    first_forest_roots: list[int]
    construction_arcs: int


def find_min(values: Sequence[float]) -> int:
    """1-based index of the minimum value; first occurrence wins ties."""
    if not values:
        raise ParameterError("empty array has no minimum")
    return min(range(1, len(values) + 1), key=lambda i: values[i - 1])


def to_array(values: Sequence[float], order: Sequence[int]) -> list[float]:
    """Array re-read through a permutation of 1..n."""
    n = len(values)
    if sorted(order) != list(range(1, n + 1)):
        raise StructuralError("index sequence is not a permutation of 1..n")
    return [values[i - 1] for i in order]


def _empty_outcome() -> SortOutcome:
    return SortOutcome([], [], Metrics(), [], 0, [], 0)


def _single_outcome(values: Sequence[float], g: ComparisonGraph) -> SortOutcome:
    return SortOutcome([values[0]], [1], g.metrics, [], 1, [1], g.m)


def _outcome_from_run(
    values: Sequence[float],
    g: ComparisonGraph,
    run: DfsRun,
    rounds: list[RoundSnapshot],
    first_forest_components: int,
    first_forest_roots: list[int],
    construction_arcs: int,
) -> SortOutcome:
    stack = list(run.stack)
    return SortOutcome(
        to_array(values, stack),
        stack,
        g.metrics,
        rounds,
        first_forest_components,
        first_forest_roots,
        construction_arcs,
    )


def _notify(
    observer: Observer | None,
    stage: str,
    g: ComparisonGraph,
    before: set[tuple[int, int]] | None = None,
) -> None:
    if observer is None:
        return
    new = g.arc_set() - before if before is not None else None
    observer(stage, g, new)


def _merge_until_single(
    g: ComparisonGraph,
    roots: list[int],
    rounds: list[RoundSnapshot],
    observer: Observer | None,
    base_m: int,
    base_cmp: int,
    base_arcs: set[tuple[int, int]] | None = None,
) -> DfsRun:
    """Shared merge loop: pair components, search, repeat until one root.

    base_m / base_cmp / base_arcs let the caller fold pre-loop work (the
    one-time branch repair of the first forest) into the first round's
    snapshot.
    """
    run: DfsRun | None = None
    round_no = 0
    while len(roots) > 1:
        round_no += 1
        if observer:
            before = base_arcs if base_arcs is not None else g.arc_set()
            base_arcs = None
        else:
            before = None
        roots = merge_trees(g, roots)
        _notify(observer, f"merged{round_no}", g, before)
        rounds.append(
            RoundSnapshot(
                components=len(roots),
                arcs_added=g.m - base_m,
                comparisons=g.metrics.comparisons - base_cmp,
                roots=list(roots),
            )
        )
        run = dfs_iterative(g, roots)
        _notify(observer, f"forest{round_no}", g)
        base_m = g.m
        base_cmp = g.metrics.comparisons
    assert run is not None
    return run


def trivial_graph_sort(values: Sequence[float], observer: Observer | None = None) -> SortOutcome:
    """Sort by saturating the graph and searching once from the minimum.

    Builds all n(n-1)/2 arcs, so the final search walks the full chain in
    exactly n - 1 arc traversals.  Simple and correct, but the quadratic
    construction makes it a baseline rather than a production sorter.
    """
    n = len(values)
    if n == 0:
        return _empty_outcome()
    g = construct_complete(values)
    construction_arcs = g.m
    _notify(observer, "construct", g)
    if n == 1:
        return _single_outcome(values, g)
    x = find_min(values)
    run = dfs_iterative(g, [x])
    _notify(observer, "forest0", g)
    return _outcome_from_run(values, g, run, [], 1, [x], construction_arcs)


def graph_sort(
    values: Sequence[float],
    first_visit: Sequence[int] | None = None,
    observer: Observer | None = None,
) -> SortOutcome:
    """Sort via reach-one construction, one search, then merge rounds.

    The first search starts at the minimum element and then sweeps 1..n
    for anything left over; pass first_visit to impose a different order
    (the component count of the first forest, and with it the number of
    merge rounds, depends on it).  Each merge round pairs consecutive
    components and halves their count, so the loop runs ceil(log2(k))
    times for a first forest with k components.
    """
    n = len(values)
    if n == 0:
        return _empty_outcome()
    g = construct_graph(values, 1)
    construction_arcs = g.m
    _notify(observer, "construct", g)
    if n == 1:
        return _single_outcome(values, g)
    if first_visit is None:
        visit: list[int] = [find_min(values)]
        visit.extend(range(1, n + 1))
    else:
        visit = list(first_visit)
    run = dfs_replace(g, visit)
    _notify(observer, "forest0", g)
    roots = find_roots(run)
    first_roots = list(roots)
    rounds: list[RoundSnapshot] = []
    base_m = g.m
    base_cmp = g.metrics.comparisons
    before = g.arc_set() if observer else None
    merge_sub_trees(g, roots)
    if len(roots) == 1:
        if g.m != base_m:
            # A single first-forest tree whose root kept two branches: the
            # stale stack predates the repair, so walk the chain once more.
            _notify(observer, "merged1", g, before)
            run = dfs_iterative(g, roots)
            _notify(observer, "forest1", g)
        final = run
    else:
        final = _merge_until_single(g, roots, rounds, observer, base_m, base_cmp, before)
    return _outcome_from_run(values, g, final, rounds, len(first_roots), first_roots, construction_arcs)


def graph_merge_sort(values: Sequence[float], observer: Observer | None = None) -> SortOutcome:
    """Sort from a consecutive-pairs seed through the same merge loop.

    The seed components are single arcs (plus one lone vertex when n is
    odd), so no initial search is needed: the pair winners and the odd
    vertex head the starting chains, ceil(n/2) of them on any input.
    """
    n = len(values)
    if n == 0:
        return _empty_outcome()
    g = construct_pairs(values)
    construction_arcs = g.m
    _notify(observer, "construct", g)
    if n == 1:
        return _single_outcome(values, g)
    roots: list[int] = []
    for t in range(1, n // 2 + 1):
        u, v = 2 * t - 1, 2 * t
        roots.append(u if g.adj[u] else v)
    if n % 2:
        roots.append(n)
    first_roots = list(roots)
    rounds: list[RoundSnapshot] = []
    if len(roots) == 1:
        run = dfs_iterative(g, roots)
        _notify(observer, "forest0", g)
    else:
        run = _merge_until_single(g, roots, rounds, observer, g.m, g.metrics.comparisons)
    return _outcome_from_run(values, g, run, rounds, len(first_roots), first_roots, construction_arcs)
