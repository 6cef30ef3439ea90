"""Shared fixtures and small oracles used across the test modules."""
from __future__ import annotations

import random
from typing import Sequence

from graphsort import (
    ComparisonGraph,
    build_keys,
    construct_graph,
    dfs_iterative,
    dfs_replace,
    find_min,
    find_roots,
    merge_sub_trees,
    merge_trees,
)

# The worked seven-element example used throughout the golden tests.
EXAMPLE_ARRAY = [3.5, 2, 9, 11, 1, -2.2, 5]
EXAMPLE_SORTED = [-2.2, 1, 2, 3.5, 5, 9, 11]

# A hand-built first forest of two trees; the left tree's root kept two
# branches, the right tree is already a chain.
TWO_TREE_VALUES = [-2.2, 9, 1, 11, 2, 3.5, 10.5, 10]
TWO_TREE_ARCS = [(1, 2), (1, 3), (2, 4), (3, 8), (5, 6), (6, 7)]
TWO_TREE_ROOTS = [1, 5]


def build_graph(values: Sequence[float], arcs: Sequence[tuple[int, int]]) -> ComparisonGraph:
    g = ComparisonGraph(len(values), build_keys(values))
    for u, v in arcs:
        assert g.add_arc(u, v)
    return g


def reference_argsort(values: Sequence[float]) -> list[int]:
    """Stable 1-based argsort via the platform sort; the correctness oracle."""
    return [i + 1 for i in sorted(range(len(values)), key=lambda i: values[i])]


def values_with_duplicates(rng: random.Random, n: int, alphabet: int = 8) -> list[float]:
    return [float(rng.randrange(alphabet)) for _ in range(n)]


def graph_sort_stages(values: Sequence[float], first_visit: Sequence[int] | None = None):
    """Replay the merge-loop sorter, yielding (stage, graph, roots) tuples.

    Mirrors graph_sort exactly so structural checks can probe every
    intermediate graph; the final yield carries the finished search run
    in place of the roots list.
    """
    g = construct_graph(values, 1)
    yield "construct", g, None
    n = len(values)
    if first_visit is None:
        visit = [find_min(values)] + list(range(1, n + 1))
    else:
        visit = list(first_visit)
    run = dfs_replace(g, visit)
    roots = find_roots(run)
    yield "forest0", g, roots
    before = g.m
    merge_sub_trees(g, roots)
    yield "subtrees", g, roots
    if len(roots) == 1:
        if g.m != before:
            run = dfs_iterative(g, roots)
    else:
        while len(roots) > 1:
            roots = merge_trees(g, roots)
            yield "merged", g, roots
            run = dfs_iterative(g, roots)
            yield "forest", g, roots
    yield "final", g, run
