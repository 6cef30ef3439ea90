"""Builders that turn an array into a neighbor-comparison graph.

construct_graph compares every position with its next `reach` cyclic
neighbors and stores one oriented arc per compared pair.  Comparing only
to the right is enough: the wrap-around makes the left neighbors someone
else's right neighbors.  At the largest legal reach, half the array
length, the graph is saturated and no further pair could contribute an
arc.  construct_pairs instead links only positions (1,2), (3,4), ...,
seeding the half-sized components the pair-merging sorter starts from.
"""
from __future__ import annotations

import warnings
from typing import Sequence

from .errors import ParameterError
from .graph_core import ComparisonGraph, build_keys


def construct_graph(values: Sequence[float], reach: int) -> ComparisonGraph:
    """Graph with one oriented arc per (position, k-th right cyclic neighbor) pair.

    Performs exactly n * reach counted key comparisons for n >= 2.  A reach
    beyond n // 2 would re-compare pairs from both sides, so it is clamped
    to n // 2 with a warning; a reach below 1 is an error.  A one-element
    array yields the single-vertex null graph.
    """
    n = len(values)
    if n == 0:
        raise ParameterError("cannot build a graph from an empty array")
    g = ComparisonGraph(n, build_keys(values))
    if n == 1:
        return g
    cap = n // 2
    if reach < 1:
        raise ParameterError(f"reach must be at least 1, got {reach}")
    if reach > cap:
        warnings.warn(f"reach {reach} exceeds n//2={cap}; clamped", stacklevel=2)
        reach = cap
    for i in range(1, n + 1):
        for k in range(1, reach + 1):
            j = (i + k - 1) % n + 1
            if g.key_less(i, j):
                g.add_arc(i, j)
            else:
                g.add_arc(j, i)
    return g


def construct_complete(values: Sequence[float]) -> ComparisonGraph:
    """Saturated graph: reach n // 2, every pair compared, m = n(n-1)/2."""
    n = len(values)
    return construct_graph(values, max(1, n // 2))


def construct_pairs(values: Sequence[float]) -> ComparisonGraph:
    """One oriented arc per consecutive pair (1,2), (3,4), ...; no wrap arc.

    A trailing odd element stays isolated, so the result always has
    ceil(n/2) components, each a single arc or a lone vertex.
    """
    n = len(values)
    if n == 0:
        raise ParameterError("cannot build a graph from an empty array")
    g = ComparisonGraph(n, build_keys(values))
    for t in range(1, n // 2 + 1):
        u, v = 2 * t - 1, 2 * t
        if g.key_less(u, v):
            g.add_arc(u, v)
        else:
            g.add_arc(v, u)
    return g
