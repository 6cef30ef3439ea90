"""Zipper merges that stitch chain-covered components together.

merge_paths interleaves two vertex-disjoint ascending chains: at each
step the smaller-key cursor gains an arc to the larger-key cursor and
then advances along its own chain.  Afterwards the union of the two
chains lies on a single ascending chain headed by the smaller head, and
the graph is still a comparison graph.

merge_sub_trees repairs first-forest trees whose root kept two branches
(the only branching a reach-one graph allows); merge_trees then folds
consecutive chain components together in pairs, halving the component
count each round.
"""
from __future__ import annotations

from typing import Sequence

from .errors import ParameterError, StructuralError
from .graph_core import ComparisonGraph


def merge_paths(h: ComparisonGraph, x: int, y: int) -> None:
    """Zipper-merge the two disjoint chains headed by x and y.

    Adds at most len(chain x) + len(chain y) - 1 arcs and performs exactly
    one counted key comparison per arc attempt.
    """
    if x == y:
        raise StructuralError("chain heads must be distinct vertices")
    u, v = x, y
    while u is not None and v is not None:
        if u == v:
            raise StructuralError(f"chains share vertex {u}; merge requires disjoint chains")
        # Advance along the pre-insertion head: inserting the cross arc first
        # could make the other cursor the new minimum and hijack the walk.
        if h.key_less(u, v):
            nxt = h.min_out_neighbor(u)
            h.add_arc(u, v)
            u = nxt
        else:
            nxt = h.min_out_neighbor(v)
            h.add_arc(v, u)
            v = nxt


def merge_sub_trees(h: ComparisonGraph, roots: Sequence[int]) -> None:
    """Merge the two root branches of every first-forest tree that has them.

    Expects the forest of a reach-one construction, where non-root vertices
    keep at most one child; a root with more than two branches means the
    input was not such a forest.  Roots themselves stay unchanged.
    """
    for r in roots:
        row = h.adj[r]
        if len(row) > 2:
            raise StructuralError(
                f"root {r} has out-degree {len(row)}; not a reach-one forest"
            )
        if len(row) == 2:
            merge_paths(h, row[0], row[1])


def merge_trees(h: ComparisonGraph, roots: Sequence[int]) -> list[int]:
    """Merge components (1,2), (3,4), ... and return the surviving heads.

    Each pair keeps its smaller-key root; a trailing odd component passes
    through untouched, so the result has ceil(len(roots) / 2) entries and
    every new component again carries a spanning ascending chain.
    """
    if not roots:
        raise ParameterError("merge_trees needs at least one root")
    survivors: list[int] = []
    k = len(roots)
    for j in range(0, k - 1, 2):
        p, q = roots[j], roots[j + 1]
        survivors.append(p if h.key_less(p, q) else q)
        merge_paths(h, p, q)
    if k % 2:
        survivors.append(roots[-1])
    h.metrics.merge_rounds += 1
    return survivors
