"""Depth-first search that replaces a comparison graph with its forest.

All variants explore children in adjacency order (ascending key), record
parent pointers and start/finish timestamps, and return the vertices
ordered by decreasing finish time.  That order is a topological sort of
the searched graph, and once the graph carries a spanning chain per
component it is the sorted order itself.  After the search the graph's
adjacency lists are rewritten to hold only the traversed tree arcs, so
the object becomes its own forest.

Three implementations with identical observable behavior:

* dfs_replace: the general production search, driven by an explicit
  stack so arbitrarily long chains cannot exhaust the interpreter's
  recursion budget.
* dfs_iterative: a specialization for graphs whose every component
  contains a spanning chain headed by a known root.  It never needs to
  back-track or test visitedness along the way; it just hops to the
  smallest out-neighbor until it falls off the end of the chain.
* dfs_recursive: the textbook recursive routine, kept as an independent
  reference for equivalence testing on small graphs.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import StructuralError
from .graph_core import ComparisonGraph


@dataclass
class DfsRun:
    """Bookkeeping of one search: tree structure, timestamps, output order.

    stack holds the vertices by decreasing finish time; no arc of the
    searched graph points from a later stack position to an earlier one.
    roots lists the parentless vertices in discovery order, which fixes
    the pairing order of the merge rounds.
    """

    parent: list[Optional[int]]
    start: list[int]
    finish: list[int]
    stack: list[int]
    visit_list: tuple[int, ...]
    roots: list[int]


def find_roots(run: DfsRun) -> list[int]:
    """Parentless vertices of the last search, in discovery order."""
    return list(run.roots)


def _finish_run(
    g: ComparisonGraph,
    visited: list[bool],
    parent: list[Optional[int]],
    start: list[int],
    finish: list[int],
    finish_order: list[int],
    tree: list[list[int]],
    visit_list: Sequence[int],
    roots: list[int],
) -> DfsRun:
    missing = [v for v in range(1, g.n + 1) if not visited[v]]
    if missing:
        raise StructuralError(
            f"visit list left {len(missing)} vertices unreached, first few: {missing[:5]}"
        )
    for v in range(1, g.n + 1):
        g.adj[v] = tree[v]
    g.m = g.n - len(roots)
    finish_order.reverse()
    return DfsRun(parent, start, finish, finish_order, tuple(visit_list), roots)


def dfs_replace(g: ComparisonGraph, visit_list: Sequence[int]) -> DfsRun:
    """Search from visit_list entries in order; replace g with its forest.

    The visit list must make every vertex reachable (the full sweep
    1..n always does); otherwise the graph is left untouched and a
    StructuralError reports the gap.
    """
    n = g.n
    visited = [False] * (n + 1)
    parent: list[Optional[int]] = [None] * (n + 1)
    start = [0] * (n + 1)
    finish = [0] * (n + 1)
    finish_order: list[int] = []
    tree: list[list[int]] = [[] for _ in range(n + 1)]
    roots: list[int] = []
    clock = 0
    for s in visit_list:
        g._check_vertex(s)
        if visited[s]:
            continue
        roots.append(s)
        visited[s] = True
        clock += 1
        start[s] = clock
        frames: list[tuple[int, int]] = [(s, 0)]  # (vertex, next adjacency slot)
        while frames:
            v, pos = frames[-1]
            row = g.adj[v]
            descended = False
            while pos < len(row):
                w = row[pos]
                pos += 1
                if not visited[w]:
                    frames[-1] = (v, pos)
                    visited[w] = True
                    parent[w] = v
                    tree[v].append(w)
                    g.metrics.dfs_arc_traversals += 1
                    clock += 1
                    start[w] = clock
                    frames.append((w, 0))
                    descended = True
                    break
            if not descended:
                frames.pop()
                clock += 1
                finish[v] = clock
                finish_order.append(v)
    return _finish_run(g, visited, parent, start, finish, finish_order, tree, visit_list, roots)


def dfs_iterative(g: ComparisonGraph, roots: Sequence[int]) -> DfsRun:
    """Chain-walk search for graphs whose components all carry spanning chains.

    Every component must contain a chain that visits all its vertices in
    ascending key order and starts at its entry in roots; the merge rounds
    guarantee exactly that.  The walk hops min_out_neighbor to min_out_neighbor,
    so its recursion depth is constant regardless of chain length.  The
    observable result matches dfs_replace(g, roots) exactly.
    """
    n = g.n
    visited = [False] * (n + 1)
    parent: list[Optional[int]] = [None] * (n + 1)
    start = [0] * (n + 1)
    finish = [0] * (n + 1)
    finish_order: list[int] = []
    tree: list[list[int]] = [[] for _ in range(n + 1)]
    clock = 0
    for r in roots:
        g._check_vertex(r)
        if visited[r]:
            raise StructuralError(f"root {r} lies in a component already walked")
        path: list[int] = []
        prev: Optional[int] = None
        v: Optional[int] = r
        while v is not None:
            if visited[v]:
                raise StructuralError(
                    f"walk from root {r} reentered vertex {v}; components are not chain-covered"
                )
            visited[v] = True
            clock += 1
            start[v] = clock
            path.append(v)
            if prev is not None:
                parent[v] = prev
                tree[prev].append(v)
                g.metrics.dfs_arc_traversals += 1
            prev = v
            row = g.adj[v]
            v = row[0] if row else None
        for v in reversed(path):
            clock += 1
            finish[v] = clock
            finish_order.append(v)
    return _finish_run(
        g, visited, parent, start, finish, finish_order, tree, roots, list(roots)
    )


def dfs_recursive(g: ComparisonGraph, visit_list: Sequence[int]) -> DfsRun:
    """Textbook recursive search; reference implementation for small graphs.

    Recursion depth grows with the longest chain, so keep this to modest
    sizes; production code paths use the stack-driven variants above.
    """
    n = g.n
    visited = [False] * (n + 1)
    parent: list[Optional[int]] = [None] * (n + 1)
    start = [0] * (n + 1)
    finish = [0] * (n + 1)
    finish_order: list[int] = []
    tree: list[list[int]] = [[] for _ in range(n + 1)]
    roots: list[int] = []
    clock = 0

    def visit(v: int) -> None:
        nonlocal clock
        visited[v] = True
        clock += 1
        start[v] = clock
        for w in g.adj[v]:
            if not visited[w]:
                parent[w] = v
                tree[v].append(w)
                g.metrics.dfs_arc_traversals += 1
                visit(w)
        clock += 1
        finish[v] = clock
        finish_order.append(v)

    for s in visit_list:
        g._check_vertex(s)
        if not visited[s]:
            roots.append(s)
            visit(s)
    return _finish_run(g, visited, parent, start, finish, finish_order, tree, visit_list, roots)
