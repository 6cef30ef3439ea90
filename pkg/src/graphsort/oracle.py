"""Brute-force validators for the structural claims the sorters rely on.

Everything here is deliberately naive: exhaustive enumeration, full
scans, no shortcuts shared with the production code paths.  These
functions are the ground truth the test suite measures the fast
implementations against, so they must stay independent of them.

Guards keep the factorial enumerations to sizes where the whole oracle
battery finishes in seconds:

    enumerate_topological_sorts  n <= 12
    count_hamiltonian_paths      n <= 10
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ParameterError
from .graph_core import ComparisonGraph

TOPO_SORT_VERTEX_LIMIT = 12
HAMILTONIAN_VERTEX_LIMIT = 10


@dataclass
class TopoSortSet:
    """All topological sorts of a small graph plus its trueness.

    trueness counts the positions that are not pinned to a single vertex
    across every valid order; a graph whose order is unique has trueness 1
    (all vertices pinned counts as one, by convention).  When the cap cut
    enumeration short, truncated is set and trueness covers only the sorts
    that were found.
    """

    sorts: list[tuple[int, ...]]
    trueness: int
    truncated: bool = False


def is_acyclic(g: ComparisonGraph) -> bool:
    """True iff the graph has no directed cycle (checked by peeling sources)."""
    n = g.n
    indeg = [0] * (n + 1)
    for _, v in g.arcs():
        indeg[v] += 1
    queue = [v for v in range(1, n + 1) if indeg[v] == 0]
    seen = 0
    while queue:
        u = queue.pop()
        seen += 1
        for w in g.adj[u]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return seen == n


def is_valid_comparison_graph(g: ComparisonGraph) -> bool:
    """True iff every arc ascends in key order and every list is sorted, duplicate-free."""
    total = 0
    for u in range(1, g.n + 1):
        row = g.adj[u]
        total += len(row)
        ku = g.keys[u]
        for v in row:
            if not ku < g.keys[v]:
                return False
        for a, b in zip(row, row[1:]):
            if not g.keys[a] < g.keys[b]:
                return False
    return total == g.m


def enumerate_topological_sorts(g: ComparisonGraph, cap: int = 50_000) -> TopoSortSet:
    """Every vertex order with no backward arc, found by exhaustive backtracking.

    Raises ParameterError above the vertex limit; stops early (setting
    truncated) once cap sorts have been collected.
    """
    n = g.n
    if n > TOPO_SORT_VERTEX_LIMIT:
        raise ParameterError(
            f"topological sort enumeration is guarded to n <= {TOPO_SORT_VERTEX_LIMIT}, got {n}"
        )
    if cap < 1:
        raise ParameterError("cap must be positive")
    indeg = [0] * (n + 1)
    for _, v in g.arcs():
        indeg[v] += 1
    used = [False] * (n + 1)
    seq: list[int] = []
    sorts: list[tuple[int, ...]] = []
    truncated = False

    def extend() -> None:
        nonlocal truncated
        if truncated:
            return
        if len(seq) == n:
            sorts.append(tuple(seq))
            if len(sorts) >= cap:
                truncated = True
            return
        for v in range(1, n + 1):
            if not used[v] and indeg[v] == 0:
                used[v] = True
                seq.append(v)
                for w in g.adj[v]:
                    indeg[w] -= 1
                extend()
                for w in g.adj[v]:
                    indeg[w] += 1
                seq.pop()
                used[v] = False
                if truncated:
                    return

    extend()
    unfixed = 0
    for column in zip(*sorts):
        if len(set(column)) > 1:
            unfixed += 1
    trueness = unfixed if unfixed else 1
    return TopoSortSet(sorts, trueness, truncated)


def count_hamiltonian_paths(g: ComparisonGraph) -> int:
    """Exact count of directed paths visiting every vertex, by backtracking.

    Any graph built through this package yields 0 or 1; the count is exact
    either way so corrupted inputs are detectable too.
    """
    n = g.n
    if n > HAMILTONIAN_VERTEX_LIMIT:
        raise ParameterError(
            f"path counting is guarded to n <= {HAMILTONIAN_VERTEX_LIMIT}, got {n}"
        )
    if n == 0:
        return 0
    used = [False] * (n + 1)
    count = 0

    def extend(v: int, depth: int) -> None:
        nonlocal count
        if depth == n:
            count += 1
            return
        for w in g.adj[v]:
            if not used[w]:
                used[w] = True
                extend(w, depth + 1)
                used[w] = False

    for s in range(1, n + 1):
        used[s] = True
        extend(s, 1)
        used[s] = False
    return count


def _component_labels(g: ComparisonGraph) -> list[int]:
    """Connected-component label per vertex, direction ignored."""
    n = g.n
    neighbors: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in g.arcs():
        neighbors[u].append(v)
        neighbors[v].append(u)
    label = [0] * (n + 1)
    current = 0
    for s in range(1, n + 1):
        if label[s]:
            continue
        current += 1
        stack = [s]
        label[s] = current
        while stack:
            u = stack.pop()
            for w in neighbors[u]:
                if not label[w]:
                    label[w] = current
                    stack.append(w)
    return label


def count_undirected_components(g: ComparisonGraph) -> int:
    """Number of connected components of the underlying undirected graph."""
    labels = _component_labels(g)
    return max(labels[1:], default=0)


def component_hamiltonian_check(g: ComparisonGraph, roots: Sequence[int]) -> bool:
    """True iff each root's smallest-neighbor walk covers its whole component.

    The walk must visit every vertex of the root's undirected component
    exactly once, in strictly ascending key order.  This is the property
    the merge rounds promise and the chain-walk search depends on.
    """
    labels = _component_labels(g)
    members: dict[int, set[int]] = {}
    for v in range(1, g.n + 1):
        members.setdefault(labels[v], set()).add(v)
    for r in roots:
        g._check_vertex(r)
        walked: set[int] = set()
        v: int | None = r
        prev_key = None
        while v is not None:
            if v in walked:
                return False
            key = g.keys[v]
            if prev_key is not None and not prev_key < key:
                return False
            prev_key = key
            walked.add(v)
            row = g.adj[v]
            v = row[0] if row else None
        if walked != members[labels[r]]:
            return False
    return True
