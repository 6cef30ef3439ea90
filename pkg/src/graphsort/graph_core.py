"""Comparison graph: vertices 1..n with value-sorted out-neighbor lists.

Every vertex carries a key (value, original index); an arc (u, v) may be
stored only when key(u) < key(v), so any graph built through this module
is acyclic by construction.  Adjacency lists are kept ascending by key,
which makes the head of a list the smallest out-neighbor.  The traversal
and merge layers lean on that head being the next vertex of the chain
contained in the current component, so the sortedness of the lists is a
load-bearing invariant, not a convenience.

The same object doubles as its own search forest: a traversal replaces
the adjacency lists with the tree arcs it walked.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterator, NamedTuple, Optional, Sequence

from .errors import OrientationError, StructuralError


class SortKey(NamedTuple):
    """Total-order key: compares by value first, original 1-based index second.

    The index tie-break turns any array, duplicates included, into a set of
    distinctly ordered vertices, and it is what makes the sorters stable.
    """

    value: float
    index: int


def build_keys(values: Sequence[float]) -> list[Optional[SortKey]]:
    """Key table for an array; slot 0 is unused so vertex i maps to keys[i]."""
    return [None] + [SortKey(v, i) for i, v in enumerate(values, start=1)]


@dataclass
class Metrics:
    """Operation counters owned by one graph and everything run on it.

    comparisons counts key orderings decided by the construction and merge
    layers; it is the basic operation of the cost model.  The insertion
    scans inside add_arc inspect keys too, but those are bookkeeping of the
    data structure and are tallied separately as list_scan_steps.
    """

    comparisons: int = 0
    arcs_added: int = 0
    dfs_arc_traversals: int = 0  # tree-arc walks only, skipped neighbors are free
    merge_rounds: int = 0
    list_scan_steps: int = 0

    def copy(self) -> "Metrics":
        return replace(self)


class ComparisonGraph:
    """Directed graph over array positions with sorted adjacency lists."""

    __slots__ = ("n", "keys", "adj", "m", "metrics")

    def __init__(self, n: int, keys: list[Optional[SortKey]], metrics: Metrics | None = None):
        if n < 0:
            raise StructuralError(f"vertex count must be non-negative, got {n}")
        if len(keys) != n + 1 or (n > 0 and keys[0] is not None):
            raise StructuralError(
                f"key table must hold entries for vertices 1..{n} (slot 0 unused), got {len(keys)} slots"
            )
        for i in range(1, n + 1):
            k = keys[i]
            if k is None or k.index != i:
                raise StructuralError(f"key table slot {i} does not carry index {i}: {k!r}")
        self.n = n
        self.keys = keys
        self.adj: list[list[int]] = [[] for _ in range(n + 1)]
        self.m = 0
        self.metrics = metrics if metrics is not None else Metrics()

    # ---- queries ----------------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise StructuralError(f"vertex {v} out of range 1..{self.n}")

    def key_less(self, u: int, v: int) -> bool:
        """Counted key comparison; one call is one basic operation."""
        self.metrics.comparisons += 1
        return self.keys[u] < self.keys[v]

    def min_out_neighbor(self, u: int) -> int | None:
        """Head of adj[u], the smallest-key out-neighbor, or None for a sink."""
        self._check_vertex(u)
        row = self.adj[u]
        return row[0] if row else None

    def out_degree(self, u: int) -> int:
        self._check_vertex(u)
        return len(self.adj[u])

    def arcs(self) -> Iterator[tuple[int, int]]:
        for u in range(1, self.n + 1):
            for v in self.adj[u]:
                yield u, v

    def arc_set(self) -> set[tuple[int, int]]:
        return set(self.arcs())

    # ---- mutation ---------------------------------------------------------

    def add_arc(self, u: int, v: int) -> bool:
        """Insert arc (u, v) keeping adj[u] ascending by key.

        The caller orients the pair; an arc against the key order is a
        programmer error and is rejected.  Re-inserting an existing arc
        leaves the graph unchanged and returns False, so the arc count m
        stays meaningful under repeated construction attempts.
        """
        self._check_vertex(u)
        self._check_vertex(v)
        kv = self.keys[v]
        if not self.keys[u] < kv:
            raise OrientationError(
                f"arc ({u}, {v}) does not ascend: key({u})={self.keys[u]} !< key({v})={kv}"
            )
        row = self.adj[u]
        for pos, w in enumerate(row):
            self.metrics.list_scan_steps += 1
            if w == v:
                return False
            if kv < self.keys[w]:
                row.insert(pos, v)
                self.m += 1
                self.metrics.arcs_added += 1
                return True
        row.append(v)
        self.m += 1
        self.metrics.arcs_added += 1
        return True

    # ---- plumbing ---------------------------------------------------------

    def clone(self) -> "ComparisonGraph":
        """Independent copy sharing the (immutable) key table."""
        twin = ComparisonGraph.__new__(ComparisonGraph)
        twin.n = self.n
        twin.keys = self.keys
        twin.adj = [list(row) for row in self.adj]
        twin.m = self.m
        twin.metrics = self.metrics.copy()
        return twin

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ComparisonGraph):
            return NotImplemented
        return self.n == other.n and self.keys == other.keys and self.adj == other.adj

    def __repr__(self) -> str:
        return f"ComparisonGraph(n={self.n}, m={self.m})"
