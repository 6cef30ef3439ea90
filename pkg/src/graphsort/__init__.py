"""Graph-based stable sorting via topological sorts of comparison graphs."""

from .construct import construct_complete, construct_graph, construct_pairs
from .dfs import DfsRun, dfs_iterative, dfs_recursive, dfs_replace, find_roots
from .errors import OrientationError, ParameterError, ParseError, StructuralError
from .graph_core import ComparisonGraph, Metrics, SortKey, build_keys
from .merge import merge_paths, merge_sub_trees, merge_trees
from .oracle import (
    TopoSortSet,
    component_hamiltonian_check,
    count_hamiltonian_paths,
    count_undirected_components,
    enumerate_topological_sorts,
    is_acyclic,
    is_valid_comparison_graph,
)
from .sort import (
    RoundSnapshot,
    SortOutcome,
    find_min,
    graph_merge_sort,
    graph_sort,
    to_array,
    trivial_graph_sort,
)

__version__ = "0.1.0"

__all__ = [
    "ComparisonGraph",
    "DfsRun",
    "Metrics",
    "OrientationError",
    "ParameterError",
    "ParseError",
    "RoundSnapshot",
    "SortKey",
    "SortOutcome",
    "StructuralError",
    "TopoSortSet",
    "build_keys",
    "component_hamiltonian_check",
    "construct_complete",
    "construct_graph",
    "construct_pairs",
    "count_hamiltonian_paths",
    "count_undirected_components",
    "dfs_iterative",
    "dfs_recursive",
    "dfs_replace",
    "enumerate_topological_sorts",
    "find_min",
    "find_roots",
    "graph_merge_sort",
    "graph_sort",
    "is_acyclic",
    "is_valid_comparison_graph",
    "merge_paths",
    "merge_sub_trees",
    "merge_trees",
    "to_array",
    "trivial_graph_sort",
]
