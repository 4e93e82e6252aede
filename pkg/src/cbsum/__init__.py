"""Vertex labelings that track graph structure by minimizing the cyclic
bandwidth sum: a two-step heuristic (similarity-guided path extraction, then
greedy cyclic merge), reference optima and bounds, graph generators,
Matrix Market ingestion, and a repetition/statistics benchmark harness."""

from .graph import Graph, Labeling, cbs, cyclic_distance, relabel_vertices, rotate_labels
from .pathfind import PathList, find_paths, jaccard, weighted_jaccard
from .merge import (
    InsertionPlan,
    PartialOrder,
    best_insertion,
    insertion_candidates,
    merge_paths,
    partial_cbs,
    shift_delta,
)

__version__ = "0.1.0"


def label_graph(graph: Graph) -> Labeling:
    """Run the full two-step pipeline: extract paths, then merge them."""
    return merge_paths(find_paths(graph), graph)
