"""Step 1: decompose the graph into vertex-disjoint paths.

The traversal is a similarity-guided depth-first search.  Each new path starts
at the unvisited vertex of minimum original degree (lowest index on ties,
tracked with a lazy-deletion min-heap).  From the current vertex the walk
hops to the unvisited neighbor whose closed neighborhood is most similar to
the current one; unvisited neighbors of original degree 1 are appended to the
path immediately (right after their unique neighbor) without redirecting the
walk.  A path closes when the current vertex has no unvisited neighbor, and
new paths are started until every vertex belongs to exactly one path.

Similarity between adjacent vertices u, v is the Jaccard overlap of closed
neighborhoods::

    J(u, v) = |(Adj(u) & Adj(v)) | {u, v}|  /  |Adj(u) | Adj(v)|

computed on the *original* neighborhoods, never on the residual graph.  For
unweighted graphs the walk compares similarities as exact integer fractions
(cross multiplication), so ties are exact and never float artifacts.  The
weighted variant J_w = N/D generalizes this (reducing to J at unit weights)
and is compared in double precision.  Ties pick the lowest-index candidate,
i.e. the first one encountered while scanning the sorted adjacency.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction

from .errors import ContractViolationError
from .graph import Graph

__all__ = ["PathList", "jaccard", "weighted_jaccard", "find_paths"]


@dataclass
class PathList:
    """Ordered collection of vertex-disjoint paths covering all vertices."""

    paths: list[list[int]]

    def __iter__(self):
        return iter(self.paths)

    def __len__(self) -> int:
        return len(self.paths)

    def validate(self, graph: Graph) -> None:
        """Raise unless the paths partition V and respect adjacency.

        Consecutive vertices must be adjacent, except around pendant
        (degree-1) vertices, which are parked right after their unique
        neighbor while the walk continues elsewhere: the chain of
        non-pendant vertices must be adjacent step by step, and every
        pendant that is not a path start must have its unique neighbor
        earlier in the same path.
        """
        seen: set[int] = set()
        for path in self.paths:
            if not path:
                raise ContractViolationError("empty path")
            for v in path:
                if v in seen:
                    raise ContractViolationError(f"vertex {v} appears twice")
                seen.add(v)
            chain = [v for v in path if graph.degree(v) != 1]
            for a, b in zip(chain, chain[1:]):
                if b not in graph.adj[a]:
                    raise ContractViolationError(f"non-adjacent step {a}->{b}")
            for i, v in enumerate(path):
                if graph.degree(v) == 1 and i > 0:
                    if graph.adj[v][0] not in path[:i]:
                        raise ContractViolationError(
                            f"pendant {v} placed before its neighbor"
                        )
            # A degree-1 start must be followed by its unique neighbor.
            first = path[0]
            if graph.degree(first) == 1 and len(path) > 1:
                if path[1] != graph.adj[first][0]:
                    raise ContractViolationError(
                        f"degree-1 start {first} not followed by its neighbor"
                    )
        if len(seen) != graph.n:
            raise ContractViolationError("paths do not cover every vertex")


def jaccard(graph: Graph, u: int, v: int) -> Fraction:
    """Exact neighborhood similarity of two adjacent vertices, in [0, 1].

    Equals 1 exactly when u and v have identical closed neighborhoods.
    """
    if u == v:
        raise ContractViolationError("similarity needs two distinct vertices")
    if v not in graph.adj[u]:
        raise ContractViolationError(f"vertices {u},{v} are not adjacent")
    su = frozenset(graph.adj[u])
    sv = frozenset(graph.adj[v])
    common = len(su & sv)
    return Fraction(common + 2, len(su) + len(sv) - common)


def weighted_jaccard(graph: Graph, u: int, v: int) -> float:
    """Weighted similarity N/D of two adjacent vertices.

    N is twice the connecting weight plus the min-weight overlap with shared
    neighbors; D adds the averaged shared weight and each side's exclusive
    neighbor weight.  With unit weights this equals :func:`jaccard`.
    """
    if u == v:
        raise ContractViolationError("similarity needs two distinct vertices")
    wu = dict(zip(graph.adj[u], graph.wadj[u]))
    wv = dict(zip(graph.adj[v], graph.wadj[v]))
    if v not in wu:
        raise ContractViolationError(f"vertices {u},{v} are not adjacent")
    w_uv = wu[v]
    num = 2 * w_uv
    den = 2 * w_uv
    for x, wux in wu.items():
        if x == v:
            continue
        if x in wv:
            num += min(wux, wv[x])
            den += (wux + wv[x]) / 2
        else:
            den += wux
    for x, wvx in wv.items():
        if x != u and x not in wu:
            den += wvx
    return num / den


def find_paths(graph: Graph) -> PathList:
    """Decompose ``graph`` into similarity-guided vertex-disjoint paths.

    Deterministic for a fixed vertex indexing; randomness only ever enters
    through relabeling the input.
    """
    n = graph.n
    adj = graph.adj
    degree = [len(a) for a in adj]
    weighted = graph.weighted
    if not weighted:
        nbr_sets = [frozenset(a) for a in adj]
    in_s = bytearray([1]) * n

    start_heap = [(degree[v], v) for v in range(n)]
    heapq.heapify(start_heap)

    paths: list[list[int]] = []
    while start_heap:
        d0, u0 = heapq.heappop(start_heap)
        if not in_s[u0]:
            continue
        in_s[u0] = 0
        path = [u0]
        while True:
            best = -1
            if weighted:
                best_sim = -1.0
                for v in adj[u0]:
                    if not in_s[v]:
                        continue
                    if degree[v] == 1:
                        path.append(v)
                        in_s[v] = 0
                        continue
                    sim = weighted_jaccard(graph, u0, v)
                    if sim > best_sim:
                        best_sim = sim
                        best = v
            else:
                best_num = 0
                best_den = 1
                su = nbr_sets[u0]
                du = degree[u0]
                for v in adj[u0]:
                    if not in_s[v]:
                        continue
                    if degree[v] == 1:
                        path.append(v)
                        in_s[v] = 0
                        continue
                    common = len(su & nbr_sets[v])
                    num = common + 2
                    den = du + degree[v] - common
                    if num * best_den > best_num * den:
                        best_num = num
                        best_den = den
                        best = v
            if best < 0:
                break
            u0 = best
            in_s[u0] = 0
            path.append(u0)
        paths.append(path)
    return PathList(paths)
