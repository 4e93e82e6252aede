"""Graph and labeling data model, cyclic distance, and the exact objective.

A :class:`Graph` is a simple undirected graph over the dense vertex set
``0..n-1``.  Edges may carry strictly positive weights; an unweighted graph is
represented with all weights equal to the integer 1 so that the objective
stays integer-valued.  Connectivity is *not* required: the objective and both
heuristic steps are well defined on disconnected graphs, so loaders only warn.

A :class:`Labeling` is a bijection ``vertex -> {0..n-1}`` stored as an array
``perm`` with ``perm[v]`` the label of vertex ``v``.

The objective of the whole package is the cyclic bandwidth sum: the sum over
all edges of the cyclic distance between the endpoint labels, where the cyclic
distance between labels ``a`` and ``b`` on ``n`` positions is
``min(|a-b|, n-|a-b|)``.  Both Graph and Labeling are immutable after
construction and safe to share across workers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ContractViolationError

__all__ = [
    "Graph",
    "Labeling",
    "cyclic_distance",
    "cbs",
    "rotate_labels",
    "relabel_vertices",
]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph with optional positive edge weights.

    Attributes:
        n: number of vertices (>= 1).
        adj: per-vertex tuple of neighbor indices, sorted ascending.
        wadj: per-vertex tuple of edge weights parallel to ``adj``.  All
            entries are the integer 1 when the graph is unweighted.
        weighted: whether explicit weights were supplied.
    """

    n: int
    adj: tuple[tuple[int, ...], ...]
    wadj: tuple[tuple[float, ...], ...]
    weighted: bool = False

    def __post_init__(self):
        if self.n < 1:
            raise ContractViolationError("graph needs at least one vertex")
        if len(self.adj) != self.n or len(self.wadj) != self.n:
            raise ContractViolationError("adjacency length differs from n")
        for u, (nbrs, wts) in enumerate(zip(self.adj, self.wadj)):
            if len(nbrs) != len(wts):
                raise ContractViolationError(f"weight list mismatch at vertex {u}")
            prev = -1
            for v, w in zip(nbrs, wts):
                if v == u:
                    raise ContractViolationError(f"self-loop at vertex {u}")
                if not 0 <= v < self.n:
                    raise ContractViolationError(f"neighbor {v} out of range")
                if v <= prev:
                    raise ContractViolationError(
                        f"adjacency of vertex {u} not sorted strictly ascending"
                    )
                if w <= 0:
                    raise ContractViolationError(f"non-positive weight on edge {u},{v}")
                prev = v
        # Symmetry: u in adj[v] <=> v in adj[u], with equal weights.
        seen: dict[tuple[int, int], float] = {}
        for u, (nbrs, wts) in enumerate(zip(self.adj, self.wadj)):
            for v, w in zip(nbrs, wts):
                key = (u, v) if u < v else (v, u)
                if key in seen:
                    if seen[key] != w:
                        raise ContractViolationError(f"asymmetric weight on edge {key}")
                    seen[key] = -abs(w)  # mark second sighting
                else:
                    seen[key] = w
        for key, w in seen.items():
            if w > 0:
                raise ContractViolationError(f"edge {key} present in one direction only")

    @property
    def m(self) -> int:
        """Edge count."""
        return sum(len(a) for a in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self):
        """Yield each edge once as (u, v, w) with u < v."""
        for u, (nbrs, wts) in enumerate(zip(self.adj, self.wadj)):
            for v, w in zip(nbrs, wts):
                if v > u:
                    yield u, v, w

    def is_connected(self) -> bool:
        if self.n == 1:
            return True
        seen = bytearray(self.n)
        stack = [0]
        seen[0] = 1
        count = 1
        while stack:
            u = stack.pop()
            for v in self.adj[u]:
                if not seen[v]:
                    seen[v] = 1
                    count += 1
                    stack.append(v)
        return count == self.n

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges,
        weights=None,
    ) -> "Graph":
        """Build a graph from an iterable of (u, v) pairs.

        Duplicate pairs and self-loops are rejected.  ``weights`` may be a
        parallel sequence of positive reals; omitting it yields an unweighted
        graph.
        """
        nbrs: list[list[int]] = [[] for _ in range(n)]
        wts: list[list[float]] = [[] for _ in range(n)]
        edges = list(edges)
        if weights is None:
            wlist = [1] * len(edges)
            weighted = False
        else:
            wlist = list(weights)
            if len(wlist) != len(edges):
                raise ContractViolationError("weights length differs from edges")
            weighted = True
        seen: set[tuple[int, int]] = set()
        for (u, v), w in zip(edges, wlist):
            if u == v:
                raise ContractViolationError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ContractViolationError(f"duplicate edge {key}")
            seen.add(key)
            nbrs[u].append(v)
            nbrs[v].append(u)
            wts[u].append(w)
            wts[v].append(w)
        adj = []
        wadj = []
        for u in range(n):
            pairs = sorted(zip(nbrs[u], wts[u]))
            adj.append(tuple(p[0] for p in pairs))
            wadj.append(tuple(p[1] for p in pairs))
        return cls(n=n, adj=tuple(adj), wadj=tuple(wadj), weighted=weighted)

    def reweighted(self, factor: float) -> "Graph":
        """Same structure with every weight multiplied by ``factor``."""
        return Graph(
            n=self.n,
            adj=self.adj,
            wadj=tuple(tuple(w * factor for w in ws) for ws in self.wadj),
            weighted=True,
        )


@dataclass(frozen=True)
class Labeling:
    """Bijection vertex -> label, stored as ``perm[v] = label``."""

    perm: tuple[int, ...]

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise ContractViolationError("labeling is not a bijection onto 0..n-1")

    def __len__(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "Labeling":
        return cls(tuple(range(n)))

    def inverse_order(self) -> list[int]:
        """Vertices sorted by label: position i holds the vertex labeled i."""
        order = [0] * len(self.perm)
        for v, lbl in enumerate(self.perm):
            order[lbl] = v
        return order


def cyclic_distance(label_u: int, label_v: int, n: int) -> int:
    """min(|a-b|, n-|a-b|): shortest-path distance between two labels on an
    n-cycle host.  Result lies in [0, n//2]."""
    d = label_u - label_v
    if d < 0:
        d = -d
    return d if d + d <= n else n - d


def cbs(graph: Graph, labeling: Labeling):
    """Exact cyclic bandwidth sum of ``labeling`` on ``graph``.

    Sum over edges {u,v} of w_uv * cyclic_distance(perm[u], perm[v], n).
    Integer for unweighted graphs.
    """
    perm = labeling.perm
    n = graph.n
    if len(perm) != n:
        raise ContractViolationError(
            f"labeling has {len(perm)} entries for a graph with {n} vertices"
        )
    total = 0
    for u, (nbrs, wts) in enumerate(zip(graph.adj, graph.wadj)):
        pu = perm[u]
        for v, w in zip(nbrs, wts):
            if v > u:
                d = pu - perm[v]
                if d < 0:
                    d = -d
                if d + d > n:
                    d = n - d
                total += w * d
    return total


def rotate_labels(labeling: Labeling, r: int) -> Labeling:
    """Add ``r`` to every label, modulo n.  Preserves the objective."""
    n = len(labeling.perm)
    if not 0 <= r < n:
        raise ContractViolationError("rotation must lie in [0, n)")
    return Labeling(tuple((p + r) % n for p in labeling.perm))


def relabel_vertices(graph: Graph, id_perm) -> Graph:
    """Isomorphic copy of ``graph`` with vertex u renamed id_perm[u].

    Used by the benchmark harness to randomize vertex identifiers between
    repetitions; adjacency lists are re-sorted under the new names.
    """
    n = graph.n
    id_perm = list(id_perm)
    if sorted(id_perm) != list(range(n)):
        raise ContractViolationError("id_perm is not a bijection onto 0..n-1")
    adj: list[tuple[int, ...]] = [()] * n
    wadj: list[tuple[float, ...]] = [()] * n
    for u in range(n):
        pairs = sorted(
            (id_perm[v], w) for v, w in zip(graph.adj[u], graph.wadj[u])
        )
        adj[id_perm[u]] = tuple(p[0] for p in pairs)
        wadj[id_perm[u]] = tuple(p[1] for p in pairs)
    return Graph(n=n, adj=tuple(adj), wadj=tuple(wadj), weighted=graph.weighted)
