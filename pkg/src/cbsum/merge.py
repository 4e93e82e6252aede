"""Step 2: greedily merge the extracted paths into one labeling.

The partial solution is an ordered arrangement of already-placed vertices;
the position of a vertex is its provisional label.  Paths are inserted
longest-first, and each insertion scans every cyclically distinct position
(0 .. len(order)-1; appending after the last element is the position-0
arrangement rotated) with the path taken forward and reversed, keeping the
variant with the smallest objective.

A partial arrangement is scored as a complete labeling of the subgraph
induced by its vertices: distances are cyclic modulo the arrangement length,
and only edges with both endpoints placed count.  While one path of length p
is being inserted into an arrangement of length L, that modulus is the fixed
value L + p; it grows as later paths join, and on the last insertion it
equals the graph's vertex count, making the final score the true objective.

Incremental evaluation
----------------------

Moving the insertion point from index i to i+1 hops one vertex k (the pivot,
sitting right after the insertion point) from the right side of the path to
the left side: k's label drops by p and every path label grows by one, while
all other labels stay put.  Only edges touching the pivot or the path can
change, each by a closed-form amount.  With n the modulus, p the path length
and Delta the label difference oriented as listed (taken before the hop),
the per-edge change of the objective from index i to i+1 is:

* pivot to left part   (Delta = label(k) - label(u)):
    -p if 2*Delta <= n;  +p if 2*Delta >= n + 2p;  else 2*Delta - (n + p)
* pivot to right part  (Delta = label(u) - label(k)):
    +p if 2*Delta <= n - 2p;  -p if 2*Delta >= n;  else n - p - 2*Delta
* pivot to path vertex (Delta = label(k) - label(u), 1 <= Delta <= p):
    p + 1 - n if 2*Delta > n;  n - p - 1 if 2*Delta < 2(p+1) - n;
    else p + 1 - 2*Delta
* path vertex to left part  (Delta = label(u in path) - label(v)):
    +1 if 2*Delta <= n - 2;  -1 if 2*Delta >= n;  else 0
* path vertex to right part (Delta = label(v) - label(u in path)):
    -1 if 2*Delta <= n;  +1 if 2*Delta >= n + 2;  else 0

On weighted graphs every per-edge change is multiplied by the edge weight.
All case tests are exact integer comparisons (2*Delta against n), so no
floating point enters the engine.  :func:`shift_delta` exposes the table
above as the unit-testable primitive; the sweep inlines the same arithmetic.

The module keeps a global count of per-edge evaluations so tests can assert
the O(m*n) workload ceiling on operation counts rather than wall time.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import ContractViolationError, InternalLogicError
from .graph import Graph, Labeling

__all__ = [
    "EdgeClass",
    "PartialOrder",
    "InsertionPlan",
    "shift_delta",
    "partial_cbs",
    "insertion_candidates",
    "best_insertion",
    "merge_paths",
    "reset_eval_count",
    "eval_count",
]

_evals = 0


def reset_eval_count() -> None:
    global _evals
    _evals = 0


def eval_count() -> int:
    """Number of per-edge objective evaluations since the last reset."""
    return _evals


class EdgeClass(enum.Enum):
    """Which pair of vertex groups an edge connects during one pivot hop."""

    PIVOT_LEFT = "pivot-left"
    PIVOT_RIGHT = "pivot-right"
    PIVOT_PATH = "pivot-path"
    PATH_LEFT = "path-left"
    PATH_RIGHT = "path-right"


def shift_delta(edge_class: EdgeClass, delta_labels: int, n: int, p: int) -> int:
    """Per-edge objective change when the insertion index advances by one.

    ``delta_labels`` must be the label difference oriented as the class
    requires (see module docstring) and computed *before* the hop; ``n`` is
    the modulus in effect.  Raises InternalLogicError when the difference
    lies outside the class's valid range, which can only happen through a
    bookkeeping bug.
    """
    if p < 1 or n <= p:
        raise ContractViolationError("need 1 <= p < n")
    d2 = 2 * delta_labels
    if edge_class is EdgeClass.PIVOT_LEFT:
        if not p < delta_labels < n:
            raise InternalLogicError(f"pivot-left gap {delta_labels} out of range")
        if d2 <= n:
            return -p
        if d2 >= n + 2 * p:
            return p
        return d2 - (n + p)
    if edge_class is EdgeClass.PIVOT_RIGHT:
        if not 0 < delta_labels < n:
            raise InternalLogicError(f"pivot-right gap {delta_labels} out of range")
        if d2 <= n - 2 * p:
            return p
        if d2 >= n:
            return -p
        return n - p - d2
    if edge_class is EdgeClass.PIVOT_PATH:
        if not 1 <= delta_labels <= p:
            raise InternalLogicError(f"pivot-path gap {delta_labels} out of range")
        if d2 > n:
            return p + 1 - n
        if d2 < 2 * (p + 1) - n:
            return n - (p + 1)
        return p + 1 - d2
    if edge_class is EdgeClass.PATH_LEFT:
        if not 0 < delta_labels < n:
            raise InternalLogicError(f"path-left gap {delta_labels} out of range")
        if d2 <= n - 2:
            return 1
        if d2 >= n:
            return -1
        return 0
    if edge_class is EdgeClass.PATH_RIGHT:
        if not 0 < delta_labels < n:
            raise InternalLogicError(f"path-right gap {delta_labels} out of range")
        if d2 <= n:
            return -1
        if d2 >= n + 2:
            return 1
        return 0
    raise InternalLogicError(f"unknown edge class {edge_class!r}")


@dataclass
class PartialOrder:
    """Partially merged arrangement: the sequence of placed vertices."""

    order: list[int]

    @classmethod
    def from_order(cls, graph: Graph, order) -> "PartialOrder":
        order = list(order)
        seen = set(order)
        if len(seen) != len(order):
            raise ContractViolationError("arrangement repeats a vertex")
        if any(not 0 <= v < graph.n for v in order):
            raise ContractViolationError("arrangement vertex out of range")
        return cls(order=order)


@dataclass(frozen=True)
class InsertionPlan:
    """Chosen insertion: index in [0, len(order)), orientation, objective."""

    position: int
    reversed: bool
    cbs_after: float


def partial_cbs(graph: Graph, arrangement, modulus: int | None = None) -> float:
    """Objective of a partial arrangement, evaluated directly.

    Labels are positions in ``arrangement``; only edges with both endpoints
    placed contribute.  ``modulus`` defaults to the arrangement length (the
    engine's scoring); pass a larger value to score against a wider cycle.
    """
    global _evals
    k = len(arrangement)
    n = k if modulus is None else modulus
    if n < k:
        raise ContractViolationError("modulus smaller than the arrangement")
    pos: dict[int, int] = {}
    for i, v in enumerate(arrangement):
        if v in pos:
            raise ContractViolationError(f"vertex {v} placed twice")
        pos[v] = i
    total = 0
    count = 0
    for v, i in pos.items():
        nbrs = graph.adj[v]
        count += len(nbrs)
        for u, w in zip(nbrs, graph.wadj[v]):
            j = pos.get(u, -1)
            if j > i:
                d = j - i
                if d + d > n:
                    d = n - d
                total += w * d
    _evals += count
    return total


def _sweep(graph: Graph, order, pos, path, off) -> list:
    """Objective after inserting ``path`` at each index 0..len(order)-1.

    ``pos[v]`` is v's index in ``order`` (-1 if absent), ``off[v]`` its
    offset in ``path`` (-1 if absent).  The modulus is len(order)+len(path).
    Returns a list of len(order) objective values.
    """
    global _evals
    adj = graph.adj
    wadj = graph.wadj
    L = len(order)
    p = len(path)
    n = L + p

    # Objective at index 0: the path occupies positions 0..p-1, the old
    # arrangement is shifted right by p, which changes no distance inside it.
    cbs0 = 0
    count = 0
    for j, v in enumerate(order):
        nbrs = adj[v]
        count += len(nbrs)
        for u, w in zip(nbrs, wadj[v]):
            j2 = pos[u]
            if j2 > j:
                d = j2 - j
                if d + d > n:
                    d = n - d
                cbs0 += w * d
    pedges: list[tuple[int, int, float]] = []  # (path offset, order index, w)
    for t, v in enumerate(path):
        nbrs = adj[v]
        wts = wadj[v]
        count += len(nbrs)
        for u, w in zip(nbrs, wts):
            j = pos[u]
            if j >= 0:
                pedges.append((t, j, w))
                d = j + p - t
                if d + d > n:
                    d = n - d
                cbs0 += w * d
            else:
                tu = off[u]
                if 0 <= tu < t:  # internal path edge, constant across indices
                    d = t - tu
                    if d + d > n:
                        d = n - d
                    cbs0 += w * d
    _evals += count

    out = [cbs0]
    if L == 1:
        return out
    running = cbs0
    count = 0
    for i in range(L - 1):
        k = order[i]
        delta = 0
        nbrs = adj[k]
        wts = wadj[k]
        count += len(nbrs) + len(pedges)
        ip = i + p
        for u, w in zip(nbrs, wts):
            j = pos[u]
            if j >= 0:
                if j < i:  # pivot-left
                    d2 = 2 * (ip - j)
                    if d2 <= n:
                        delta -= w * p
                    elif d2 >= n + 2 * p:
                        delta += w * p
                    else:
                        delta += w * (d2 - n - p)
                elif j > i:  # pivot-right
                    d2 = 2 * (j - i)
                    if d2 <= n - 2 * p:
                        delta += w * p
                    elif d2 >= n:
                        delta -= w * p
                    else:
                        delta += w * (n - p - d2)
            else:
                t = off[u]
                if t >= 0:  # pivot-path
                    d2 = 2 * (p - t)
                    if d2 > n:
                        delta += w * (p + 1 - n)
                    elif d2 < 2 * (p + 1) - n:
                        delta += w * (n - p - 1)
                    else:
                        delta += w * (p + 1 - d2)
        for t, j, w in pedges:
            if j > i:  # path-right
                d2 = 2 * (j + p - i - t)
                if d2 <= n:
                    delta -= w
                elif d2 >= n + 2:
                    delta += w
            elif j < i:  # path-left
                d2 = 2 * (i + t - j)
                if d2 <= n - 2:
                    delta += w
                elif d2 >= n:
                    delta -= w
            # j == i is the pivot itself, already covered above.
        running += delta
        out.append(running)
    _evals += count
    return out


def _placement_arrays(graph: Graph, order, path):
    pos = [-1] * graph.n
    for i, v in enumerate(order):
        if pos[v] >= 0:
            raise ContractViolationError(f"vertex {v} placed twice in order")
        pos[v] = i
    off = [-1] * graph.n
    for t, v in enumerate(path):
        if pos[v] >= 0 or off[v] >= 0:
            raise ContractViolationError(f"path vertex {v} is not disjoint")
        off[v] = t
    return pos, off


def insertion_candidates(graph: Graph, partial: PartialOrder, path):
    """All (position, reversed, objective) triples the merge step considers."""
    path = list(path)
    pos, off = _placement_arrays(graph, partial.order, path)
    fwd = _sweep(graph, partial.order, pos, path, off)
    rpath = path[::-1]
    for t, v in enumerate(rpath):
        off[v] = t
    rev = _sweep(graph, partial.order, pos, rpath, off)
    cands = [(i, False, c) for i, c in enumerate(fwd)]
    cands += [(i, True, c) for i, c in enumerate(rev)]
    return cands


def best_insertion(graph: Graph, partial: PartialOrder, path) -> InsertionPlan:
    """Scan every position and orientation; return the minimizing plan.

    Ties resolve to the lowest position, then to the non-reversed
    orientation.  A single-vertex path reads the same in both orientations,
    so its reversed sweep is skipped (the tie rule would discard it anyway).
    The two sweeps share only immutable state and could run concurrently.
    """
    path = list(path)
    if len(partial.order) < 1:
        raise ContractViolationError("cannot insert into an empty arrangement")
    pos, off = _placement_arrays(graph, partial.order, path)
    fwd = _sweep(graph, partial.order, pos, path, off)
    best_val = min(fwd)
    best_pos = fwd.index(best_val)
    best_rev = False
    if len(path) > 1:
        rpath = path[::-1]
        for t, v in enumerate(rpath):
            off[v] = t
        rev = _sweep(graph, partial.order, pos, rpath, off)
        rval = min(rev)
        if rval < best_val or (rval == best_val and rev.index(rval) < best_pos):
            best_val = rval
            best_pos = rev.index(rval)
            best_rev = True
    return InsertionPlan(position=best_pos, reversed=best_rev, cbs_after=best_val)


def merge_paths(paths, graph: Graph) -> Labeling:
    """Merge a path decomposition into a full labeling.

    Paths are processed longest first (ties: lowest first-vertex index).  The
    first path seeds the arrangement as-is; each further path is inserted per
    :func:`best_insertion`.  The final label of a vertex is its position in
    the merged arrangement.
    """
    seq = [list(p) for p in paths]
    if not seq:
        raise ContractViolationError("no paths to merge")
    placed: set[int] = set()
    for p in seq:
        if not p:
            raise ContractViolationError("empty path")
        placed.update(p)
    if len(placed) != graph.n or sum(len(p) for p in seq) != graph.n:
        raise ContractViolationError("paths do not partition the vertex set")

    seq.sort(key=lambda p: (-len(p), p[0]))
    partial = PartialOrder(order=seq[0])
    for path in seq[1:]:
        plan = best_insertion(graph, partial, path)
        ins = path[::-1] if plan.reversed else path
        partial.order[plan.position:plan.position] = ins

    perm = [0] * graph.n
    for i, v in enumerate(partial.order):
        perm[v] = i
    return Labeling(tuple(perm))
