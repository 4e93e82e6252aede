"""Closed-form reference values, the relative-distance metric, and a
brute-force oracle for tiny graphs.

Exact optima (verified against the oracle for every instance small enough to
enumerate):

* path with n vertices:                 n - 1
* cycle with n vertices:                n
* wheel with n vertices total:          n + floor(n^2 / 4)
* k-th power of an n-cycle:             n * k * (k + 1) / 2
* complete bipartite K_{n1,n2}:         four-case parity formula (Chen et al.)

The wheel count includes the hub: a wheel with n vertices is an (n-1)-cycle
plus a hub joined to every cycle vertex.  The other reading (formula applied
to the cycle length) contradicts exhaustive enumeration already at 4..6
vertices, so this parameterization is the verified one.

Upper bounds for Cartesian products (Jianxiu) cover the six ordered family
pairs path/cycle/complete.  They reproduce the published reference tables
digit for digit; see the note on the complete x complete case, whose
published values were generated with a double-precision evaluation that
truncates one below the exact rational on some inputs.
"""

from __future__ import annotations

from itertools import permutations

from .errors import DomainError
from .graph import Graph, Labeling

__all__ = [
    "optimum_path",
    "optimum_cycle",
    "optimum_wheel",
    "optimum_power_cycle",
    "optimum_complete_bipartite",
    "upper_bound_cartesian",
    "relative_distance",
    "brute_force_optimum",
    "ORACLE_MAX_N",
]

ORACLE_MAX_N = 9


def optimum_path(n: int) -> int:
    if n < 1:
        raise DomainError("path needs n >= 1")
    return n - 1


def optimum_cycle(n: int) -> int:
    if n < 3:
        raise DomainError("cycle needs n >= 3")
    return n


def optimum_wheel(n: int) -> int:
    """Optimal objective for a wheel with ``n`` vertices including the hub."""
    if n < 4:
        raise DomainError("wheel needs n >= 4 vertices (3-cycle plus hub)")
    return n + (n * n) // 4


def optimum_power_cycle(n: int, k: int) -> int:
    """Optimal objective for the k-th power of an n-cycle.

    Requires n > 2k + 2.  At n = 2k + 1 the power graph degenerates to a
    complete graph, and at n = 2k + 2 to a complete graph minus a perfect
    matching, on which every adjacent pair has the same neighborhood
    similarity and the traversal step carries no signal.
    """
    if k < 1:
        raise DomainError("power needs k >= 1")
    if n <= 2 * k + 2:
        raise DomainError("power of cycle needs n > 2k + 2")
    return n * k * (k + 1) // 2


def optimum_complete_bipartite(n1: int, n2: int) -> int:
    if n1 < 1 or n2 < 1:
        raise DomainError("complete bipartite needs n1, n2 >= 1")
    base = n1 * n2 * n2 + n1 * n1 * n2
    if n1 % 2 == 0 and n2 % 2 == 0:
        return base // 4
    if n1 % 2 == 0:
        return (base + n1) // 4
    if n2 % 2 == 0:
        return (base + n2) // 4
    return (base + n1 + n2) // 4


_CARTESIAN_FAMILIES = ("path", "cycle", "complete")


def upper_bound_cartesian(family_g: str, family_h: str, m: int, n: int) -> int:
    """Known upper bound on the optimum for the product of two standard
    families with m and n vertices.

    Supported ordered pairs: (path,path) and (cycle,cycle) and
    (complete,complete) with m >= n (cycles also need n >= 3), plus
    (path,cycle), (path,complete) and (cycle,complete) for any valid sizes.
    """
    if family_g not in _CARTESIAN_FAMILIES or family_h not in _CARTESIAN_FAMILIES:
        raise DomainError(f"unsupported family pair ({family_g}, {family_h})")
    if m < 1 or n < 1:
        raise DomainError("need m, n >= 1")
    pair = (family_g, family_h)
    if pair == ("path", "path"):
        if m < n:
            raise DomainError("path x path bound needs m >= n")
        return m * (n - 1) + n * n * (m - 1)
    if pair == ("cycle", "cycle"):
        if not m >= n >= 3:
            raise DomainError("cycle x cycle bound needs m >= n >= 3")
        return m * (n * n + 2 * n - 2)
    if pair == ("complete", "complete"):
        if m < n:
            raise DomainError("complete x complete bound needs m >= n")
        # The published reference values for this family were generated with
        # this double-precision evaluation; it truncates one below the exact
        # rational m*n*(n^2 + 3n*floor(m/2)*ceil(m/2) - 1)/6 on some inputs,
        # and we reproduce the published numbers rather than the rational.
        inner = n * n + 3 * n * (m // 2) * ((m + 1) // 2) - 1
        return int((1 / 6.0) * m * n * inner)
    if pair == ("path", "cycle"):
        if n < 3:
            raise DomainError("cycle factor needs n >= 3")
        return n * (m * m + m - 1)
    if pair == ("path", "complete"):
        half = (n // 2) * ((n + 1) // 2)
        return (m * m * n * half) // 2 + n * (m - 1)
    if pair == ("cycle", "complete"):
        if m < 3:
            raise DomainError("cycle factor needs m >= 3")
        half = (n // 2) * ((n + 1) // 2)
        return n * (m * m * half + 4 * (m - 1)) // 2
    raise DomainError(f"unsupported family pair ({family_g}, {family_h})")


def relative_distance(median_cbs: float, ref: float) -> float:
    """(median - ref) / ref; positive when the median exceeds the reference."""
    if ref <= 0:
        raise DomainError("reference value must be positive")
    return (median_cbs - ref) / ref


def brute_force_optimum(graph: Graph) -> tuple[float, Labeling]:
    """Exact global optimum by enumeration, for graphs with at most 9 vertices.

    The label of vertex 0 is pinned to 0 (the objective is invariant under
    label rotation) and reflections are quotiented by keeping only labelings
    where vertex 1's label lies in the lower half, leaving (n-1)!/2
    candidates.  Returns the optimal value and one witness labeling.
    """
    n = graph.n
    if n > ORACLE_MAX_N:
        raise DomainError(
            f"oracle enumerates at most {ORACLE_MAX_N} vertices, got {n}"
        )
    if n == 1:
        return 0, Labeling((0,))
    best_val = None
    best_perm = None
    for tail in permutations(range(1, n)):
        if 2 * tail[0] > n:  # reflection l -> (n - l) mod n gives the mirror
            continue
        perm = (0,) + tail
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
        if best_val is None or total < best_val:
            best_val = total
            best_perm = perm
    return best_val, Labeling(best_perm)
