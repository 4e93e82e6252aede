"""Constructors for every graph family used in the experiments.

Deterministic families are built directly; random families draw from the
package's fixed splitmix64 stream (see :mod:`cbsum.rng`), so a (spec, seed)
pair reproduces the identical graph on any platform.

A :class:`GeneratorSpec` is the plain-text `key=value` form accepted anywhere
the command line wants a graph, e.g. ``family=ws n=100 k=4 p=0.1 seed=7``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DomainError
from .graph import Graph
from . import reference
from .rng import SplitMix64, derive_seed

__all__ = [
    "make_path",
    "make_cycle",
    "make_wheel",
    "make_power_cycle",
    "make_complete",
    "make_complete_bipartite",
    "cartesian_product",
    "erdos_renyi",
    "barabasi_albert",
    "watts_strogatz",
    "stochastic_block",
    "GeneratorSpec",
    "parse_spec",
]


def make_path(n: int) -> Graph:
    if n < 1:
        raise DomainError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise DomainError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def make_wheel(cycle_n: int) -> Graph:
    """Cycle of ``cycle_n`` vertices plus a hub adjacent to all of them
    (``cycle_n + 1`` vertices total)."""
    if cycle_n < 3:
        raise DomainError("wheel needs a cycle of at least 3 vertices")
    hub = cycle_n
    edges = [(i, (i + 1) % cycle_n) for i in range(cycle_n)]
    edges += [(i, hub) for i in range(cycle_n)]
    return Graph.from_edges(cycle_n + 1, edges)


def make_power_cycle(n: int, k: int) -> Graph:
    """k-th power of an n-cycle: u ~ v iff their cycle distance is <= k.

    Requires n > 2k + 2: below that the graph degenerates to K_n or to K_n
    minus a perfect matching, where all neighborhoods look alike.
    """
    if k < 1:
        raise DomainError("power needs k >= 1")
    if n <= 2 * k + 2:
        raise DomainError("power of cycle needs n > 2k + 2")
    edges = []
    for u in range(n):
        for j in range(1, k + 1):
            v = (u + j) % n
            if u < v:
                edges.append((u, v))
            else:
                edges.append((v, u))
    return Graph.from_edges(n, sorted(set(edges)))


def make_complete(n: int) -> Graph:
    if n < 1:
        raise DomainError("complete graph needs n >= 1")
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def make_complete_bipartite(n1: int, n2: int) -> Graph:
    if n1 < 1 or n2 < 1:
        raise DomainError("complete bipartite needs n1, n2 >= 1")
    edges = [(a, n1 + b) for a in range(n1) for b in range(n2)]
    return Graph.from_edges(n1 + n2, edges)


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """Cartesian product: (a,b) ~ (c,d) iff a==c and b~d, or b==d and a~c.

    Vertex (a, b) maps to index a * h.n + b.
    """
    if g.weighted or h.weighted:
        raise DomainError("cartesian product is defined for unweighted graphs")
    nh = h.n
    edges = []
    for a in range(g.n):
        base = a * nh
        for b, d in ((b, d) for b in range(nh) for d in h.adj[b] if d > b):
            edges.append((base + b, base + d))
    for a in range(g.n):
        for c in g.adj[a]:
            if c > a:
                for b in range(nh):
                    edges.append((a * nh + b, c * nh + b))
    return Graph.from_edges(g.n * nh, edges)


def _check_probability(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"probability {p} outside [0, 1]")


def erdos_renyi(n: int, p: float, seed: int, max_attempts: int = 100) -> Graph:
    """G(n, p) with every pair drawn independently.

    For p > 0 the draw is repeated (with derived sub-seeds, up to
    ``max_attempts``) until the result is connected; with p = 0 the empty
    graph is returned as is.
    """
    if n < 1:
        raise DomainError("need n >= 1")
    _check_probability(p)
    for attempt in range(max_attempts):
        rng = SplitMix64(derive_seed(seed, attempt))
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.uniform() < p
        ]
        graph = Graph.from_edges(n, edges)
        if p == 0.0 or n == 1 or graph.is_connected():
            return graph
    raise DomainError(
        f"no connected draw of G({n}, {p}) in {max_attempts} attempts"
    )


def barabasi_albert(n: int, seed: int) -> Graph:
    """Preferential attachment, one new edge per arriving vertex.

    Grows from a triangle; each new vertex attaches to one existing vertex
    picked with probability proportional to its degree.
    """
    if n < 3:
        raise DomainError("preferential attachment needs n >= 3")
    rng = SplitMix64(seed)
    edges = [(0, 1), (0, 2), (1, 2)]
    endpoints = [0, 1, 0, 2, 1, 2]  # degree-weighted urn
    for v in range(3, n):
        target = endpoints[rng.randbelow(len(endpoints))]
        edges.append((target, v))
        endpoints.append(v)
        endpoints.append(target)
    return Graph.from_edges(n, edges)


def watts_strogatz(n: int, k: int, p: float, seed: int) -> Graph:
    """Ring lattice of even degree ``k`` plus random extra edges.

    Each currently unlinked pair receives an edge independently, with the
    per-pair probability calibrated so that the expected number of added
    edges is p * (n*k/2).  This follows the "edge between two unlinked
    vertices is drawn with probability p" construction, which adds shortcuts
    instead of rewiring them as the classical small-world model does.
    """
    if k < 2 or k % 2 != 0:
        raise DomainError("lattice degree k must be even and >= 2")
    if k >= n:
        raise DomainError("need k < n")
    _check_probability(p)
    edges = set()
    for i in range(n):
        for j in range(1, k // 2 + 1):
            v = (i + j) % n
            edges.add((i, v) if i < v else (v, i))
    lattice_m = len(edges)
    free_pairs = n * (n - 1) // 2 - lattice_m
    p_add = 0.0 if free_pairs == 0 else min(1.0, p * lattice_m / free_pairs)
    rng = SplitMix64(seed)
    extra = []
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.uniform() < p_add:
                extra.append((u, v))
    return Graph.from_edges(n, sorted(edges) + extra)


def stochastic_block(
    n: int, communities: int, p_intra: float, p_inter: float, seed: int
) -> Graph:
    """Each vertex joins a uniformly random community; edge probability is
    p_intra inside a community and p_inter across."""
    if n < 1:
        raise DomainError("need n >= 1")
    if communities < 1:
        raise DomainError("need at least one community")
    _check_probability(p_intra)
    _check_probability(p_inter)
    rng = SplitMix64(seed)
    comm = [rng.randbelow(communities) for _ in range(n)]
    edges = []
    for u in range(n):
        cu = comm[u]
        for v in range(u + 1, n):
            p = p_intra if comm[v] == cu else p_inter
            if rng.uniform() < p:
                edges.append((u, v))
    return Graph.from_edges(n, edges)


# ----------------------------------------------------------------------------
# Plain-text generator specs
# ----------------------------------------------------------------------------

_RANDOM_FAMILIES = {"er", "ba", "ws", "sbm"}
_PRODUCT_FAMILIES = {
    "pp": ("path", "path"),
    "cc": ("cycle", "cycle"),
    "kk": ("complete", "complete"),
    "pc": ("path", "cycle"),
    "pk": ("path", "complete"),
    "ck": ("cycle", "complete"),
}
_FAMILIES = {
    "path",
    "cycle",
    "wheel",
    "pgc",
    "complete",
    "cbg",
    *_RANDOM_FAMILIES,
    *_PRODUCT_FAMILIES,
}

_SINGLE_FACTORIES = {
    "path": make_path,
    "cycle": make_cycle,
    "complete": make_complete,
}


@dataclass(frozen=True)
class GeneratorSpec:
    """A graph family tag plus its parameters.

    For random families the seed is part of the spec, so the spec alone
    reproduces the graph.  ``wheel`` takes the total vertex count n (hub
    included); ``pgc`` takes n and k; ``cbg`` takes n1 and n2; the product
    families pp/cc/kk/pc/pk/ck take the two factor sizes m and n.
    """

    family: str
    params: dict = field(default_factory=dict)

    def __str__(self) -> str:
        parts = [f"family={self.family}"]
        for key, val in self.params.items():
            parts.append(f"{key}={val}")
        return " ".join(parts)

    def name(self) -> str:
        return "-".join([self.family] + [str(v) for v in self.params.values()])

    def _get(self, key: str) -> float:
        if key not in self.params:
            raise DomainError(f"family '{self.family}' needs parameter '{key}'")
        return self.params[key]

    def _int(self, key: str) -> int:
        val = self._get(key)
        if int(val) != val:
            raise DomainError(f"parameter '{key}' must be an integer")
        return int(val)

    def build(self) -> Graph:
        fam = self.family
        if fam in _SINGLE_FACTORIES:
            return _SINGLE_FACTORIES[fam](self._int("n"))
        if fam == "wheel":
            return make_wheel(self._int("n") - 1)
        if fam == "pgc":
            return make_power_cycle(self._int("n"), self._int("k"))
        if fam == "cbg":
            return make_complete_bipartite(self._int("n1"), self._int("n2"))
        if fam == "er":
            return erdos_renyi(self._int("n"), self._get("p"), self._int("seed"))
        if fam == "ba":
            return barabasi_albert(self._int("n"), self._int("seed"))
        if fam == "ws":
            return watts_strogatz(
                self._int("n"), self._int("k"), self._get("p"), self._int("seed")
            )
        if fam == "sbm":
            return stochastic_block(
                self._int("n"),
                self._int("c"),
                self._get("p_intra"),
                self._get("p_inter"),
                self._int("seed"),
            )
        if fam in _PRODUCT_FAMILIES:
            fg, fh = _PRODUCT_FAMILIES[fam]
            g = _SINGLE_FACTORIES[fg](self._int("m"))
            h = _SINGLE_FACTORIES[fh](self._int("n"))
            return cartesian_product(g, h)
        raise DomainError(f"unknown family '{fam}'")

    def reference_value(self):
        """(kind, value) for families with a known optimum or bound, else None."""
        fam = self.family
        if fam == "path":
            return "exact_optimum", reference.optimum_path(self._int("n"))
        if fam == "cycle":
            return "exact_optimum", reference.optimum_cycle(self._int("n"))
        if fam == "wheel":
            return "exact_optimum", reference.optimum_wheel(self._int("n"))
        if fam == "pgc":
            return "exact_optimum", reference.optimum_power_cycle(
                self._int("n"), self._int("k")
            )
        if fam == "cbg":
            return "exact_optimum", reference.optimum_complete_bipartite(
                self._int("n1"), self._int("n2")
            )
        if fam in _PRODUCT_FAMILIES:
            fg, fh = _PRODUCT_FAMILIES[fam]
            return "upper_bound", reference.upper_bound_cartesian(
                fg, fh, self._int("m"), self._int("n")
            )
        return None


def parse_spec(text: str, default_seed: int | None = None) -> GeneratorSpec:
    """Parse ``family=... key=value ...`` into a GeneratorSpec.

    ``default_seed`` fills in the seed for random families when absent.
    """
    family = None
    params: dict = {}
    for token in text.split():
        if "=" not in token:
            raise DomainError(f"malformed spec token '{token}' (expected key=value)")
        key, _, val = token.partition("=")
        if key == "family":
            family = val
            continue
        try:
            num = float(val)
        except ValueError as exc:
            raise DomainError(f"non-numeric value in '{token}'") from exc
        params[key] = int(num) if num == int(num) else num
    if family is None:
        raise DomainError("spec is missing family=...")
    if family not in _FAMILIES:
        raise DomainError(f"unknown family '{family}'")
    if family in _RANDOM_FAMILIES and "seed" not in params and default_seed is not None:
        params["seed"] = default_seed
    return GeneratorSpec(family=family, params=params)
