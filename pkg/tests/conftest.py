import hypothesis.strategies as st
from hypothesis import settings

from cbsum.graph import Graph

settings.register_profile("repo", deadline=None, max_examples=60)
settings.load_profile("repo")


@st.composite
def graphs(draw, min_n=1, max_n=16, weighted=False):
    """Arbitrary simple graphs (possibly disconnected), optionally weighted."""
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges = [p for p, keep in zip(pairs, mask) if keep]
    if weighted:
        weights = draw(
            st.lists(
                st.integers(1, 9).map(float),
                min_size=len(edges),
                max_size=len(edges),
            )
        )
        return Graph.from_edges(n, edges, weights=weights)
    return Graph.from_edges(n, edges)


@st.composite
def connected_graphs(draw, min_n=1, max_n=16):
    """Arbitrary connected graphs: a random spanning tree plus extra edges."""
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        parent = draw(st.integers(0, v - 1))
        edges.add((parent, v))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges.update(p for p, keep in zip(pairs, mask) if keep)
    return Graph.from_edges(n, sorted(edges))
