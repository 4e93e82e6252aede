"""File ingestion and emission: Matrix Market, edge lists, labelings, DOT,
and the benchmark CSV.

External vertex identifiers (Matrix Market row numbers, edge-list strings)
are mapped to dense internal indices at this boundary and back on output.
All writers order their output by vertex index, so equal inputs produce
byte-identical files.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass

from .errors import ContractViolationError, FormatError
from .graph import Graph, Labeling

__all__ = [
    "LoadedGraph",
    "read_matrix_market",
    "read_edge_list",
    "write_edge_list",
    "write_labeling",
    "write_dot",
    "write_csv_stats",
    "load_graph_file",
    "CSV_COLUMNS",
]


@dataclass(frozen=True)
class LoadedGraph:
    """A parsed graph plus the external name of each internal vertex index."""

    graph: Graph
    ids: tuple[str, ...]


_MM_FIELDS = {"real", "integer", "pattern"}
_MM_SYMMETRIES = {"general", "symmetric"}


def read_matrix_market(path: str) -> LoadedGraph:
    """Read a sparse matrix in Matrix Market coordinate format as a graph.

    The matrix must be square; there is an edge {i, j} iff some stored entry
    (i, j) or (j, i) is nonzero with i != j.  Diagonal entries are discarded
    and values are only tested for nonzero-ness, so the result is unweighted.
    Symmetric and general storage of the same symmetric matrix parse to the
    same graph.
    """
    with open(path, "r", encoding="ascii") as fh:
        header = fh.readline()
        if not header.startswith("%%MatrixMarket"):
            raise FormatError("missing %%MatrixMarket header", path, 1)
        parts = header.split()
        if len(parts) < 5:
            raise FormatError("truncated MatrixMarket header", path, 1)
        _, obj, fmt, field, symmetry = parts[:5]
        if obj.lower() != "matrix" or fmt.lower() != "coordinate":
            raise FormatError(
                f"unsupported MatrixMarket type '{obj} {fmt}'", path, 1
            )
        field = field.lower()
        symmetry = symmetry.lower()
        if field not in _MM_FIELDS:
            raise FormatError(f"unsupported field '{field}'", path, 1)
        if symmetry not in _MM_SYMMETRIES:
            raise FormatError(f"unsupported symmetry '{symmetry}'", path, 1)

        lineno = 1
        size_line = None
        for line in fh:
            lineno += 1
            stripped = line.strip()
            if not stripped or stripped.startswith("%"):
                continue
            size_line = stripped
            break
        if size_line is None:
            raise FormatError("missing size line", path, lineno)
        try:
            nrows, ncols, nnz = (int(tok) for tok in size_line.split())
        except ValueError as exc:
            raise FormatError(f"bad size line '{size_line}'", path, lineno) from exc
        if nrows != ncols:
            raise FormatError(f"matrix is {nrows}x{ncols}, not square", path, lineno)
        if nrows < 1:
            raise FormatError("empty matrix", path, lineno)

        edges: set[tuple[int, int]] = set()
        entries = 0
        for line in fh:
            lineno += 1
            stripped = line.strip()
            if not stripped or stripped.startswith("%"):
                continue
            toks = stripped.split()
            try:
                i = int(toks[0])
                j = int(toks[1])
            except (ValueError, IndexError) as exc:
                raise FormatError(f"bad entry '{stripped}'", path, lineno) from exc
            if field == "pattern":
                nonzero = True
            else:
                try:
                    value = float(toks[2])
                except (ValueError, IndexError) as exc:
                    raise FormatError(
                        f"missing value in entry '{stripped}'", path, lineno
                    ) from exc
                nonzero = value != 0.0
            if not (1 <= i <= nrows and 1 <= j <= ncols):
                raise FormatError(f"index out of range in '{stripped}'", path, lineno)
            entries += 1
            if i != j and nonzero:
                edges.add((i - 1, j - 1) if i < j else (j - 1, i - 1))
        if entries != nnz:
            raise FormatError(
                f"size line promised {nnz} entries, found {entries}", path, lineno
            )
    graph = Graph.from_edges(nrows, sorted(edges))
    return LoadedGraph(graph=graph, ids=tuple(str(i + 1) for i in range(nrows)))


def read_edge_list(path: str, weighted: bool = False) -> LoadedGraph:
    """Read a whitespace-separated edge list with '#' comments.

    Lines are ``u v`` or, with ``weighted``, ``u v w`` with positive w.
    Vertex identifiers are arbitrary strings, indexed in order of first
    appearance.  A repeated edge (in either direction) is tolerated only if
    its weight matches exactly; conflicting duplicates are an error.
    """
    index: dict[str, int] = {}
    ids: list[str] = []
    edge_weight: dict[tuple[int, int], float] = {}

    def vid(token: str) -> int:
        if token not in index:
            index[token] = len(ids)
            ids.append(token)
        return index[token]

    with open(path, "r", encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            stripped = line.strip()
            if not stripped or stripped.startswith("#"):
                continue
            toks = stripped.split()
            if weighted and len(toks) != 3:
                raise FormatError(f"expected 'u v w', got '{stripped}'", path, lineno)
            if not weighted and len(toks) != 2:
                raise FormatError(f"expected 'u v', got '{stripped}'", path, lineno)
            u = vid(toks[0])
            v = vid(toks[1])
            if u == v:
                raise FormatError(f"self-loop '{stripped}'", path, lineno)
            if weighted:
                try:
                    w = float(toks[2])
                except ValueError as exc:
                    raise FormatError(f"bad weight in '{stripped}'", path, lineno) from exc
                if w <= 0:
                    raise FormatError(f"non-positive weight in '{stripped}'", path, lineno)
            else:
                w = 1
            key = (u, v) if u < v else (v, u)
            if key in edge_weight:
                if edge_weight[key] != w:
                    raise FormatError(
                        f"edge '{toks[0]} {toks[1]}' repeated with a different weight",
                        path,
                        lineno,
                    )
            else:
                edge_weight[key] = w
    if not ids:
        raise FormatError("no vertices found", path)
    pairs = sorted(edge_weight)
    graph = Graph.from_edges(
        len(ids),
        pairs,
        weights=[edge_weight[p] for p in pairs] if weighted else None,
    )
    return LoadedGraph(graph=graph, ids=tuple(ids))


def write_edge_list(path: str, graph: Graph, ids=None) -> None:
    """Write one ``u v [w]`` line per edge, ordered by vertex index."""
    with open(path, "w", encoding="utf-8") as fh:
        for u, v, w in graph.edges():
            su = ids[u] if ids else str(u)
            sv = ids[v] if ids else str(v)
            if graph.weighted:
                fh.write(f"{su} {sv} {w}\n")
            else:
                fh.write(f"{su} {sv}\n")


def write_labeling(path: str, labeling: Labeling, ids=None) -> None:
    """Write one ``id label`` line per vertex, ordered by vertex index."""
    with open(path, "w", encoding="utf-8") as fh:
        for v, label in enumerate(labeling.perm):
            name = ids[v] if ids else str(v)
            fh.write(f"{name} {label}\n")


def _gray_hex(label: int, n: int) -> str:
    # Shade by cyclic distance from label 0 so cyclically close labels get
    # close shades; both endpoints of the scale stay readable.
    half = max(n // 2, 1)
    d = min(label, n - label) if n else 0
    level = 230 - round(195 * (d / half))
    return f"#{level:02x}{level:02x}{level:02x}"


def write_dot(path: str, graph: Graph, labeling: Labeling | None = None, ids=None) -> None:
    """Write an undirected DOT file, vertices shaded by label for external
    rendering; without a labeling the vertices are unstyled."""
    if labeling is not None and len(labeling.perm) != graph.n:
        raise ContractViolationError("labeling length differs from graph")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("graph g {\n")
        fh.write("  node [style=filled];\n")
        for v in range(graph.n):
            name = ids[v] if ids else str(v)
            if labeling is None:
                fh.write(f'  "{name}";\n')
            else:
                lbl = labeling.perm[v]
                color = _gray_hex(lbl, graph.n)
                fh.write(
                    f'  "{name}" [label="{name}:{lbl}", fillcolor="{color}"];\n'
                )
        for u, v, w in graph.edges():
            su = ids[u] if ids else str(u)
            sv = ids[v] if ids else str(v)
            attr = f' [weight={w}]' if graph.weighted else ""
            fh.write(f'  "{su}" -- "{sv}"{attr};\n')
        fh.write("}\n")


CSV_COLUMNS = [
    "instance",
    "n",
    "m",
    "median_cbs",
    "mad_cbs",
    "min_cbs",
    "ref",
    "ref_kind",
    "rd",
    "mean_time_s",
]


def write_csv_stats(path: str, rows) -> None:
    """Write benchmark rows (see bench.RunStats) as RFC-4180 CSV."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for row in rows:
            writer.writerow(row.csv_row())


def load_graph_file(path: str, weighted: bool = False) -> LoadedGraph:
    """Dispatch on extension: .mtx/.mm parse as Matrix Market, else edge list."""
    lower = path.lower()
    if lower.endswith(".mtx") or lower.endswith(".mm"):
        return read_matrix_market(path)
    return read_edge_list(path, weighted=weighted)
