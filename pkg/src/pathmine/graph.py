"""Immutable CSR graph built from edge-list text, plus structural properties.

Vertex ids are dense 0-based integers; ids that never appear in an edge are
isolated vertices. Undirected graphs store every edge in both adjacency
slices, so the degree sum is twice the edge count. Adjacency slices are
sorted ascending with no duplicates and no self-loops.
"""

from __future__ import annotations

import hashlib
import io
import math
from dataclasses import dataclass
from functools import cached_property
from pathlib import Path
from typing import Iterable, TextIO

import numpy as np

from .errors import ParseError, ValidationError

__all__ = [
    "Graph",
    "ClusteringStats",
    "parse_edge_list",
    "load_edge_list",
    "from_edges",
    "degree_histogram",
    "clustering",
    "export_dot",
    "to_edge_list",
]


@dataclass(frozen=True, eq=False)
class Graph:
    """Compressed sparse adjacency. ``weights`` is None for unit-weight graphs."""

    offsets: np.ndarray
    adjacency: np.ndarray
    weights: np.ndarray | None
    directed: bool
    edge_count: int

    @property
    def vertex_count(self) -> int:
        return len(self.offsets) - 1

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(self.offsets[v + 1] - self.offsets[v])

    def neighbors(self, v: int) -> np.ndarray:
        self._check_vertex(v)
        return self.adjacency[self.offsets[v] : self.offsets[v + 1]]

    def neighbor_weights(self, v: int) -> np.ndarray | None:
        self._check_vertex(v)
        if self.weights is None:
            return None
        return self.weights[self.offsets[v] : self.offsets[v + 1]]

    def has_edge(self, u: int, v: int) -> bool:
        nbrs = self.neighbors(u)
        i = int(np.searchsorted(nbrs, v))
        return i < len(nbrs) and int(nbrs[i]) == v

    def edges(self) -> Iterable[tuple[int, int, float | None]]:
        """Canonical edge triples: each undirected edge once, with u <= v."""
        for u in range(self.vertex_count):
            lo, hi = int(self.offsets[u]), int(self.offsets[u + 1])
            for i in range(lo, hi):
                v = int(self.adjacency[i])
                if not self.directed and v < u:
                    continue
                w = float(self.weights[i]) if self.weights is not None else None
                yield u, v, w

    @cached_property
    def adjacency_lists(self) -> list[list[int]]:
        """Python-list view of the adjacency, cached for traversal inner loops."""
        adj = self.adjacency.tolist()
        offs = self.offsets.tolist()
        return [adj[offs[v] : offs[v + 1]] for v in range(self.vertex_count)]

    @cached_property
    def weight_lists(self) -> list[list[float]] | None:
        if self.weights is None:
            return None
        w = self.weights.tolist()
        offs = self.offsets.tolist()
        return [w[offs[v] : offs[v + 1]] for v in range(self.vertex_count)]

    def fingerprint(self) -> str:
        """Stable hex digest of the canonical edge list (identifies the graph)."""
        h = hashlib.sha256()
        h.update(to_edge_list(self).encode("ascii"))
        return h.hexdigest()[:16]

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.vertex_count:
            raise IndexError(f"vertex {v} out of range [0, {self.vertex_count})")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        if self.directed != other.directed or self.edge_count != other.edge_count:
            return False
        if not np.array_equal(self.offsets, other.offsets):
            return False
        if not np.array_equal(self.adjacency, other.adjacency):
            return False
        if (self.weights is None) != (other.weights is None):
            return False
        if self.weights is not None and not np.array_equal(self.weights, other.weights):
            return False
        return True


@dataclass(frozen=True)
class ClusteringStats:
    """Per-vertex local clustering coefficients and their arithmetic mean."""

    local: np.ndarray
    average: float


def parse_edge_list(source: str | TextIO, directed: bool = False, weighted: bool = False) -> Graph:
    """Parse whitespace-separated edge-list text into a Graph.

    Lines are ``u v`` (or ``u v w`` when weighted); '#' lines are comments and
    blank lines are skipped. A ``# vertices N`` comment raises the vertex count
    above the largest id seen, which keeps trailing isolated vertices across a
    serialize/parse round trip. Duplicate edges collapse to the first
    occurrence (first weight wins) and self-loops are dropped.
    """
    lines = source.splitlines() if isinstance(source, str) else source
    edges: dict[tuple[int, int], float | None] = {}
    max_id = -1
    min_vertices = 0
    saw_line = False

    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            tokens = line[1:].split()
            if len(tokens) == 2 and tokens[0] == "vertices" and tokens[1].isdigit():
                min_vertices = max(min_vertices, int(tokens[1]))
                saw_line = True  # an explicit vertex count makes an edgeless graph valid
            continue
        saw_line = True
        tokens = line.split()
        expected = 3 if weighted else 2
        if len(tokens) != expected:
            raise ParseError(
                f"expected {expected} fields, got {len(tokens)}: {line!r}", lineno
            )
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer vertex id in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex id in {line!r}", lineno)
        w: float | None = None
        if weighted:
            try:
                w = float(tokens[2])
            except ValueError:
                raise ParseError(f"non-numeric weight in {line!r}", lineno) from None
            if not (w > 0 and math.isfinite(w)):
                raise ValidationError(f"line {lineno}: weight must be finite and positive, got {w}")
        max_id = max(max_id, u, v)
        if u == v:
            continue
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key not in edges:
            edges[key] = w

    if not saw_line:
        raise ValidationError("empty input: no edges found")
    vertex_count = max(max_id + 1, min_vertices)
    return _build_csr(vertex_count, edges, directed, weighted)


def load_edge_list(path: str | Path, directed: bool = False, weighted: bool = False) -> Graph:
    with io.open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh, directed=directed, weighted=weighted)


def from_edges(
    vertex_count: int,
    edges: Iterable[tuple[int, int] | tuple[int, int, float]],
    directed: bool = False,
) -> Graph:
    """Build a Graph from in-memory edges (mixed 2/3-tuples are rejected)."""
    emap: dict[tuple[int, int], float | None] = {}
    weighted = None
    for e in edges:
        u, v = int(e[0]), int(e[1])
        w = float(e[2]) if len(e) == 3 else None
        if weighted is None:
            weighted = w is not None
        elif weighted != (w is not None):
            raise ValidationError("cannot mix weighted and unweighted edges")
        if w is not None and not (w > 0 and math.isfinite(w)):
            raise ValidationError(f"weight must be finite and positive on edge ({u}, {v}), got {w}")
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise IndexError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
        if u == v:
            continue
        key = (u, v) if directed else (min(u, v), max(u, v))
        if key not in emap:
            emap[key] = w
    return _build_csr(vertex_count, emap, directed, bool(weighted))


def _build_csr(
    vertex_count: int,
    edges: dict[tuple[int, int], float | None],
    directed: bool,
    weighted: bool,
) -> Graph:
    if directed:
        arcs = [(u, v, w) for (u, v), w in edges.items()]
    else:
        arcs = []
        for (u, v), w in edges.items():
            arcs.append((u, v, w))
            arcs.append((v, u, w))
    arcs.sort(key=lambda a: (a[0], a[1]))

    offsets = np.zeros(vertex_count + 1, dtype=np.int64)
    for u, _, _ in arcs:
        offsets[u + 1] += 1
    np.cumsum(offsets, out=offsets)
    adjacency = np.fromiter((v for _, v, _ in arcs), dtype=np.int64, count=len(arcs))
    weights = None
    if weighted and arcs:  # an edgeless graph needs no weights array
        weights = np.fromiter((w for _, _, w in arcs), dtype=np.float64, count=len(arcs))
    return Graph(
        offsets=offsets,
        adjacency=adjacency,
        weights=weights,
        directed=directed,
        edge_count=len(edges),
    )


def degree_histogram(g: Graph) -> dict[int, int]:
    """Map degree -> number of vertices with that degree."""
    degrees = np.diff(g.offsets)
    values, counts = np.unique(degrees, return_counts=True)
    return {int(d): int(c) for d, c in zip(values, counts)}


def clustering(g: Graph) -> ClusteringStats:
    """Local clustering coefficient per vertex: 2*T_v / (d_v * (d_v - 1)).

    T_v counts edges among v's neighbors. Vertices of degree < 2 get 0, and
    the average runs over all vertices including those zeros.
    """
    if g.directed:
        raise ValidationError("clustering requires an undirected graph")
    n = g.vertex_count
    triangles = np.zeros(n, dtype=np.int64)
    # Each edge (u, v) credits every common neighbor c with the triangle
    # {u, v, c}; after all edges, triangles[x] is exactly T_x.
    for u in range(n):
        nbrs_u = g.neighbors(u)
        for v in nbrs_u[nbrs_u > u]:
            common = np.intersect1d(nbrs_u, g.neighbors(int(v)), assume_unique=True)
            if len(common):
                triangles[common] += 1
    degrees = np.diff(g.offsets)
    local = np.zeros(n, dtype=np.float64)
    mask = degrees >= 2
    denom = degrees[mask] * (degrees[mask] - 1)
    local[mask] = 2.0 * triangles[mask] / denom
    average = float(local.mean()) if n else 0.0
    return ClusteringStats(local=local, average=average)


def to_edge_list(g: Graph) -> str:
    """Canonical text form: a ``# vertices N`` header, then sorted edges."""
    out = [f"# vertices {g.vertex_count}"]
    for u, v, w in g.edges():
        if w is None:
            out.append(f"{u} {v}")
        else:
            out.append(f"{u} {v} {w!r}")
    return "\n".join(out) + "\n"


def export_dot(
    g: Graph,
    highlight: set[tuple[int, int]] | None = None,
    max_vertices: int | None = None,
) -> str:
    """Emit Graphviz DOT text, optionally highlighting a set of edges.

    When the graph exceeds ``max_vertices``, only the highest-degree vertices
    (ties toward lower id) and their induced edges are kept, with a comment
    noting the truncation.
    """
    keyword = "digraph" if g.directed else "graph"
    connector = "->" if g.directed else "--"
    n = g.vertex_count

    kept: set[int] | None = None
    note = None
    if max_vertices is not None and n > max_vertices:
        degrees = np.diff(g.offsets)
        order = np.lexsort((np.arange(n), -degrees))
        kept = set(int(v) for v in order[:max_vertices])
        note = f"truncated to the {max_vertices} highest-degree of {n} vertices"

    if highlight is not None and not g.directed:
        highlight = {(min(u, v), max(u, v)) for u, v in highlight}

    lines = [f"{keyword} pathmine {{"]
    if note:
        lines.append(f"  // {note}")
    edge_lines = []
    touched: set[int] = set()
    for u, v, _ in g.edges():
        if kept is not None and (u not in kept or v not in kept):
            continue
        touched.add(u)
        touched.add(v)
        attr = ""
        if highlight is not None:
            key = (u, v) if g.directed else (min(u, v), max(u, v))
            if key in highlight:
                attr = ' [color="red", penwidth=2]'
        edge_lines.append(f"  {u} {connector} {v}{attr};")
    shown = kept if kept is not None else range(n)
    for v in sorted(shown):
        if v not in touched:
            lines.append(f"  {v};")
    lines.extend(edge_lines)
    lines.append("}")
    return "\n".join(lines) + "\n"
