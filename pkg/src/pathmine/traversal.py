"""Single-source shortest paths and multi-source traversal drivers.

Distances come from Dijkstra (binary heap, lazy deletion) or, for unit-weight
graphs, a level-synchronous BFS. Parents are then fixed by a full edge rescan
that keeps, for every reachable vertex, the smallest-id optimal predecessor.
That rule makes every reconstructed path (and therefore every downstream
frequency count) identical across runs, machines, and thread counts.
"""

from __future__ import annotations

import heapq
import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .graph import Graph
from .transactions import TransactionDb

__all__ = [
    "SsspResult",
    "SourceSample",
    "sssp",
    "reconstruct_path",
    "sample_sources",
    "run_traversals",
]

NO_PARENT = -1


@dataclass(frozen=True)
class SsspResult:
    """Distances (inf = unreachable) and smallest-id-parent tree for one source."""

    source: int
    dist: np.ndarray
    parent: np.ndarray


@dataclass(frozen=True)
class SourceSample:
    """Distinct source vertices drawn by a seeded partial Fisher-Yates shuffle."""

    sources: list[int]
    seed: int
    k: int


def sssp(g: Graph, source: int, algorithm: str = "auto") -> SsspResult:
    """Shortest-path distances and parents from ``source`` to every vertex.

    ``algorithm`` is "auto" (BFS when the graph is unit-weight, Dijkstra
    otherwise), "bfs", or "dijkstra". Among equal-cost predecessors the parent
    is always the one with the smallest vertex id.
    """
    g._check_vertex(source)
    if algorithm == "auto":
        algorithm = "bfs" if g.weights is None else "dijkstra"
    if algorithm == "bfs":
        if g.weights is not None:
            raise ValidationError("bfs requires a unit-weight graph")
        dist = _bfs_levels(g, source)
    elif algorithm == "dijkstra":
        dist = _dijkstra(g, source)
    else:
        raise ValidationError(f"unknown algorithm {algorithm!r}")
    parent = _min_parent_pass(g, dist)
    return SsspResult(source=source, dist=dist, parent=parent)


def _bfs_levels(g: Graph, source: int) -> np.ndarray:
    n = g.vertex_count
    dist = np.full(n, math.inf)
    dist[source] = 0.0
    offsets, adjacency = g.offsets, g.adjacency
    frontier = np.array([source], dtype=np.int64)
    level = 0
    while frontier.size:
        starts = offsets[frontier]
        lens = offsets[frontier + 1] - starts
        total = int(lens.sum())
        if total == 0:
            break
        # Gather all frontier adjacency slices in one shot.
        cum = np.cumsum(lens)
        idx = np.arange(total, dtype=np.int64) + np.repeat(starts - (cum - lens), lens)
        nbrs = np.unique(adjacency[idx])
        new = nbrs[np.isinf(dist[nbrs])]
        level += 1
        dist[new] = level
        frontier = new
    return dist


def _dijkstra(g: Graph, source: int) -> np.ndarray:
    n = g.vertex_count
    adj = g.adjacency_lists
    wl = g.weight_lists
    if wl is None:
        wl = [[1.0] * len(a) for a in adj]
    dist = [math.inf] * n
    dist[source] = 0.0
    heap = [(0.0, source)]
    pop, push = heapq.heappop, heapq.heappush
    while heap:
        d, u = pop(heap)
        if d > dist[u]:
            continue  # stale entry
        for v, w in zip(adj[u], wl[u]):
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                push(heap, (nd, v))
    return np.array(dist, dtype=np.float64)


def _min_parent_pass(g: Graph, dist: np.ndarray) -> np.ndarray:
    """parent[v] = smallest u with dist[u] + w(u, v) == dist[v], else -1."""
    n = g.vertex_count
    src = np.repeat(np.arange(n, dtype=np.int64), np.diff(g.offsets))
    dst = g.adjacency
    w = g.weights if g.weights is not None else 1.0
    ok = np.isfinite(dist[src]) & (dist[src] + w == dist[dst])
    parent = np.full(n, n, dtype=np.int64)
    np.minimum.at(parent, dst[ok], src[ok])
    parent[parent == n] = NO_PARENT
    return parent


def reconstruct_path(result: SsspResult, target: int) -> tuple[int, ...] | None:
    """Vertex sequence source..target along parent links; None if unreachable."""
    n = len(result.dist)
    if not 0 <= target < n:
        raise IndexError(f"vertex {target} out of range [0, {n})")
    if math.isinf(result.dist[target]):
        return None
    parent = result.parent
    path = [target]
    v = target
    while v != result.source:
        v = int(parent[v])
        path.append(v)
    path.reverse()
    return tuple(path)


def sample_sources(g: Graph, k: int, seed: int) -> SourceSample:
    """Draw k distinct vertices uniformly without replacement, reproducibly.

    Sparse partial Fisher-Yates over the id range: the same (seed, k,
    vertex_count) always yields the same list in the same order.
    """
    n = g.vertex_count
    if not 1 <= k <= n:
        raise ValidationError(f"k must be in [1, {n}], got {k}")
    rng = random.Random(seed)
    overlay: dict[int, int] = {}
    out = []
    for i in range(k):
        j = rng.randrange(i, n)
        vi = overlay.get(i, i)
        vj = overlay.get(j, j)
        overlay[i], overlay[j] = vj, vi
        out.append(vj)
    return SourceSample(sources=out, seed=seed, k=k)


def run_traversals(g: Graph, sources: list[int], threads: int = 1) -> TransactionDb:
    """One SSSP per source; every source->target shortest path becomes a transaction.

    Transactions are ordered by (position of the source in ``sources``, then
    target ascending); self-paths are excluded and unreachable pairs are
    counted, not stored. Output is byte-identical for any thread count.
    """
    if not sources:
        raise ValidationError("sources must be non-empty")
    for s in sources:
        g._check_vertex(s)

    def results():
        # Streamed in source order either way, so thread count cannot leak
        # into the transaction order.
        if threads > 1:
            with ThreadPoolExecutor(max_workers=threads) as pool:
                yield from pool.map(lambda s: sssp(g, s), sources)
        else:
            for s in sources:
                yield sssp(g, s)

    transactions: list[tuple[int, ...]] = []
    unreachable = 0
    for res in results():
        dist = res.dist
        parent = res.parent.tolist()
        source = res.source
        reachable = np.flatnonzero(np.isfinite(dist))
        unreachable += len(dist) - len(reachable)
        for t in reachable.tolist():
            if t == source:
                continue
            path = [t]
            v = t
            while v != source:
                v = parent[v]
                path.append(v)
            path.reverse()
            transactions.append(tuple(path))
    return TransactionDb(
        transactions=transactions,
        source_count=len(sources),
        unreachable_pairs=unreachable,
        graph_fingerprint=g.fingerprint(),
    )
