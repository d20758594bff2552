"""Undirected weighted multigraphs with dense vertex ids.

Graphs are loaded from whitespace-separated ``u v w`` edge lists (SNAP
style, ``#`` comments) or generated.  External ids are remapped to dense
ids in first-appearance order so downstream structures can use flat
arrays; the mapping is kept on the graph for round-tripping.  Parallel
edges are kept (they are distinct one-step paths with different weights);
self-loops are dropped, since a loop can only lengthen a path and widen
its weight range.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from typing import IO, Iterable, Optional, Sequence

log = logging.getLogger(__name__)


class GraphParseError(ValueError):
    """Malformed or invalid edge-list input."""


@dataclass
class WeightedGraph:
    """Undirected multigraph with non-negative integer edge weights.

    ``adjacency[u]`` lists ``(neighbor, weight)`` pairs sorted by
    (neighbor, weight) so iteration order is deterministic; it is symmetric
    by construction.  ``external_ids[d]`` is the id vertex ``d`` carried in
    the input, when the graph was loaded from one.
    """

    vertex_count: int
    edges: list[tuple[int, int, int]]
    adjacency: list[list[tuple[int, int]]]
    external_ids: Optional[list[int]] = None
    id_map: Optional[dict[int, int]] = field(default=None, repr=False)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, u: int) -> Sequence[tuple[int, int]]:
        """Incident edges of u as (neighbor, weight) pairs."""
        self._check_vertex(u)
        return self.adjacency[u]

    def degree(self, u: int) -> int:
        """Number of incident edges (parallel edges counted separately)."""
        self._check_vertex(u)
        return len(self.adjacency[u])

    def to_external(self, u: int) -> int:
        return self.external_ids[u] if self.external_ids is not None else u

    def _check_vertex(self, u: int) -> None:
        if not 0 <= u < self.vertex_count:
            raise IndexError(f"vertex id {u} out of range [0, {self.vertex_count})")


@dataclass(frozen=True)
class GraphStats:
    vertex_count: int
    edge_count: int
    graph_size: int
    average_degree: float
    distinct_weight_count: int
    max_degree: int


def _build_adjacency(vertex_count: int, edges: Iterable[tuple[int, int, int]]) -> list[list[tuple[int, int]]]:
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(vertex_count)]
    for u, v, w in edges:
        adjacency[u].append((v, w))
        adjacency[v].append((u, w))
    for lst in adjacency:
        lst.sort()
    return adjacency


def from_edges(vertex_count: int, edges: Iterable[tuple[int, int, int]]) -> WeightedGraph:
    """Build a graph from dense-id edges, dropping self-loops."""
    kept = []
    dropped = 0
    for u, v, w in edges:
        if w < 0:
            raise GraphParseError(f"negative weight {w} on edge ({u}, {v})")
        if u == v:
            dropped += 1
            continue
        kept.append((u, v, w))
    if dropped:
        log.warning("dropped %d self-loop(s)", dropped)
    return WeightedGraph(vertex_count, kept, _build_adjacency(vertex_count, kept))


def load_edge_list(source: IO[str]) -> WeightedGraph:
    """Parse a ``u v w`` edge-list stream into a graph.

    External ids are remapped to dense ids in first-appearance order.
    Lines starting with ``#`` are comments; blank lines are ignored.
    Raises :class:`GraphParseError` with the offending line number on
    malformed input or negative weights.
    """
    id_map: dict[int, int] = {}
    edges: list[tuple[int, int, int]] = []
    dropped = 0

    for lineno, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise GraphParseError(f"line {lineno}: expected 'u v w', got {line!r}")
        try:
            eu, ev, w = int(parts[0]), int(parts[1]), int(parts[2])
        except ValueError:
            raise GraphParseError(f"line {lineno}: non-integer token in {line!r}") from None
        if w < 0:
            raise GraphParseError(f"line {lineno}: negative weight {w}")
        u = id_map.setdefault(eu, len(id_map))
        v = id_map.setdefault(ev, len(id_map))
        if u == v:
            dropped += 1
            continue
        edges.append((u, v, w))

    if dropped:
        log.warning("dropped %d self-loop(s) while loading", dropped)

    external_ids = [0] * len(id_map)
    for ext, dense in id_map.items():
        external_ids[dense] = ext
    return WeightedGraph(
        vertex_count=len(id_map),
        edges=edges,
        adjacency=_build_adjacency(len(id_map), edges),
        external_ids=external_ids,
        id_map=id_map,
    )


def write_edge_list(g: WeightedGraph, sink: IO[str]) -> None:
    """Write the graph back out as a ``u v w`` edge list (external ids)."""
    ext = g.external_ids
    for u, v, w in g.edges:
        if ext is not None:
            sink.write(f"{ext[u]} {ext[v]} {w}\n")
        else:
            sink.write(f"{u} {v} {w}\n")


def reassign_weights(g: WeightedGraph, sigma: int, seed: int) -> WeightedGraph:
    """Copy of g with every edge weight redrawn uniformly from [0, sigma]."""
    if sigma < 1:
        raise ValueError("sigma must be >= 1")
    rng = random.Random(seed)
    edges = [(u, v, rng.randint(0, sigma)) for u, v, _ in g.edges]
    return WeightedGraph(
        vertex_count=g.vertex_count,
        edges=edges,
        adjacency=_build_adjacency(g.vertex_count, edges),
        external_ids=g.external_ids,
        id_map=g.id_map,
    )


def random_graph(n: int, m: int, sigma: int, seed: int) -> WeightedGraph:
    """Simple undirected graph: m distinct edges sampled uniformly, weights in [1, sigma]."""
    if n < 0 or m < 0:
        raise ValueError("n and m must be non-negative")
    max_edges = n * (n - 1) // 2
    if m > max_edges:
        raise ValueError(f"cannot place {m} distinct edges on {n} vertices (max {max_edges})")
    rng = random.Random(seed)
    seen: set[tuple[int, int]] = set()
    edges: list[tuple[int, int, int]] = []
    while len(edges) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        key = (u, v) if u < v else (v, u)
        if key in seen:
            continue
        seen.add(key)
        edges.append((key[0], key[1], rng.randint(1, sigma)))
    return WeightedGraph(n, edges, _build_adjacency(n, edges))


def stats(g: WeightedGraph) -> GraphStats:
    weights = {w for _, _, w in g.edges}
    n, m = g.vertex_count, g.edge_count
    return GraphStats(
        vertex_count=n,
        edge_count=m,
        graph_size=n + m,
        average_degree=(2.0 * m / n) if n else 0.0,
        distinct_weight_count=len(weights),
        max_degree=max((len(a) for a in g.adjacency), default=0),
    )


def check_symmetry(g: WeightedGraph) -> bool:
    """Full-scan check that adjacency is symmetric (test support)."""
    from collections import Counter

    for u in range(g.vertex_count):
        for v, w in g.adjacency[u]:
            if not 0 <= v < g.vertex_count:
                return False
    forward = Counter()
    for u in range(g.vertex_count):
        for v, w in g.adjacency[u]:
            forward[(u, v, w)] += 1
    for (u, v, w), cnt in forward.items():
        if forward[(v, u, w)] != cnt:
            return False
    return True
