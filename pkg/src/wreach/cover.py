"""Vertex processing orders and greedy approximate minimum vertex cover.

The cover construction repeatedly takes the vertex of highest remaining
degree, adds it to the cover, and virtually deletes it together with its
incident edges, until no edge is left.  Keeping the candidates sorted
under the degree decrements is done in O(1) per decrement with a bucket
layout over one array:

``node``      vertices in non-increasing current-degree order, partitioned
              into maximal blocks of equal degree;
``position``  inverse of ``node``;
``degree``    current degree of every unprocessed vertex;
``bucket_end``  one past the last index of the degree-d block in ``node``.

Decrementing a vertex's degree from d to d-1 swaps it with the last
occupant of the d block and shrinks that block by one, which lands the
vertex at the front of the d-1 block.  Total cost is O(|V|+|E|).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import WeightedGraph


class TieBreak(enum.Enum):
    """How vertices of equal degree are ordered."""

    ASCENDING_ID = "ascending_id"
    DESCENDING_ID = "descending_id"


@dataclass(frozen=True)
class VertexOrder:
    """A vertex priority sequence and its inverse.

    ``order`` lists the vertices by decreasing priority; ``rank[v]`` is v's
    position in ``order``, or -1 for vertices outside it (orders restricted
    to a cover leave the rest unranked).
    """

    order: tuple[int, ...]
    rank: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.order)


def _make_order(order: Sequence[int], vertex_count: int) -> VertexOrder:
    rank = [-1] * vertex_count
    for i, v in enumerate(order):
        if not 0 <= v < vertex_count:
            raise ValueError(f"vertex id {v} out of range")
        if rank[v] != -1:
            raise ValueError(f"vertex {v} appears twice in order")
        rank[v] = i
    return VertexOrder(tuple(order), tuple(rank))


def degree_descending_order(g: WeightedGraph, tie_break: TieBreak = TieBreak.ASCENDING_ID) -> VertexOrder:
    """All vertices sorted by non-increasing degree, ties broken by id."""
    if tie_break is TieBreak.ASCENDING_ID:
        key = lambda v: (-len(g.adjacency[v]), v)
    elif tie_break is TieBreak.DESCENDING_ID:
        key = lambda v: (-len(g.adjacency[v]), -v)
    else:
        raise ValueError(f"unknown tie break {tie_break!r}")
    order = sorted(range(g.vertex_count), key=key)
    return _make_order(order, g.vertex_count)


def explicit_order(ids: Sequence[int], vertex_count: int) -> VertexOrder:
    """A caller-supplied order; must be a permutation of [0, vertex_count).

    The degree-descending shape is not enforced here: any permutation
    produces a correct index, just not necessarily a small one.
    """
    if len(ids) != vertex_count:
        raise ValueError(f"explicit order has {len(ids)} entries, expected {vertex_count}")
    return _make_order(ids, vertex_count)


def restricted_order(ids: Sequence[int], vertex_count: int) -> VertexOrder:
    """An order over a subset of vertices (hop sequence for cover-based indexes)."""
    return _make_order(ids, vertex_count)


@dataclass(frozen=True)
class CoverSet:
    """A vertex cover: ``members`` in selection order, plus a membership mask."""

    members: tuple[int, ...]
    membership: tuple[bool, ...]

    def __contains__(self, v: int) -> bool:
        return self.membership[v]

    def __len__(self) -> int:
        return len(self.members)


def is_cover(g: WeightedGraph, m: CoverSet) -> bool:
    """True iff every edge has at least one endpoint in m."""
    member = m.membership
    return all(member[u] or member[v] for u, v, _ in g.edges)


def approx_min_cover(
    g: WeightedGraph,
    tie_break: TieBreak = TieBreak.ASCENDING_ID,
    validate: bool = False,
) -> CoverSet:
    """Greedy max-degree vertex cover in O(|V|+|E|) via bucket swaps.

    ``validate`` re-checks the bucket layout after every selection; it is
    quadratic and meant for tests only.
    """
    n = g.vertex_count
    order = degree_descending_order(g, tie_break)
    node = list(order.order)
    position = list(order.rank)
    degree = [len(g.adjacency[v]) for v in range(n)]

    d_max = max(degree, default=0)
    # bucket_end[d] = count of vertices with degree >= d = one past the
    # degree-d block (blocks are laid out in decreasing degree).
    counts = [0] * (d_max + 2)
    for d in degree:
        counts[d] += 1
    bucket_end = [0] * (d_max + 2)
    acc = 0
    for d in range(d_max, -1, -1):
        acc += counts[d]
        bucket_end[d] = acc

    members: list[int] = []
    in_cover = [False] * n
    e = g.edge_count
    i = 0
    while e > 0:
        if i >= n:
            raise AssertionError("edge bookkeeping drifted: candidates exhausted with edges left")
        u = node[i]
        i += 1
        if in_cover[u] or degree[u] == 0:
            continue
        in_cover[u] = True
        members.append(u)
        for v, _w in g.adjacency[u]:
            if in_cover[v]:
                continue
            d = degree[v]
            last = bucket_end[d] - 1
            other = node[last]
            pv = position[v]
            node[last] = v
            node[pv] = other
            position[other] = pv
            position[v] = last
            bucket_end[d] = last
            degree[v] = d - 1
        e -= degree[u]
        if validate:
            _check_buckets(node, position, degree, bucket_end, in_cover)

    cover = CoverSet(tuple(members), tuple(in_cover))
    assert is_cover(g, cover)
    return cover


def _check_buckets(node, position, degree, bucket_end, in_cover) -> None:
    """Bucket-layout invariant: blocks of equal degree, non-increasing.

    Vertices already moved into the cover keep stale degrees and are
    excluded; everything else must sit inside its degree block, whose end
    boundary is bucket_end[d].
    """
    n = len(node)
    assert sorted(node) == list(range(n)), "node is not a permutation"
    for idx, v in enumerate(node):
        assert position[v] == idx, "position is not the inverse of node"
    live = [(idx, v) for idx, v in enumerate(node) if not in_cover[v]]
    for (i1, v1), (i2, v2) in zip(live, live[1:]):
        assert degree[v1] >= degree[v2], "live degrees not non-increasing"
    for idx, v in live:
        d = degree[v]
        assert idx < bucket_end[d], f"vertex {v} outside its degree-{d} block"
        assert d + 1 >= len(bucket_end) or idx >= bucket_end[d + 1], (
            f"vertex {v} inside the degree-{d + 1} block"
        )


def cover_order(
    g: WeightedGraph,
    cover: CoverSet,
    tie_break: Optional[TieBreak] = None,
) -> VertexOrder:
    """Hop order over cover members.

    By default the greedy selection order is used, which is already
    by decreasing degree at selection time.  Pass a tie break to re-sort
    by original degree instead.
    """
    if tie_break is None:
        members = cover.members
    elif tie_break is TieBreak.ASCENDING_ID:
        members = sorted(cover.members, key=lambda v: (-len(g.adjacency[v]), v))
    else:
        members = sorted(cover.members, key=lambda v: (-len(g.adjacency[v]), -v))
    return _make_order(members, g.vertex_count)
