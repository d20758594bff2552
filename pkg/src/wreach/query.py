"""Query engines: 2-hop label merge, neighbor-expansion variant, BFS oracle.

A query asks whether some path of at most k edges connects u and v with
every edge weight inside the constraint.  The 2-hop engines answer it by
meeting at a common hop: entries (hop, i1, d1) on u and (hop, i2, d2) on v
witness a walk of d1 + d2 edges whose weights span the union of the two
intervals.  When one side is the hop's own self-entry the union is just
the other interval; numerically merging the (0, 0) placeholder would
wrongly drag the range down to weight 0.

Indexes that store labels only on cover vertices cannot be probed at a
non-cover endpoint.  Every neighbor of such an endpoint is in the cover,
so the query is re-rooted there: one step in from each uncovered endpoint,
with the budget reduced accordingly and the stepped-over edge checked
against the constraint directly.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Union

from .graph import WeightedGraph
from .intervals import WeightConstraint
from .labeling import LabelIndex, Variant

INF = float("inf")
_HUGE = 1 << 62


@dataclass(frozen=True)
class Query:
    u: int
    v: int
    constraint: WeightConstraint
    k: int

    def __post_init__(self) -> None:
        if self.k < 0:
            raise ValueError("k must be >= 0")


@dataclass(frozen=True)
class QueryResult:
    reachable: bool
    probe_count: int = 0


def _bounds(c: WeightConstraint) -> tuple[int, int]:
    # Weights are non-negative, so an unbounded lower side behaves like 0.
    return (0 if c.lower is None else c.lower, _HUGE if c.upper is None else c.upper)


def _scan_pairs(eu, ev, c_lo: int, c_hi: int, k: int) -> tuple[bool, int]:
    """Merge two rank-sorted entry lists; True on the first admissible rendezvous.

    A pair of entries is admissible when both intervals fit the constraint
    (a merged range fits exactly when each part does; self-entries fit
    vacuously) and their lengths sum to at most k, so per common hop only
    the shortest fitting entry on each side matters.
    """
    i, j = 0, 0
    nu, nv = len(eu), len(ev)
    probes = 0
    while i < nu and j < nv:
        ru = eu[i][0]
        rv = ev[j][0]
        if ru < rv:
            i += 1
        elif ru > rv:
            j += 1
        else:
            i2 = i + 1
            while i2 < nu and eu[i2][0] == ru:
                i2 += 1
            j2 = j + 1
            while j2 < nv and ev[j2][0] == ru:
                j2 += 1
            a = _HUGE
            for idx in range(i, i2):
                _, lo1, hi1, d1 = eu[idx]
                probes += 1
                if d1 < a and (d1 == 0 or (c_lo <= lo1 and hi1 <= c_hi)):
                    a = d1
            if a <= k:
                b = _HUGE
                for idx in range(j, j2):
                    _, lo2, hi2, d2 = ev[idx]
                    probes += 1
                    if d2 < b and (d2 == 0 or (c_lo <= lo2 and hi2 <= c_hi)):
                        b = d2
                if a + b <= k:
                    return True, probes
            i, j = i2, j2
    return False, probes


def _scan_min(eu, ev, c_lo: int, c_hi: int) -> Union[int, float]:
    """Smallest admissible d1 + d2 over all common hops, or INF."""
    best = _HUGE
    i, j = 0, 0
    nu, nv = len(eu), len(ev)
    while i < nu and j < nv:
        ru = eu[i][0]
        rv = ev[j][0]
        if ru < rv:
            i += 1
        elif ru > rv:
            j += 1
        else:
            i2 = i + 1
            while i2 < nu and eu[i2][0] == ru:
                i2 += 1
            j2 = j + 1
            while j2 < nv and ev[j2][0] == ru:
                j2 += 1
            a = _HUGE
            for idx in range(i, i2):
                _, lo1, hi1, d1 = eu[idx]
                if d1 < a and (d1 == 0 or (c_lo <= lo1 and hi1 <= c_hi)):
                    a = d1
            if a < best:
                b = _HUGE
                for idx in range(j, j2):
                    _, lo2, hi2, d2 = ev[idx]
                    if d2 < b and (d2 == 0 or (c_lo <= lo2 and hi2 <= c_hi)):
                        b = d2
                if a + b < best:
                    best = a + b
            i, j = i2, j2
    return INF if best >= _HUGE else best


def _check_2hop(index: LabelIndex) -> None:
    if index.variant is Variant.LWKRI:
        raise ValueError("2-hop query requires a WKRI or GWKRI index")


def query_2hop(index: LabelIndex, q: Query) -> bool:
    return query_2hop_counted(index, q).reachable


def query_2hop_counted(index: LabelIndex, q: Query) -> QueryResult:
    _check_2hop(index)
    _check_ids(index, q)
    if q.u == q.v:
        return QueryResult(True, 0)
    c_lo, c_hi = _bounds(q.constraint)
    found, probes = _scan_pairs(index.entries[q.u], index.entries[q.v], c_lo, c_hi, q.k)
    return QueryResult(found, probes)


def min_hops_2hop(index: LabelIndex, u: int, v: int, c: WeightConstraint) -> Union[int, float]:
    """Length of the shortest admissible path per the index, or INF."""
    _check_2hop(index)
    if u == v:
        return 0
    c_lo, c_hi = _bounds(c)
    return _scan_min(index.entries[u], index.entries[v], c_lo, c_hi)


def _check_ids(index: LabelIndex, q: Query) -> None:
    n = index.vertex_count
    if not (0 <= q.u < n and 0 <= q.v < n):
        raise IndexError(f"query endpoints ({q.u}, {q.v}) out of range [0, {n})")


def query_lwkri(index: LabelIndex, q: Query) -> bool:
    return query_lwkri_counted(index, q).reachable


def query_lwkri_counted(index: LabelIndex, q: Query) -> QueryResult:
    if index.variant is not Variant.LWKRI:
        raise ValueError("neighbor-expansion query requires an LWKRI index")
    _check_ids(index, q)
    u, v, k = q.u, q.v, q.k
    if u == v:
        return QueryResult(True, 0)
    c_lo, c_hi = _bounds(q.constraint)
    assert index.cover is not None and index.adjacency is not None
    member = index.cover.membership
    entries = index.entries
    probes = 0

    if member[u] and member[v]:
        found, probes = _scan_pairs(entries[u], entries[v], c_lo, c_hi, k)
        return QueryResult(found, probes)

    adj = index.adjacency

    if member[u] or member[v]:
        # One endpoint uncovered: step over one admissible incident edge
        # into the cover and answer the k-1 query there.
        anchor, outside = (u, v) if member[u] else (v, u)
        if k < 1:
            return QueryResult(False, 0)
        tried: set[int] = set()
        for x, w in adj[outside]:
            if w < c_lo or w > c_hi or x in tried:
                continue
            tried.add(x)
            if x == anchor:
                return QueryResult(True, probes)
            found, p = _scan_pairs(entries[anchor], entries[x], c_lo, c_hi, k - 1)
            probes += p
            if found:
                return QueryResult(True, probes)
        return QueryResult(False, probes)

    # Both endpoints uncovered.  They cannot be adjacent (every edge must
    # touch the cover), so any connecting path enters the cover one step
    # from each end; try all admissible entry pairs with budget k-2.
    assert all(x != v for x, _ in adj[u]), "cover property violated: adjacent uncovered endpoints"
    if k < 2:
        return QueryResult(False, 0)
    ys: list[int] = []
    for y, w in adj[u]:
        if c_lo <= w <= c_hi and y not in ys:
            ys.append(y)
    if not ys:
        return QueryResult(False, 0)
    yset = set(ys)
    xs: list[int] = []
    for x, w in adj[v]:
        if c_lo <= w <= c_hi and x not in xs:
            if x in yset:
                return QueryResult(True, probes)  # shared middle vertex, 2 <= k
            xs.append(x)
    tried_pairs: set[tuple[int, int]] = set()
    for y in ys:
        for x in xs:
            key = (y, x) if y < x else (x, y)
            if key in tried_pairs:
                continue
            tried_pairs.add(key)
            found, p = _scan_pairs(entries[y], entries[x], c_lo, c_hi, k - 2)
            probes += p
            if found:
                return QueryResult(True, probes)
    return QueryResult(False, probes)


def min_hops_lwkri(index: LabelIndex, u: int, v: int, c: WeightConstraint) -> Union[int, float]:
    if index.variant is not Variant.LWKRI:
        raise ValueError("neighbor-expansion query requires an LWKRI index")
    if u == v:
        return 0
    c_lo, c_hi = _bounds(c)
    member = index.cover.membership
    entries = index.entries
    adj = index.adjacency

    def pair_min(a: int, b: int) -> Union[int, float]:
        if a == b:
            return 0
        return _scan_min(entries[a], entries[b], c_lo, c_hi)

    if member[u] and member[v]:
        return pair_min(u, v)

    if member[u] or member[v]:
        anchor, outside = (u, v) if member[u] else (v, u)
        best: Union[int, float] = INF
        for x, w in adj[outside]:
            if c_lo <= w <= c_hi:
                best = min(best, 1 + pair_min(anchor, x))
        return best

    best = INF
    memo: dict[tuple[int, int], Union[int, float]] = {}
    for y, wy in adj[u]:
        if not c_lo <= wy <= c_hi:
            continue
        for x, wx in adj[v]:
            if not c_lo <= wx <= c_hi:
                continue
            key = (y, x) if y < x else (x, y)
            if key not in memo:
                memo[key] = pair_min(y, x)
            best = min(best, 2 + memo[key])
    return best


def query_index(index: LabelIndex, q: Query) -> bool:
    """Dispatch a query to the engine matching the index variant."""
    if index.variant is Variant.LWKRI:
        return query_lwkri(index, q)
    return query_2hop(index, q)


def min_hops_index(index: LabelIndex, u: int, v: int, c: WeightConstraint) -> Union[int, float]:
    if index.variant is Variant.LWKRI:
        return min_hops_lwkri(index, u, v, c)
    return min_hops_2hop(index, u, v, c)


class BfsOracle:
    """Ground truth: breadth-first search over the constraint-filtered subgraph.

    Keeps a reusable visited-stamp array so batches do not reallocate per
    query.
    """

    def __init__(self, g: WeightedGraph):
        self.g = g
        self._seen = [0] * g.vertex_count
        self._tick = 0

    def reachable(self, u: int, v: int, c: WeightConstraint, k: int) -> bool:
        if u == v:
            return k >= 0
        if k <= 0:
            return False
        c_lo, c_hi = _bounds(c)
        adj = self.g.adjacency
        seen = self._seen
        self._tick += 1
        tick = self._tick
        seen[u] = tick
        frontier = [u]
        depth = 0
        while frontier and depth < k:
            depth += 1
            nxt = []
            for x in frontier:
                for y, w in adj[x]:
                    if w < c_lo or w > c_hi or seen[y] == tick:
                        continue
                    if y == v:
                        return True
                    seen[y] = tick
                    nxt.append(y)
            frontier = nxt
        return False

    def min_hops(self, u: int, v: int, c: WeightConstraint) -> Union[int, float]:
        if u == v:
            return 0
        c_lo, c_hi = _bounds(c)
        adj = self.g.adjacency
        seen = self._seen
        self._tick += 1
        tick = self._tick
        seen[u] = tick
        frontier = [u]
        depth = 0
        while frontier:
            depth += 1
            nxt = []
            for x in frontier:
                for y, w in adj[x]:
                    if w < c_lo or w > c_hi or seen[y] == tick:
                        continue
                    if y == v:
                        return depth
                    seen[y] = tick
                    nxt.append(y)
            frontier = nxt
        return INF


def bfs_oracle(g: WeightedGraph, q: Query) -> bool:
    """One-off oracle query; use :class:`BfsOracle` for batches."""
    if not (0 <= q.u < g.vertex_count and 0 <= q.v < g.vertex_count):
        raise IndexError(f"query endpoints ({q.u}, {q.v}) out of range")
    return BfsOracle(g).reachable(q.u, q.v, q.constraint, q.k)


def batch_query(index: LabelIndex, queries: Sequence[Query]) -> tuple[list[QueryResult], float]:
    """Run queries in order against the right engine; returns results and seconds."""
    counted = query_lwkri_counted if index.variant is Variant.LWKRI else query_2hop_counted
    results: list[QueryResult] = []
    append = results.append
    start = time.perf_counter()
    for q in queries:
        append(counted(index, q))
    elapsed = time.perf_counter() - start
    return results, elapsed


def batch_oracle(
    g: WeightedGraph,
    queries: Sequence[Query],
    budget_s: Optional[float] = None,
) -> tuple[list[bool], float, int]:
    """Run the BFS baseline over a batch, stopping once the time budget is spent.

    Returns (answers for completed queries, elapsed seconds, completed count).
    """
    oracle = BfsOracle(g)
    answers: list[bool] = []
    start = time.perf_counter()
    deadline = None if budget_s is None else start + budget_s
    completed = 0
    for q in queries:
        answers.append(oracle.reachable(q.u, q.v, q.constraint, q.k))
        completed += 1
        if deadline is not None and completed % 64 == 0 and time.perf_counter() > deadline:
            break
    elapsed = time.perf_counter() - start
    return answers, elapsed, completed
