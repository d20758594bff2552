"""Construction of the three dominance-pruned 2-hop reachability indexes.

Every labeled vertex u carries entries (hop_rank, lo, hi, dist): some path
of ``dist`` edges connects u to the hop vertex and its edge weights span
exactly [lo, hi].  Entries are produced by a multi-label breadth-first
expansion from each hop in priority order; a vertex may be reached many
times with different (interval, depth) states, because the useful states
form a Pareto frontier, not a single shortest path.

Two rules keep the index minimal.  A candidate is dropped when an existing
entry at the same hop has a sub-interval and is no longer (and conversely,
existing entries the candidate makes redundant are deleted).  A candidate
at hop v stored on vertex u is also dropped when some earlier hop x already
explains it: entries (x, i2, k2) on u and (x, i3, k3) on v whose combined
interval fits inside the candidate's with k2 + k3 within its length.
Rejected candidates stop the expansion along that branch; the surviving
states' extensions would be rejected too, since extending both sides of a
dominance pair by the same edge preserves the dominance.

Index variants:

* ``WKRI``   every vertex is a hop; labels stored everywhere.
* ``GWKRI``  only vertex-cover members are hops; labels stored everywhere.
* ``LWKRI``  cover hops, labels stored only on cover members; states at
  non-cover vertices are carried through unconditionally (they cannot be
  checked against a label that is never stored) and the query side
  compensates with neighbor expansion.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import IO, Callable, Optional, Sequence

from .cover import CoverSet, VertexOrder, approx_min_cover, cover_order, degree_descending_order, is_cover
from .graph import WeightedGraph
from .intervals import EMPTY, WeightInterval

_INF = float("inf")


class Variant(enum.Enum):
    WKRI = 0
    GWKRI = 1
    LWKRI = 2


class InsertOutcome(enum.Enum):
    INSERTED = "inserted"
    REJECTED_SAME_HOP = "rejected_same_hop"
    REJECTED_CROSS_HOP = "rejected_cross_hop"


@dataclass(frozen=True)
class LabelEntry:
    """One label item: a path of ``dist`` edges to the hop spanning ``interval``.

    ``dist`` 0 marks the self-entry, whose interval is EMPTY (stored and
    printed as 0,0 for table compatibility, but structurally empty).
    """

    hop_rank: int
    interval: WeightInterval
    dist: int


# Packed in-memory entry: (hop_rank, lo, hi, dist); self-entries are
# (rank, 0, 0, 0) and dist == 0 is the authoritative EMPTY flag.
PackedEntry = tuple[int, int, int, int]


@dataclass
class LabelIndex:
    """A finished, immutable label index over dense vertex ids."""

    variant: Variant
    vertex_count: int
    hops: tuple[int, ...]
    rank: tuple[int, ...]
    entries: list[list[PackedEntry]]
    cover: Optional[CoverSet] = None
    adjacency: Optional[list[list[tuple[int, int]]]] = field(default=None, repr=False)

    @property
    def order(self) -> VertexOrder:
        return VertexOrder(self.hops, self.rank)

    def has_label(self, u: int) -> bool:
        if self.variant is Variant.LWKRI:
            return self.cover is not None and self.cover.membership[u]
        return True

    def entries_of(self, u: int) -> tuple[LabelEntry, ...]:
        out = []
        for r, lo, hi, d in self.entries[u]:
            interval = EMPTY if d == 0 else WeightInterval(lo, hi)
            out.append(LabelEntry(r, interval, d))
        return tuple(out)

    def hop_vertex(self, rank: int) -> int:
        return self.hops[rank]

    def total_entries(self) -> int:
        return sum(len(e) for e in self.entries)


_HUGE = 1 << 30


def _cross_bound(
    label_u: dict[int, list[tuple[int, int, int]]],
    hop_label: dict[int, list[tuple[int, int, int]]],
    lo: int,
    hi: int,
    dist: int,
) -> int:
    """Shortest earlier-hop combination whose interval fits inside [lo, hi].

    A combined interval union(i2, i3) fits inside the candidate's interval
    exactly when both parts fit, so the search decomposes per rank into
    (min length of a fitting entry on u) + (same on the hop).  Scanning
    stops early once a combination within ``dist`` is found; the returned
    value is then an upper bound, which is all the caller needs because
    later candidates with the same interval only get longer.
    """
    best = _HUGE
    small, big = (label_u, hop_label) if len(label_u) <= len(hop_label) else (hop_label, label_u)
    for x, g1 in small.items():
        g2 = big.get(x)
        if g2 is None:
            continue
        a = _HUGE
        for lo2, hi2, k2 in g1:
            if k2 < a and lo <= lo2 and hi2 <= hi:
                a = k2
        if a + 1 >= best:
            continue
        b = _HUGE
        for lo3, hi3, k3 in g2:
            if k3 < b and lo <= lo3 and hi3 <= hi:
                b = k3
        if a + b >= best:
            continue
        best = a + b
        if best <= dist:
            return best
    return best


def try_insert(
    label_u: dict[int, list[tuple[int, int, int]]],
    hop_label: dict[int, list[tuple[int, int, int]]],
    hop_rank: int,
    lo: int,
    hi: int,
    dist: int,
    cross_memo: Optional[dict[tuple[int, int], int]] = None,
) -> InsertOutcome:
    """Insert candidate (hop_rank, [lo, hi], dist) into a label under the pruning rules.

    ``label_u`` maps hop rank to that hop's entry group on the vertex being
    labeled; ``hop_label`` is the same structure for the hop currently being
    processed (used for the earlier-hop rule).  Self-entries are never kept
    in these dicts: an empty interval cannot participate in either rule.
    Groups may only ever gain entries at the currently processed rank, so
    keys arrive in ascending order.

    ``cross_memo`` caches earlier-hop bounds per interval for one vertex
    within one hop's expansion; both labels' earlier-rank groups are frozen
    for that duration and candidate depths never decrease, so a cached
    bound stays valid.
    """
    grp = label_u.get(hop_rank)
    if grp is not None:
        for lo1, hi1, k1 in grp:
            if k1 <= dist and lo <= lo1 and hi1 <= hi:
                return InsertOutcome.REJECTED_SAME_HOP
        kept = [t for t in grp if not (dist <= t[2] and t[0] <= lo and hi <= t[1])]
        if len(kept) != len(grp):
            grp[:] = kept

    # A combination through an earlier hop needs two real entries, each of
    # length >= 1, so a depth-1 candidate can never be explained this way.
    if dist > 1:
        if cross_memo is None:
            if _cross_bound(label_u, hop_label, lo, hi, dist) <= dist:
                return InsertOutcome.REJECTED_CROSS_HOP
        else:
            key = (lo, hi)
            bound = cross_memo.get(key)
            if bound is None:
                bound = _cross_bound(label_u, hop_label, lo, hi, dist)
                cross_memo[key] = bound
            if bound <= dist:
                return InsertOutcome.REJECTED_CROSS_HOP

    if grp is None:
        label_u[hop_rank] = [(lo, hi, dist)]
    else:
        grp.append((lo, hi, dist))
    return InsertOutcome.INSERTED


def _expand_all_hops(
    g: WeightedGraph,
    hops: Sequence[int],
    rank: Sequence[int],
    carry_mask: Optional[Sequence[bool]],
) -> list[dict[int, list[tuple[int, int, int]]]]:
    """Run the pruned multi-label BFS from every hop in order.

    ``carry_mask`` marks vertices whose states are carried through without
    labeling (LWKRI non-cover vertices); everywhere else a state survives
    only if its candidate entry is inserted.
    """
    n = g.vertex_count
    labels: list[dict[int, list[tuple[int, int, int]]]] = [{} for _ in range(n)]
    adj = g.adjacency
    inserted = InsertOutcome.INSERTED

    for hop_rank, hop in enumerate(hops):
        hop_label = labels[hop]
        queue: deque = deque()
        queue.append((hop, _INF, -1, 0))
        seen_carry: dict[int, set] = {}
        cross_memo: dict[int, dict[tuple[int, int], int]] = {}
        pop = queue.popleft
        push = queue.append
        while queue:
            x, lo, hi, d = pop()
            nd = d + 1
            for y, w in adj[x]:
                ry = rank[y]
                if 0 <= ry <= hop_rank:
                    continue
                nlo = w if w < lo else lo
                nhi = w if w > hi else hi
                if carry_mask is not None and carry_mask[y]:
                    state = (nlo, nhi, nd)
                    states = seen_carry.get(y)
                    if states is None:
                        seen_carry[y] = {state}
                    elif state in states:
                        continue
                    else:
                        states.add(state)
                    push((y, nlo, nhi, nd))
                else:
                    memo = cross_memo.get(y)
                    if memo is None:
                        memo = cross_memo[y] = {}
                    if try_insert(labels[y], hop_label, hop_rank, nlo, nhi, nd, memo) is inserted:
                        push((y, nlo, nhi, nd))
    return labels


def _finalize(
    labels: list[dict[int, list[tuple[int, int, int]]]],
    rank: Sequence[int],
    store_mask: Optional[Sequence[bool]],
) -> list[list[PackedEntry]]:
    """Flatten per-hop groups into rank-sorted packed lists plus self-entries.

    Entries on a vertex always reference hops of strictly smaller rank, so
    its own self-entry sorts last.  Ranked vertices get a self-entry even
    when nothing else reached them; unranked vertices never do (no query
    can meet at a hop that does not exist).
    """
    out: list[list[PackedEntry]] = []
    for u, groups in enumerate(labels):
        if store_mask is not None and not store_mask[u]:
            out.append([])
            continue
        flat: list[PackedEntry] = []
        for r in sorted(groups):
            flat.extend((r, lo, hi, d) for lo, hi, d in groups[r])
        if rank[u] >= 0:
            flat.append((rank[u], 0, 0, 0))
        out.append(flat)
    return out


def build_wkri(g: WeightedGraph, order: Optional[VertexOrder] = None) -> LabelIndex:
    """Full index: every vertex is a hop, in degree-descending order by default."""
    if order is None:
        order = degree_descending_order(g)
    if len(order.order) != g.vertex_count:
        raise ValueError("WKRI order must be a permutation of all vertices")
    labels = _expand_all_hops(g, order.order, order.rank, None)
    return LabelIndex(
        variant=Variant.WKRI,
        vertex_count=g.vertex_count,
        hops=order.order,
        rank=order.rank,
        entries=_finalize(labels, order.rank, None),
    )


def _checked_cover_order(
    g: WeightedGraph, cover: Optional[CoverSet], order: Optional[VertexOrder]
) -> tuple[CoverSet, VertexOrder]:
    if cover is None:
        cover = approx_min_cover(g)
    elif not is_cover(g, cover):
        raise ValueError("supplied vertex set is not a cover of the graph")
    if order is None:
        order = cover_order(g, cover)
    if sorted(order.order) != sorted(cover.members):
        raise ValueError("hop order must range over exactly the cover members")
    return cover, order


def build_gwkri(
    g: WeightedGraph,
    cover: Optional[CoverSet] = None,
    order: Optional[VertexOrder] = None,
) -> LabelIndex:
    """Cover-hop index with labels stored for every vertex."""
    cover, order = _checked_cover_order(g, cover, order)
    labels = _expand_all_hops(g, order.order, order.rank, None)
    return LabelIndex(
        variant=Variant.GWKRI,
        vertex_count=g.vertex_count,
        hops=order.order,
        rank=order.rank,
        entries=_finalize(labels, order.rank, None),
        cover=cover,
    )


def build_lwkri(
    g: WeightedGraph,
    cover: Optional[CoverSet] = None,
    order: Optional[VertexOrder] = None,
    prune_carriers: bool = False,
) -> LabelIndex:
    """Cover-hop index with labels stored only on cover members.

    States passing through non-cover vertices are normally carried on
    unconditionally (deduplicated exactly); with ``prune_carriers`` they
    are additionally subjected to the redundancy rules against a scratch
    label that is discarded afterwards.  The flag can only reduce work;
    stored labels and query answers are unchanged.
    """
    cover, order = _checked_cover_order(g, cover, order)
    store = list(cover.membership)
    carry = None if prune_carriers else [not b for b in store]
    labels = _expand_all_hops(g, order.order, order.rank, carry)
    return LabelIndex(
        variant=Variant.LWKRI,
        vertex_count=g.vertex_count,
        hops=order.order,
        rank=order.rank,
        entries=_finalize(labels, order.rank, store),
        cover=cover,
        adjacency=g.adjacency,
    )


def scan_redundancy(index: LabelIndex) -> list[str]:
    """Post-hoc audit of both pruning rules; empty result means a clean index.

    Re-checks every stored entry: no same-hop pair may be comparable under
    dominance, and no entry may be explained by a pair of entries at an
    earlier hop (one on the vertex, one on the entry's own hop vertex).
    """
    violations: list[str] = []
    groups_of: list[dict[int, list[tuple[int, int, int]]]] = []
    for u in range(index.vertex_count):
        groups: dict[int, list[tuple[int, int, int]]] = {}
        for r, lo, hi, d in index.entries[u]:
            if d == 0:
                if r != index.rank[u]:
                    violations.append(f"vertex {u}: foreign self-entry at rank {r}")
                continue
            groups.setdefault(r, []).append((lo, hi, d))
        groups_of.append(groups)

    for u in range(index.vertex_count):
        for r, grp in groups_of[u].items():
            for i in range(len(grp)):
                lo1, hi1, k1 = grp[i]
                for j in range(len(grp)):
                    if i == j:
                        continue
                    lo2, hi2, k2 = grp[j]
                    if lo2 <= lo1 and hi1 <= hi2 and k1 <= k2:
                        violations.append(
                            f"vertex {u} hop rank {r}: ({lo1},{hi1},{k1}) makes ({lo2},{hi2},{k2}) redundant"
                        )

    for u in range(index.vertex_count):
        for r, grp in groups_of[u].items():
            hop_groups = groups_of[index.hops[r]]
            for lo, hi, d in grp:
                for x, g1 in groups_of[u].items():
                    if x >= r:
                        continue
                    g2 = hop_groups.get(x)
                    if g2 is None:
                        continue
                    for lo2, hi2, k2 in g1:
                        for lo3, hi3, k3 in g2:
                            if k2 + k3 <= d and lo <= min(lo2, lo3) and max(hi2, hi3) <= hi:
                                violations.append(
                                    f"vertex {u} hop rank {r}: ({lo},{hi},{d}) explained via earlier hop rank {x}"
                                )
    return violations


def dump_index(index: LabelIndex, sink: IO[str], name_of: Optional[Callable[[int], object]] = None) -> None:
    """Write the index as one ``L(u): (hop,ws,we,k) ...`` line per labeled vertex.

    Self-entries print as (u,0,0,0).  ``name_of`` maps dense ids to display
    ids (external ids under the CLI); default is the dense id itself.
    """
    if name_of is None:
        name_of = lambda v: v
    for u in range(index.vertex_count):
        if not index.has_label(u):
            continue
        parts = []
        for r, lo, hi, d in index.entries[u]:
            hop = name_of(index.hops[r])
            parts.append(f"({hop},{lo},{hi},{d})")
        sink.write(f"L({name_of(u)}): {' '.join(parts)}\n")
