"""Array-based build/query kernels, JIT-compiled with numba when available.

Same algorithms as :mod:`labeling` and :mod:`query`, restructured onto flat
int32 arrays so the hot loops compile: labels live in per-vertex growable
parallel arrays during construction and in one CSR-style flat block
afterwards.  The pure-Python implementations remain the reference; tests
assert the two produce byte-identical label sets.

Everything here is optional: importing the package never requires numba,
and callers fall back to the reference implementation when ``HAVE_NUMBA``
is false.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .cover import CoverSet, VertexOrder, approx_min_cover, cover_order, is_cover
from .graph import WeightedGraph
from .intervals import WeightConstraint
from .labeling import LabelIndex, Variant

try:
    from numba import njit, types
    from numba.typed import Dict as NumbaDict
    from numba.typed import List as NumbaList

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


_HUGE = 1 << 30
# Packed-key limits for the per-hop memo/dedup dictionaries.
_MAX_N = 1 << 24
_MAX_W = 1 << 13
_MAX_D = 1 << 13


def graph_csr(g: WeightedGraph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Adjacency in CSR form (offsets, neighbor ids, weights)."""
    n = g.vertex_count
    off = np.zeros(n + 1, dtype=np.int64)
    for u in range(n):
        off[u + 1] = off[u] + len(g.adjacency[u])
    v = np.empty(off[-1], dtype=np.int32)
    w = np.empty(off[-1], dtype=np.int32)
    pos = 0
    for u in range(n):
        for y, wt in g.adjacency[u]:
            v[pos] = y
            w[pos] = wt
            pos += 1
    return off, v, w


if HAVE_NUMBA:

    @njit(cache=True)
    def _expand_kernel(n, adj_off, adj_v, adj_w, hops, rank, carry, has_carry, small_sigma):
        """All-hops expansion; returns per-vertex entry and group arrays.

        Per vertex, entries live in parallel (lo, hi, k) arrays and are
        partitioned into contiguous per-hop groups described by parallel
        (g_rank, g_end, g_min) arrays; g_min is each group's minimum length,
        kept exact under the deletion rule because a deletion only removes
        entries at least as long as the candidate that replaces them.
        """
        e_lo = NumbaList()
        e_hi = NumbaList()
        e_k = NumbaList()
        g_rank = NumbaList()
        g_end = NumbaList()
        g_min = NumbaList()
        for _ in range(n):
            e_lo.append(np.empty(4, np.int32))
            e_hi.append(np.empty(4, np.int32))
            e_k.append(np.empty(4, np.int32))
            g_rank.append(np.empty(4, np.int32))
            g_end.append(np.empty(4, np.int64))
            g_min.append(np.empty(4, np.int32))
        elen = np.zeros(n, np.int64)
        glen = np.zeros(n, np.int64)

        qcap = 1024
        q_x = np.empty(qcap, np.int32)
        q_lo = np.empty(qcap, np.int32)
        q_hi = np.empty(qcap, np.int32)
        q_d = np.empty(qcap, np.int32)

        # Earlier-hop bound memo: with a small weight alphabet, (vertex,
        # interval) packs into a stamped flat array; otherwise a hash map.
        if small_sigma:
            memo_bound = np.empty(n * 256, np.int32)
            memo_stamp = np.zeros(n * 256, np.int32)
        else:
            memo_bound = np.empty(0, np.int32)
            memo_stamp = np.zeros(0, np.int32)

        # Dense per-rank view of the current hop's groups.
        n_hops = len(hops)
        hop_gstart = np.zeros(n_hops, np.int64)
        hop_gend = np.zeros(n_hops, np.int64)
        hop_gmin = np.zeros(n_hops, np.int32)
        hop_stamp = np.zeros(n_hops, np.int32)

        # Unconstrained 2-hop distance between a vertex and the current hop
        # (from group minima alone).  Candidates strictly shorter than it
        # cannot be explained by any earlier-hop combination, whatever the
        # intervals, so their proof scans are skipped outright.
        d2_val = np.zeros(n, np.int64)
        d2_stamp = np.zeros(n, np.int32)

        for hop_rank in range(n_hops):
            hop = hops[hop_rank]
            h_lo = e_lo[hop]
            h_hi = e_hi[hop]
            h_k = e_k[hop]
            hg_rank = g_rank[hop]
            hg_end = g_end[hop]
            hg_min = g_min[hop]
            tick = hop_rank + 1
            prev = 0
            for gi in range(glen[hop]):
                x = hg_rank[gi]
                hop_gstart[x] = prev
                hop_gend[x] = hg_end[gi]
                hop_gmin[x] = hg_min[gi]
                hop_stamp[x] = tick
                prev = hg_end[gi]

            memo = NumbaDict.empty(types.int64, types.int64)
            seen = NumbaDict.empty(types.int64, types.uint8)

            head = 0
            tail = 0
            q_x[tail] = hop
            q_lo[tail] = _HUGE
            q_hi[tail] = -1
            q_d[tail] = 0
            tail += 1

            while head < tail:
                x = q_x[head]
                lo = q_lo[head]
                hi = q_hi[head]
                nd = q_d[head] + 1
                head += 1
                if nd >= _MAX_D:
                    raise ValueError("path length exceeds the packed-key limit")
                for e in range(adj_off[x], adj_off[x + 1]):
                    y = adj_v[e]
                    ry = rank[y]
                    if 0 <= ry <= hop_rank:
                        continue
                    w = adj_w[e]
                    nlo = w if w < lo else lo
                    nhi = w if w > hi else hi

                    if has_carry and carry[y]:
                        key = ((np.int64(y) << 13 | np.int64(nlo)) << 13 | np.int64(nhi)) << 13 | np.int64(nd)
                        if key in seen:
                            continue
                        seen[key] = np.uint8(1)
                    else:
                        u_lo = e_lo[y]
                        u_hi = e_hi[y]
                        u_k = e_k[y]
                        ug_rank = g_rank[y]
                        ug_end = g_end[y]
                        ug_min = g_min[y]
                        u_elen = elen[y]
                        u_glen = glen[y]

                        # Same-hop group, if present, is the last one.
                        tail_same = u_glen > 0 and ug_rank[u_glen - 1] == hop_rank
                        if tail_same:
                            gstart = ug_end[u_glen - 2] if u_glen > 1 else 0
                            rejected = False
                            for i in range(gstart, u_elen):
                                if u_k[i] <= nd and nlo <= u_lo[i] and u_hi[i] <= nhi:
                                    rejected = True
                                    break
                            if rejected:
                                continue
                            # Drop tail entries the candidate now dominates.
                            wpos = gstart
                            for i in range(gstart, u_elen):
                                if nd <= u_k[i] and u_lo[i] <= nlo and nhi <= u_hi[i]:
                                    continue
                                u_lo[wpos] = u_lo[i]
                                u_hi[wpos] = u_hi[i]
                                u_k[wpos] = u_k[i]
                                wpos += 1
                            if wpos != u_elen:
                                u_elen = wpos
                                elen[y] = wpos
                                ug_end[u_glen - 1] = wpos
                        else:
                            gstart = u_elen

                        check_cross = nd > 1
                        if check_cross:
                            if d2_stamp[y] != tick:
                                d2 = _HUGE
                                for gi in range(u_glen):
                                    rx = ug_rank[gi]
                                    if hop_stamp[rx] == tick:
                                        s = ug_min[gi] + hop_gmin[rx]
                                        if s < d2:
                                            d2 = s
                                d2_val[y] = d2
                                d2_stamp[y] = tick
                            check_cross = nd >= d2_val[y]
                        if check_cross:
                            if small_sigma:
                                slot = y * 256 + (nlo << 4) + nhi
                                bound = np.int64(memo_bound[slot]) if memo_stamp[slot] == tick else np.int64(-1)
                            else:
                                slot = 0
                                mkey = ((np.int64(y) << 13 | np.int64(nlo)) << 13) | np.int64(nhi)
                                bound = memo.get(mkey, np.int64(-1))
                            if bound < 0:
                                # Walk L(y)'s earlier-rank groups; per common
                                # rank the check decomposes into min fitting
                                # length per side, and group minima prune
                                # whole groups before any interval is read.
                                best = _HUGE
                                ng = u_glen - 1 if tail_same else u_glen
                                prev_end = 0
                                for gi in range(ng):
                                    gend_i = ug_end[gi]
                                    rx = ug_rank[gi]
                                    if hop_stamp[rx] != tick or ug_min[gi] + hop_gmin[rx] >= best:
                                        prev_end = gend_i
                                        continue
                                    a = _HUGE
                                    for i in range(prev_end, gend_i):
                                        if u_k[i] < a and nlo <= u_lo[i] and u_hi[i] <= nhi:
                                            a = u_k[i]
                                    prev_end = gend_i
                                    if a + hop_gmin[rx] >= best:
                                        continue
                                    b = _HUGE
                                    for jj in range(hop_gstart[rx], hop_gend[rx]):
                                        if h_k[jj] < b and nlo <= h_lo[jj] and h_hi[jj] <= nhi:
                                            b = h_k[jj]
                                    if a + b < best:
                                        best = a + b
                                        if best <= nd:
                                            break
                                bound = best
                                if small_sigma:
                                    memo_bound[slot] = bound
                                    memo_stamp[slot] = tick
                                else:
                                    memo[mkey] = np.int64(bound)
                            if bound <= nd:
                                continue

                        # Insert, growing the entry/group arrays as needed.
                        if u_elen == u_lo.shape[0]:
                            ncap = u_elen * 2
                            nl = np.empty(ncap, np.int32)
                            nh = np.empty(ncap, np.int32)
                            nk = np.empty(ncap, np.int32)
                            nl[:u_elen] = u_lo
                            nh[:u_elen] = u_hi
                            nk[:u_elen] = u_k
                            e_lo[y] = nl
                            e_hi[y] = nh
                            e_k[y] = nk
                            u_lo = nl
                            u_hi = nh
                            u_k = nk
                        u_lo[u_elen] = nlo
                        u_hi[u_elen] = nhi
                        u_k[u_elen] = nd
                        elen[y] = u_elen + 1
                        if tail_same:
                            ug_end[u_glen - 1] = u_elen + 1
                            if nd < ug_min[u_glen - 1]:
                                ug_min[u_glen - 1] = nd
                        else:
                            if u_glen == ug_rank.shape[0]:
                                ncap = u_glen * 2
                                nr = np.empty(ncap, np.int32)
                                ne = np.empty(ncap, np.int64)
                                nm = np.empty(ncap, np.int32)
                                nr[:u_glen] = ug_rank
                                ne[:u_glen] = ug_end
                                nm[:u_glen] = ug_min
                                g_rank[y] = nr
                                g_end[y] = ne
                                g_min[y] = nm
                                ug_rank = nr
                                ug_end = ne
                                ug_min = nm
                            ug_rank[u_glen] = hop_rank
                            ug_end[u_glen] = u_elen + 1
                            ug_min[u_glen] = nd
                            glen[y] = u_glen + 1

                    if tail == qcap:
                        nqcap = qcap * 2
                        tx = np.empty(nqcap, np.int32)
                        tl = np.empty(nqcap, np.int32)
                        th = np.empty(nqcap, np.int32)
                        td = np.empty(nqcap, np.int32)
                        tx[:qcap] = q_x
                        tl[:qcap] = q_lo
                        th[:qcap] = q_hi
                        td[:qcap] = q_d
                        q_x = tx
                        q_lo = tl
                        q_hi = th
                        q_d = td
                        qcap = nqcap
                    q_x[tail] = y
                    q_lo[tail] = nlo
                    q_hi[tail] = nhi
                    q_d[tail] = nd
                    tail += 1

        return e_lo, e_hi, e_k, g_rank, g_end, g_min, elen, glen

    @njit(cache=True)
    def _finalize_kernel(n, e_lo, e_hi, e_k, g_rank, g_end, g_min, elen, glen, rank, store, has_store):
        """Flatten per-vertex arrays into one CSR block, appending self-entries."""
        offsets = np.zeros(n + 1, np.int64)
        for u in range(n):
            if has_store and not store[u]:
                offsets[u + 1] = offsets[u]
                continue
            cnt = elen[u]
            if rank[u] >= 0:
                cnt += 1
            offsets[u + 1] = offsets[u] + cnt
        total = offsets[n]
        f_rank = np.empty(total, np.int32)
        f_lo = np.empty(total, np.int32)
        f_hi = np.empty(total, np.int32)
        f_k = np.empty(total, np.int32)
        for u in range(n):
            if has_store and not store[u]:
                continue
            pos = offsets[u]
            ul = e_lo[u]
            uh = e_hi[u]
            uk = e_k[u]
            ugr = g_rank[u]
            uge = g_end[u]
            prev = 0
            for gi in range(glen[u]):
                r = ugr[gi]
                for i in range(prev, uge[gi]):
                    f_rank[pos] = r
                    f_lo[pos] = ul[i]
                    f_hi[pos] = uh[i]
                    f_k[pos] = uk[i]
                    pos += 1
                prev = uge[gi]
            if rank[u] >= 0:
                f_rank[pos] = rank[u]
                f_lo[pos] = 0
                f_hi[pos] = 0
                f_k[pos] = 0
        return offsets, f_rank, f_lo, f_hi, f_k

    @njit(cache=True, inline="always")
    def _rendezvous(offsets, f_rank, f_lo, f_hi, f_k, u, v, c_lo, c_hi):
        """Min admissible d1+d2 over common hops of two flat labels."""
        i = offsets[u]
        iend = offsets[u + 1]
        j = offsets[v]
        jend = offsets[v + 1]
        best = _HUGE
        while i < iend and j < jend:
            ru = f_rank[i]
            rv = f_rank[j]
            if ru < rv:
                i += 1
            elif ru > rv:
                j += 1
            else:
                a = _HUGE
                i2 = i
                while i2 < iend and f_rank[i2] == ru:
                    d = f_k[i2]
                    if d < a and (d == 0 or (c_lo <= f_lo[i2] and f_hi[i2] <= c_hi)):
                        a = d
                    i2 += 1
                j2 = j
                if a < best:
                    b = _HUGE
                    while j2 < jend and f_rank[j2] == rv:
                        d = f_k[j2]
                        if d < b and (d == 0 or (c_lo <= f_lo[j2] and f_hi[j2] <= c_hi)):
                            b = d
                        j2 += 1
                    if a + b < best:
                        best = a + b
                else:
                    while j2 < jend and f_rank[j2] == rv:
                        j2 += 1
                i = i2
                j = j2
        return best

    @njit(cache=True)
    def _query_2hop_kernel(offsets, f_rank, f_lo, f_hi, f_k, qu, qv, qlo, qhi, qk, out):
        for t in range(qu.shape[0]):
            u = qu[t]
            v = qv[t]
            if u == v:
                out[t] = 1
                continue
            best = _rendezvous(offsets, f_rank, f_lo, f_hi, f_k, u, v, qlo[t], qhi[t])
            out[t] = 1 if best <= qk[t] else 0

    @njit(cache=True)
    def _query_lwkri_kernel(
        offsets, f_rank, f_lo, f_hi, f_k, member, adj_off, adj_v, adj_w, qu, qv, qlo, qhi, qk, out
    ):
        for t in range(qu.shape[0]):
            u = qu[t]
            v = qv[t]
            if u == v:
                out[t] = 1
                continue
            c_lo = qlo[t]
            c_hi = qhi[t]
            k = qk[t]
            if member[u] and member[v]:
                best = _rendezvous(offsets, f_rank, f_lo, f_hi, f_k, u, v, c_lo, c_hi)
                out[t] = 1 if best <= k else 0
                continue
            ans = 0
            if member[u] or member[v]:
                anchor = u if member[u] else v
                outside = v if member[u] else u
                if k >= 1:
                    for e in range(adj_off[outside], adj_off[outside + 1]):
                        w = adj_w[e]
                        if w < c_lo or w > c_hi:
                            continue
                        x = adj_v[e]
                        if x == anchor:
                            ans = 1
                            break
                        if _rendezvous(offsets, f_rank, f_lo, f_hi, f_k, anchor, x, c_lo, c_hi) <= k - 1:
                            ans = 1
                            break
            elif k >= 2:
                for ei in range(adj_off[u], adj_off[u + 1]):
                    wy = adj_w[ei]
                    if wy < c_lo or wy > c_hi:
                        continue
                    y = adj_v[ei]
                    for ej in range(adj_off[v], adj_off[v + 1]):
                        wx = adj_w[ej]
                        if wx < c_lo or wx > c_hi:
                            continue
                        x = adj_v[ej]
                        if x == y or _rendezvous(offsets, f_rank, f_lo, f_hi, f_k, y, x, c_lo, c_hi) <= k - 2:
                            ans = 1
                            break
                    if ans == 1:
                        break
            out[t] = ans

    @njit(cache=True)
    def _bfs_kernel(n, adj_off, adj_v, adj_w, qu, qv, qlo, qhi, qk, out):
        seen = np.zeros(n, np.int64)
        frontier = np.empty(n, np.int32)
        nxt = np.empty(n, np.int32)
        tick = 0
        for t in range(qu.shape[0]):
            u = qu[t]
            v = qv[t]
            k = qk[t]
            if u == v:
                out[t] = 1
                continue
            if k <= 0:
                out[t] = 0
                continue
            c_lo = qlo[t]
            c_hi = qhi[t]
            tick += 1
            seen[u] = tick
            frontier[0] = u
            fsize = 1
            depth = 0
            ans = 0
            while fsize > 0 and depth < k and ans == 0:
                depth += 1
                nsize = 0
                for fi in range(fsize):
                    x = frontier[fi]
                    for e in range(adj_off[x], adj_off[x + 1]):
                        w = adj_w[e]
                        if w < c_lo or w > c_hi:
                            continue
                        y = adj_v[e]
                        if seen[y] == tick:
                            continue
                        if y == v:
                            ans = 1
                            break
                        seen[y] = tick
                        nxt[nsize] = y
                        nsize += 1
                    if ans == 1:
                        break
                tmp = frontier
                frontier = nxt
                nxt = tmp
                fsize = nsize
            out[t] = ans


@dataclass
class ArrayLabelIndex:
    """Flat-array twin of :class:`LabelIndex` for large builds.

    ``offsets[u] : offsets[u+1]`` slices the per-vertex entries out of the
    parallel (rank, lo, hi, dist) arrays; same conventions as the packed
    lists, self-entries encoded with dist 0.
    """

    variant: Variant
    vertex_count: int
    hops: tuple[int, ...]
    rank: np.ndarray
    offsets: np.ndarray
    ent_rank: np.ndarray
    ent_lo: np.ndarray
    ent_hi: np.ndarray
    ent_k: np.ndarray
    cover: Optional[CoverSet] = None
    csr: Optional[tuple[np.ndarray, np.ndarray, np.ndarray]] = field(default=None, repr=False)

    def total_entries(self) -> int:
        return int(self.offsets[-1])

    def to_label_index(self, adjacency=None) -> LabelIndex:
        entries = []
        for u in range(self.vertex_count):
            s, e = int(self.offsets[u]), int(self.offsets[u + 1])
            entries.append(
                [
                    (int(self.ent_rank[i]), int(self.ent_lo[i]), int(self.ent_hi[i]), int(self.ent_k[i]))
                    for i in range(s, e)
                ]
            )
        return LabelIndex(
            variant=self.variant,
            vertex_count=self.vertex_count,
            hops=self.hops,
            rank=tuple(int(r) for r in self.rank),
            entries=entries,
            cover=self.cover,
            adjacency=adjacency,
        )


def _check_limits(g: WeightedGraph) -> None:
    if g.vertex_count >= _MAX_N:
        raise ValueError("graph too large for the packed-key fast path")
    if any(w >= _MAX_W for _, _, w in g.edges):
        raise ValueError("edge weight too large for the packed-key fast path")


def build_fast(
    g: WeightedGraph,
    variant: Variant,
    cover: Optional[CoverSet] = None,
    order: Optional[VertexOrder] = None,
    prune_carriers: bool = False,
) -> ArrayLabelIndex:
    """Array-backend equivalent of build_wkri/build_gwkri/build_lwkri."""
    if not HAVE_NUMBA:
        raise RuntimeError("numba is not available; use the reference builders")
    _check_limits(g)

    if variant is Variant.WKRI:
        from .cover import degree_descending_order

        if order is None:
            order = degree_descending_order(g)
        if len(order.order) != g.vertex_count:
            raise ValueError("WKRI order must be a permutation of all vertices")
        cover = None
    else:
        if cover is None:
            cover = approx_min_cover(g)
        elif not is_cover(g, cover):
            raise ValueError("supplied vertex set is not a cover of the graph")
        if order is None:
            order = cover_order(g, cover)
        if sorted(order.order) != sorted(cover.members):
            raise ValueError("hop order must range over exactly the cover members")

    adj_off, adj_v, adj_w = graph_csr(g)
    hops = np.asarray(order.order, dtype=np.int32)
    rank = np.asarray(order.rank, dtype=np.int32)

    if variant is Variant.LWKRI and not prune_carriers:
        carry = np.array([not m for m in cover.membership], dtype=np.bool_)
        has_carry = True
    else:
        carry = np.zeros(g.vertex_count, dtype=np.bool_)
        has_carry = False

    small_sigma = all(w < 16 for _, _, w in g.edges)
    lab = _expand_kernel(
        g.vertex_count, adj_off, adj_v, adj_w, hops, rank, carry, has_carry, small_sigma
    )

    if variant is Variant.LWKRI:
        store = np.asarray(cover.membership, dtype=np.bool_)
        has_store = True
    else:
        store = np.zeros(g.vertex_count, dtype=np.bool_)
        has_store = False
    offsets, f_rank, f_lo, f_hi, f_k = _finalize_kernel(
        g.vertex_count, lab[0], lab[1], lab[2], lab[3], lab[4], lab[5], lab[6], lab[7], rank, store, has_store
    )
    return ArrayLabelIndex(
        variant=variant,
        vertex_count=g.vertex_count,
        hops=tuple(order.order),
        rank=rank,
        offsets=offsets,
        ent_rank=f_rank,
        ent_lo=f_lo,
        ent_hi=f_hi,
        ent_k=f_k,
        cover=cover,
        csr=(adj_off, adj_v, adj_w) if variant is Variant.LWKRI else None,
    )


def _query_arrays(queries: Sequence) -> tuple[np.ndarray, ...]:
    m = len(queries)
    qu = np.empty(m, np.int32)
    qv = np.empty(m, np.int32)
    qlo = np.empty(m, np.int64)
    qhi = np.empty(m, np.int64)
    qk = np.empty(m, np.int32)
    for i, q in enumerate(queries):
        qu[i] = q.u
        qv[i] = q.v
        c = q.constraint
        qlo[i] = 0 if c.lower is None else c.lower
        qhi[i] = (1 << 62) if c.upper is None else c.upper
        qk[i] = q.k
    return qu, qv, qlo, qhi, qk


def batch_query_fast(index: ArrayLabelIndex, queries: Sequence) -> np.ndarray:
    """Answer a batch against an array index; returns a uint8 vector."""
    if not HAVE_NUMBA:
        raise RuntimeError("numba is not available")
    qu, qv, qlo, qhi, qk = _query_arrays(queries)
    out = np.zeros(len(queries), np.uint8)
    if index.variant is Variant.LWKRI:
        adj_off, adj_v, adj_w = index.csr
        member = np.asarray(index.cover.membership, dtype=np.bool_)
        _query_lwkri_kernel(
            index.offsets,
            index.ent_rank,
            index.ent_lo,
            index.ent_hi,
            index.ent_k,
            member,
            adj_off,
            adj_v,
            adj_w,
            qu,
            qv,
            qlo,
            qhi,
            qk,
            out,
        )
    else:
        _query_2hop_kernel(
            index.offsets, index.ent_rank, index.ent_lo, index.ent_hi, index.ent_k, qu, qv, qlo, qhi, qk, out
        )
    return out


def batch_bfs_fast(g: WeightedGraph, queries: Sequence, csr=None) -> np.ndarray:
    """Constraint-filtered depth-limited BFS baseline over a batch."""
    if not HAVE_NUMBA:
        raise RuntimeError("numba is not available")
    if csr is None:
        csr = graph_csr(g)
    adj_off, adj_v, adj_w = csr
    qu, qv, qlo, qhi, qk = _query_arrays(queries)
    out = np.zeros(len(queries), np.uint8)
    _bfs_kernel(g.vertex_count, adj_off, adj_v, adj_w, qu, qv, qlo, qhi, qk, out)
    return out


def warmup() -> None:
    """Compile the kernels on a toy input (first call is otherwise slow)."""
    if not HAVE_NUMBA:
        return
    from .graph import from_edges
    from .query import Query

    g = from_edges(3, [(0, 1, 1), (1, 2, 2)])
    for variant in (Variant.WKRI, Variant.GWKRI, Variant.LWKRI):
        idx = build_fast(g, variant)
        batch_query_fast(idx, [Query(0, 2, WeightConstraint.between(1, 2), 2)])
    batch_bfs_fast(g, [Query(0, 2, WeightConstraint.between(1, 2), 2)])
