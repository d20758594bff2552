"""Benchmark harness: build/size/query timings per index variant plus BFS baseline.

Query timings are medians over ``repeat`` runs of the full batch; builds
run once per variant.  The baseline gets a wall-clock budget (mirroring
the usual practice of cutting off hopeless full-scan baselines); when the
budget is hit the total is extrapolated from the completed prefix and
flagged in the human-readable table.

Two backends produce identical answers: the reference pure-Python engines
and the compiled array engines.  A benchmark always uses the same backend
for the indexes and the BFS baseline so the comparison stays apples to
apples.
"""

from __future__ import annotations

import csv
import statistics
import time
from dataclasses import dataclass
from typing import IO, Optional, Sequence

from .cover import approx_min_cover
from .graph import WeightedGraph
from .labeling import LabelIndex, Variant, build_gwkri, build_lwkri, build_wkri
from .query import Query, batch_oracle, batch_query
from .serialize import serialize

CSV_COLUMNS = (
    "dataset",
    "variant",
    "vertices",
    "edges",
    "cover_size",
    "entries",
    "bytes",
    "build_s",
    "query_total_s",
    "query_avg_us",
)

_VARIANT_OF = {"wkri": Variant.WKRI, "gwkri": Variant.GWKRI, "lwkri": Variant.LWKRI}


@dataclass
class BenchRow:
    dataset: str
    variant: str
    vertices: int
    edges: int
    cover_size: int
    entries: int
    bytes: int
    build_s: float
    query_total_s: float
    query_avg_us: float
    extrapolated: bool = False


def resolve_backend(backend: str) -> str:
    if backend == "auto":
        from . import _fastpath

        return "fast" if _fastpath.HAVE_NUMBA else "python"
    if backend not in ("python", "fast"):
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "fast":
        from . import _fastpath

        if not _fastpath.HAVE_NUMBA:
            raise ValueError("fast backend requested but numba is unavailable")
    return backend


def run_benchmark(
    g: WeightedGraph,
    dataset: str,
    queries: Sequence[Query],
    variants: Sequence[str] = ("wkri", "gwkri", "lwkri"),
    repeat: int = 3,
    bfs_budget_s: Optional[float] = 300.0,
    include_baseline: bool = True,
    backend: str = "auto",
) -> tuple[list[BenchRow], dict[str, object]]:
    """Build the requested variants, time query batches, and time the baseline."""
    backend = resolve_backend(backend)
    rows: list[BenchRow] = []
    indexes: dict[str, object] = {}
    nq = len(queries)

    cover = None
    if any(v in ("gwkri", "lwkri") for v in variants):
        cover = approx_min_cover(g)

    if backend == "fast":
        from . import _fastpath

        _fastpath.warmup()
        csr = _fastpath.graph_csr(g)

    for name in variants:
        if name not in _VARIANT_OF:
            raise ValueError(f"unknown variant {name!r}")
        start = time.perf_counter()
        if backend == "fast":
            index = _fastpath.build_fast(g, _VARIANT_OF[name], cover if name != "wkri" else None)
        elif name == "wkri":
            index = build_wkri(g)
        elif name == "gwkri":
            index = build_gwkri(g, cover)
        else:
            index = build_lwkri(g, cover)
        build_s = time.perf_counter() - start
        indexes[name] = index

        times = []
        for _ in range(max(1, repeat)):
            if backend == "fast":
                t0 = time.perf_counter()
                _fastpath.batch_query_fast(index, queries)
                times.append(time.perf_counter() - t0)
            else:
                _, elapsed = batch_query(index, queries)
                times.append(elapsed)
        total = statistics.median(times)
        rows.append(
            BenchRow(
                dataset=dataset,
                variant=name,
                vertices=g.vertex_count,
                edges=g.edge_count,
                cover_size=len(index.cover) if index.cover else 0,
                entries=index.total_entries(),
                bytes=len(serialize(index)),
                build_s=build_s,
                query_total_s=total,
                query_avg_us=(total / nq * 1e6) if nq else 0.0,
            )
        )

    if include_baseline and nq:
        if backend == "fast":
            elapsed, completed = _fast_baseline(g, queries, csr, bfs_budget_s)
        else:
            _, elapsed, completed = batch_oracle(g, queries, bfs_budget_s)
        extrapolated = completed < nq
        total = elapsed * nq / completed if extrapolated else elapsed
        rows.append(
            BenchRow(
                dataset=dataset,
                variant="bfs",
                vertices=g.vertex_count,
                edges=g.edge_count,
                cover_size=0,
                entries=0,
                bytes=0,
                build_s=0.0,
                query_total_s=total,
                query_avg_us=total / nq * 1e6,
                extrapolated=extrapolated,
            )
        )
    return rows, indexes


def _fast_baseline(g, queries, csr, budget_s):
    """Compiled BFS baseline, chunked so the time budget can cut it off."""
    from . import _fastpath

    start = time.perf_counter()
    deadline = None if budget_s is None else start + budget_s
    completed = 0
    chunk = 512
    while completed < len(queries):
        part = queries[completed : completed + chunk]
        _fastpath.batch_bfs_fast(g, part, csr=csr)
        completed += len(part)
        if deadline is not None and time.perf_counter() > deadline:
            break
    return time.perf_counter() - start, completed


def write_csv(rows: Sequence[BenchRow], sink: IO[str]) -> None:
    writer = csv.writer(sink)
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(
            [
                row.dataset,
                row.variant,
                row.vertices,
                row.edges,
                row.cover_size,
                row.entries,
                row.bytes,
                f"{row.build_s:.6f}",
                f"{row.query_total_s:.6f}",
                f"{row.query_avg_us:.3f}",
            ]
        )


def format_table(rows: Sequence[BenchRow]) -> str:
    headers = ["variant", "entries", "bytes", "build_s", "query_total_s", "query_avg_us"]
    lines = ["  ".join(f"{h:>14}" for h in headers)]
    for row in rows:
        mark = " (budget hit, extrapolated)" if row.extrapolated else ""
        lines.append(
            "  ".join(
                [
                    f"{row.variant:>14}",
                    f"{row.entries:>14}",
                    f"{row.bytes:>14}",
                    f"{row.build_s:>14.3f}",
                    f"{row.query_total_s:>14.4f}",
                    f"{row.query_avg_us:>14.2f}",
                ]
            )
            + mark
        )
    return "\n".join(lines)
