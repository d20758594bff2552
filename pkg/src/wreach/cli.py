"""Command-line front end.

Subcommands: ``build``, ``dump``, ``query``, ``gen-weights``, ``workload``,
``verify``, ``bench``.  Vertex ids on the command line and in query files
are the external ids of the input edge list; ``build`` drops a ``.idmap``
sidecar next to the index so later commands can translate.

Exit codes: 0 success, 1 verification mismatch, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import bench as bench_mod
from . import verify as verify_mod
from .cover import CoverSet, approx_min_cover, restricted_order, explicit_order, is_cover, TieBreak
from .graph import GraphParseError, WeightedGraph, load_edge_list, reassign_weights, write_edge_list
from .labeling import LabelIndex, Variant, build_gwkri, build_lwkri, build_wkri, dump_index
from .query import Query, batch_query, query_index
from .serialize import IndexFormatError, deserialize, serialize
from .workload import QueryParseError, WorkloadSpec, generate_workload, read_query_file, write_query_file

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

_VARIANTS = ("wkri", "gwkri", "lwkri")


class CliError(Exception):
    """Fatal usage or I/O problem; message goes to stderr, exit code 2."""


def _load_graph(path: str) -> WeightedGraph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return load_edge_list(fh)
    except OSError as exc:
        raise CliError(f"cannot read graph {path!r}: {exc}") from exc
    except GraphParseError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _load_index(path: str) -> LabelIndex:
    try:
        with open(path, "rb") as fh:
            return deserialize(fh.read())
    except OSError as exc:
        raise CliError(f"cannot read index {path!r}: {exc}") from exc
    except IndexFormatError as exc:
        raise CliError(f"{path}: {exc}") from exc


def _idmap_path(index_path: str) -> Path:
    return Path(index_path + ".idmap")


def _write_idmap(index_path: str, g: WeightedGraph) -> None:
    if g.external_ids is None:
        return
    with open(_idmap_path(index_path), "w", encoding="utf-8") as fh:
        for ext in g.external_ids:
            fh.write(f"{ext}\n")


class IdMap:
    """external id <-> dense id translation, identity when no sidecar exists."""

    def __init__(self, external_ids: Optional[list[int]], vertex_count: int):
        self.external_ids = external_ids
        self.vertex_count = vertex_count
        self._to_dense = (
            {ext: dense for dense, ext in enumerate(external_ids)} if external_ids is not None else None
        )

    @classmethod
    def for_index(cls, index_path: str, vertex_count: int) -> "IdMap":
        path = _idmap_path(index_path)
        if not path.exists():
            return cls(None, vertex_count)
        ids = [int(line) for line in path.read_text(encoding="utf-8").split()]
        if len(ids) != vertex_count:
            raise CliError(f"{path}: id map has {len(ids)} entries, index has {vertex_count} vertices")
        return cls(ids, vertex_count)

    def to_dense(self, ext: int) -> int:
        if self._to_dense is None:
            if not 0 <= ext < self.vertex_count:
                raise KeyError(ext)
            return ext
        return self._to_dense[ext]

    def to_external(self, dense: int) -> int:
        return self.external_ids[dense] if self.external_ids is not None else dense


def _read_order_file(path: str) -> list[int]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return [int(tok) for tok in fh.read().split()]
    except OSError as exc:
        raise CliError(f"cannot read order file {path!r}: {exc}") from exc
    except ValueError as exc:
        raise CliError(f"{path}: order file must contain integer ids: {exc}") from exc


def _tie_break(name: str) -> TieBreak:
    return TieBreak.DESCENDING_ID if name == "descending-id" else TieBreak.ASCENDING_ID


def cmd_build(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    order_ids = None
    if args.order_file:
        ext_order = _read_order_file(args.order_file)
        idmap = IdMap(g.external_ids, g.vertex_count)
        try:
            order_ids = [idmap.to_dense(x) for x in ext_order]
        except KeyError as exc:
            raise CliError(f"order file references unknown vertex id {exc.args[0]}") from None

    tie = _tie_break(args.tie_break)
    try:
        if args.variant == "wkri":
            from .cover import degree_descending_order

            order = explicit_order(order_ids, g.vertex_count) if order_ids else degree_descending_order(g, tie)
            cover = None
        else:
            cover = approx_min_cover(g, tie)
            if order_ids is not None:
                members = tuple(order_ids)
                membership = tuple(v in set(order_ids) for v in range(g.vertex_count))
                cover = CoverSet(members, membership)
                if not is_cover(g, cover):
                    raise CliError("order file is not a vertex cover of the graph")
                order = restricted_order(order_ids, g.vertex_count)
            else:
                order = restricted_order(cover.members, g.vertex_count)
    except ValueError as exc:
        raise CliError(f"invalid hop order: {exc}") from exc

    backend = args.backend
    if backend == "auto":
        from . import _fastpath

        backend = "fast" if _fastpath.HAVE_NUMBA and g.vertex_count + g.edge_count >= 20_000 else "python"

    start = time.perf_counter()
    if backend == "fast":
        from . import _fastpath

        index = _fastpath.build_fast(g, Variant[args.variant.upper()], cover, order)
    elif args.variant == "wkri":
        index = build_wkri(g, order)
    else:
        builder = build_gwkri if args.variant == "gwkri" else build_lwkri
        index = builder(g, cover, order)
    build_s = time.perf_counter() - start

    blob = serialize(index)
    try:
        with open(args.output, "wb") as fh:
            fh.write(blob)
    except OSError as exc:
        raise CliError(f"cannot write {args.output!r}: {exc}") from exc
    _write_idmap(args.output, g)

    if args.dump_cover and index.cover is not None:
        idmap = IdMap(g.external_ids, g.vertex_count)
        with open(args.dump_cover, "w", encoding="utf-8") as fh:
            for v in index.cover.members:
                fh.write(f"{idmap.to_external(v)}\n")

    summary = (
        f"variant={args.variant} vertices={g.vertex_count} edges={g.edge_count} "
        f"entries={index.total_entries()} bytes={len(blob)} build_s={build_s:.3f}"
    )
    if index.cover is not None:
        summary += f" cover={len(index.cover)}"
    print(summary, file=sys.stderr)
    return EXIT_OK


def cmd_dump(args: argparse.Namespace) -> int:
    index = _load_index(args.index)
    idmap = IdMap.for_index(args.index, index.vertex_count)
    dump_index(index, sys.stdout, name_of=idmap.to_external)
    return EXIT_OK


def cmd_query(args: argparse.Namespace) -> int:
    index = _load_index(args.index)
    idmap = IdMap.for_index(args.index, index.vertex_count)

    raw: list[tuple[int, int, object, int, object]] = []
    if args.queries:
        try:
            with open(args.queries, "r", encoding="utf-8") as fh:
                raw = read_query_file(fh)
        except OSError as exc:
            raise CliError(f"cannot read {args.queries!r}: {exc}") from exc
        except QueryParseError as exc:
            raise CliError(f"{args.queries}: {exc}") from exc
    else:
        from .workload import parse_query_tokens

        for text in args.q:
            try:
                raw.append(parse_query_tokens(text.split()))
            except QueryParseError as exc:
                raise CliError(f"query {text!r}: {exc}") from exc

    had_errors = False
    queries: list[Optional[Query]] = []
    for u_ext, v_ext, c, k, _expected in raw:
        try:
            queries.append(Query(idmap.to_dense(u_ext), idmap.to_dense(v_ext), c, k))
        except KeyError:
            queries.append(None)
            had_errors = True

    valid = [q for q in queries if q is not None]
    results, elapsed = batch_query(index, valid)
    it = iter(results)
    for q in queries:
        print("ERR" if q is None else int(next(it).reachable))
    print(
        f"{len(valid)} queries in {elapsed:.6f}s"
        + (f" ({elapsed / len(valid) * 1e6:.2f} us/query)" if valid else ""),
        file=sys.stderr,
    )
    return EXIT_USAGE if had_errors else EXIT_OK


def cmd_gen_weights(args: argparse.Namespace) -> int:
    g = _load_graph(args.input)
    g2 = reassign_weights(g, args.sigma, args.seed)
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            write_edge_list(g2, fh)
    except OSError as exc:
        raise CliError(f"cannot write {args.output!r}: {exc}") from exc
    print(f"rewrote {g2.edge_count} edge weights into [0, {args.sigma}]", file=sys.stderr)
    return EXIT_OK


def cmd_workload(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    spec = WorkloadSpec(
        total=args.total,
        reachable_fraction=args.reachable_fraction,
        semi_fraction=args.semi_fraction,
        weight_lo=args.weight_lo,
        weight_hi=args.weight_hi,
        k_min=args.k_min,
        k_max=args.k_max,
        seed=args.seed,
    )
    items = generate_workload(g, spec)
    idmap = IdMap(g.external_ids, g.vertex_count)
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            write_query_file(fh, items, name_of=idmap.to_external)
    except OSError as exc:
        raise CliError(f"cannot write {args.output!r}: {exc}") from exc
    reachable = sum(1 for _, ans in items if ans)
    print(f"wrote {len(items)} queries ({reachable} reachable)", file=sys.stderr)
    if len(items) < spec.total:
        print(f"warning: only {len(items)} of {spec.total} queries generated", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if args.index:
        prebuilt = _load_index(args.index)
        name = {Variant.WKRI: "wkri", Variant.GWKRI: "gwkri", Variant.LWKRI: "lwkri"}[prebuilt.variant]
        indexes = {name: prebuilt}
    else:
        indexes = verify_mod.build_all(g, args.variants)

    weights = {w for _, _, w in g.edges}
    exhaustive = g.vertex_count <= args.exhaustive_max_n and len(weights) <= 8
    if exhaustive:
        mismatches = verify_mod.check_exhaustive(g, indexes)
        mode = "exhaustive"
    else:
        mismatches = verify_mod.check_sampled(g, indexes, args.samples, args.seed)
        mode = f"{args.samples} sampled"

    if mismatches:
        print(f"FAIL: {len(mismatches)} mismatch(es) [{mode}]", file=sys.stderr)
        print(verify_mod.format_counterexample(g, mismatches[0]), file=sys.stderr)
        return EXIT_MISMATCH
    print(f"PASS: engines agree with the BFS oracle [{mode}]", file=sys.stderr)
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    idmap = IdMap(g.external_ids, g.vertex_count)
    try:
        with open(args.workload, "r", encoding="utf-8") as fh:
            raw = read_query_file(fh)
    except OSError as exc:
        raise CliError(f"cannot read {args.workload!r}: {exc}") from exc
    except QueryParseError as exc:
        raise CliError(f"{args.workload}: {exc}") from exc
    try:
        queries = [Query(idmap.to_dense(u), idmap.to_dense(v), c, k) for u, v, c, k, _ in raw]
    except KeyError as exc:
        raise CliError(f"workload references unknown vertex id {exc.args[0]}") from None

    dataset = args.dataset or Path(args.graph).stem
    rows, _ = bench_mod.run_benchmark(
        g,
        dataset,
        queries,
        variants=args.variants,
        repeat=args.repeat,
        bfs_budget_s=args.bfs_budget,
        include_baseline=not args.no_baseline,
        backend=args.backend,
    )
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            bench_mod.write_csv(rows, fh)
    else:
        bench_mod.write_csv(rows, sys.stdout)
    print(bench_mod.format_table(rows), file=sys.stderr)
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wreach",
        description="Weight-constrained k-step reachability indexes over edge-list graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build an index from an edge list")
    p.add_argument("--input", required=True, help="edge list file (u v w per line)")
    p.add_argument("--variant", choices=_VARIANTS, default="wkri")
    p.add_argument("--output", required=True, help="index file to write")
    p.add_argument("--order-file", help="explicit hop order, external ids, whitespace separated")
    p.add_argument("--tie-break", choices=("ascending-id", "descending-id"), default="ascending-id")
    p.add_argument("--dump-cover", metavar="FILE", help="write the cover members (external ids)")
    p.add_argument("--backend", choices=("auto", "python", "fast"), default="auto")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("dump", help="print an index as text labels")
    p.add_argument("--index", required=True)
    p.set_defaults(func=cmd_dump)

    p = sub.add_parser("query", help="answer queries from a file or the command line")
    p.add_argument("--index", required=True)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--queries", help="query file, one 'u v ws we k' per line")
    group.add_argument("-q", action="append", default=[], help="inline query 'u v ws we k' (repeatable)")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("gen-weights", help="redraw edge weights uniformly from [0, sigma]")
    p.add_argument("--input", required=True)
    p.add_argument("--sigma", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_gen_weights)

    p = sub.add_parser("workload", help="generate a classified query workload")
    p.add_argument("--graph", required=True)
    p.add_argument("--total", type=int, required=True)
    p.add_argument("--reachable-fraction", type=float, default=0.5)
    p.add_argument("--semi-fraction", type=float, default=0.3)
    p.add_argument("--weight-lo", type=int)
    p.add_argument("--weight-hi", type=int)
    p.add_argument("--k-min", type=int, default=1)
    p.add_argument("--k-max", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", required=True)
    p.set_defaults(func=cmd_workload)

    p = sub.add_parser("verify", help="check index answers against the BFS oracle")
    p.add_argument("--graph", required=True)
    p.add_argument("--variants", nargs="+", choices=_VARIANTS, default=list(_VARIANTS))
    p.add_argument("--index", help="verify this prebuilt index instead of building")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive-max-n", type=int, default=10)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="benchmark build and query times against the BFS baseline")
    p.add_argument("--graph", required=True)
    p.add_argument("--workload", required=True)
    p.add_argument("--variants", nargs="+", choices=_VARIANTS, default=list(_VARIANTS))
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--bfs-budget", type=float, default=300.0)
    p.add_argument("--no-baseline", action="store_true")
    p.add_argument("--csv", metavar="FILE", help="write the CSV report here instead of stdout")
    p.add_argument("--dataset", help="dataset name for the report (default: graph file stem)")
    p.add_argument("--backend", choices=("auto", "python", "fast"), default="auto")
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
