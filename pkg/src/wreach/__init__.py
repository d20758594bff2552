"""Weight-constrained k-step reachability indexing for undirected weighted graphs."""

from .cover import CoverSet, TieBreak, VertexOrder, approx_min_cover, cover_order, degree_descending_order, explicit_order, is_cover
from .graph import GraphParseError, GraphStats, WeightedGraph, load_edge_list, random_graph, reassign_weights, stats, write_edge_list
from .intervals import EMPTY, PathTuple, WeightConstraint, WeightInterval, dominates, interval_union, satisfies
from .labeling import InsertOutcome, LabelEntry, LabelIndex, Variant, build_gwkri, build_lwkri, build_wkri, dump_index, scan_redundancy, try_insert
from .query import BfsOracle, Query, QueryResult, batch_query, bfs_oracle, min_hops_index, query_2hop, query_index, query_lwkri
from .serialize import IndexFormatError, deserialize, serialize
from .workload import WorkloadSpec, generate_workload, read_query_file, write_query_file

__all__ = [
    "BfsOracle",
    "CoverSet",
    "EMPTY",
    "GraphParseError",
    "GraphStats",
    "IndexFormatError",
    "InsertOutcome",
    "LabelEntry",
    "LabelIndex",
    "PathTuple",
    "Query",
    "QueryResult",
    "TieBreak",
    "Variant",
    "VertexOrder",
    "WeightConstraint",
    "WeightInterval",
    "WeightedGraph",
    "WorkloadSpec",
    "approx_min_cover",
    "batch_query",
    "bfs_oracle",
    "build_gwkri",
    "build_lwkri",
    "build_wkri",
    "cover_order",
    "degree_descending_order",
    "deserialize",
    "dominates",
    "dump_index",
    "explicit_order",
    "generate_workload",
    "interval_union",
    "is_cover",
    "load_edge_list",
    "min_hops_index",
    "query_2hop",
    "query_index",
    "query_lwkri",
    "random_graph",
    "read_query_file",
    "reassign_weights",
    "satisfies",
    "scan_redundancy",
    "serialize",
    "stats",
    "try_insert",
    "write_edge_list",
    "write_query_file",
]
