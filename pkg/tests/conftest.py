"""Shared fixtures: the 7-vertex toy graph and its reference label sets."""

from __future__ import annotations

import io

import pytest

from wreach import load_edge_list
from wreach.cover import explicit_order, restricted_order

# Undirected toy graph used throughout; external ids 1..7.
TOY_EDGES_TEXT = """\
1 2 5
1 3 3
1 5 2
2 3 4
2 4 5
3 5 6
3 6 8
4 6 7
4 7 3
"""

# Hop priority used for the full index, and the cover-based hop order.
TOY_FULL_ORDER = [3, 4, 2, 1, 6, 5, 7]
TOY_COVER_ORDER = [3, 4, 1]

# Reference labels, keyed by external vertex id, entries as
# (hop external id, lo, hi, dist); self-entries written (v, 0, 0, 0).
TOY_WKRI_LABELS = {
    1: {(3, 3, 3, 1), (3, 4, 5, 2), (3, 5, 8, 4), (4, 5, 5, 2), (2, 5, 5, 1), (1, 0, 0, 0)},
    2: {(3, 4, 4, 1), (3, 5, 8, 3), (4, 5, 5, 1), (2, 0, 0, 0)},
    3: {(3, 0, 0, 0)},
    4: {(3, 4, 5, 2), (3, 7, 8, 2), (4, 0, 0, 0)},
    5: {(3, 6, 6, 1), (3, 2, 3, 2), (4, 2, 5, 3), (2, 2, 5, 2), (1, 2, 2, 1), (5, 0, 0, 0)},
    6: {(3, 8, 8, 1), (3, 4, 7, 3), (4, 7, 7, 1), (6, 0, 0, 0)},
    7: {(3, 3, 5, 3), (4, 3, 3, 1), (7, 0, 0, 0)},
}

TOY_GWKRI_LABELS = {
    1: {(3, 3, 3, 1), (3, 4, 5, 2), (3, 5, 8, 4), (4, 5, 5, 2), (1, 0, 0, 0)},
    2: {(3, 4, 4, 1), (3, 5, 8, 3), (4, 5, 5, 1), (1, 5, 5, 1)},
    3: {(3, 0, 0, 0)},
    4: {(3, 4, 5, 2), (3, 7, 8, 2), (4, 0, 0, 0)},
    5: {(3, 6, 6, 1), (3, 2, 3, 2), (4, 2, 5, 3), (1, 2, 2, 1)},
    6: {(3, 8, 8, 1), (3, 4, 7, 3), (4, 7, 7, 1)},
    7: {(3, 3, 5, 3), (4, 3, 3, 1)},
}

TOY_LWKRI_LABELS = {
    1: {(3, 3, 3, 1), (3, 4, 5, 2), (3, 5, 8, 4), (4, 5, 5, 2), (1, 0, 0, 0)},
    3: {(3, 0, 0, 0)},
    4: {(3, 4, 5, 2), (3, 7, 8, 2), (4, 0, 0, 0)},
}


@pytest.fixture
def toy_graph():
    return load_edge_list(io.StringIO(TOY_EDGES_TEXT))


@pytest.fixture
def toy_ids(toy_graph):
    """external id -> dense id for the toy graph."""
    return {ext: dense for dense, ext in enumerate(toy_graph.external_ids)}


@pytest.fixture
def toy_full_order(toy_graph, toy_ids):
    return explicit_order([toy_ids[x] for x in TOY_FULL_ORDER], toy_graph.vertex_count)


@pytest.fixture
def toy_cover_order(toy_graph, toy_ids):
    return restricted_order([toy_ids[x] for x in TOY_COVER_ORDER], toy_graph.vertex_count)


def entries_by_external(index, g):
    """Index labels keyed/valued by external ids, for table comparison."""
    out = {}
    for u in range(index.vertex_count):
        if not index.has_label(u):
            continue
        out[g.external_ids[u]] = {
            (g.external_ids[index.hops[r]], lo, hi, d) for r, lo, hi, d in index.entries[u]
        }
    return out
