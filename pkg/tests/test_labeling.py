import io
import random

import pytest

from wreach.cover import approx_min_cover, degree_descending_order, explicit_order
from wreach.graph import load_edge_list, random_graph, stats
from wreach.labeling import (
    InsertOutcome,
    LabelIndex,
    Variant,
    build_gwkri,
    build_lwkri,
    build_wkri,
    dump_index,
    scan_redundancy,
    try_insert,
)
from tests.conftest import (
    TOY_GWKRI_LABELS,
    TOY_LWKRI_LABELS,
    TOY_WKRI_LABELS,
    entries_by_external,
)


class TestTryInsert:
    def test_rejected_when_existing_same_hop_entry_dominates(self):
        # L(v2) holds (hop, [4,4], 1); the two-step [3,5] detour is redundant.
        label = {0: [(4, 4, 1)]}
        assert try_insert(label, {}, 0, 3, 5, 2) is InsertOutcome.REJECTED_SAME_HOP
        assert label == {0: [(4, 4, 1)]}

    def test_rejected_via_earlier_hop_combination(self):
        # Candidate (hop1, [4,6], 3) at a vertex whose label reaches hop0 in
        # [6,6]x1 while the current hop reaches hop0 in [4,5]x2: the merged
        # [4,6] within 3 steps explains the candidate.
        label_u = {0: [(6, 6, 1)]}
        hop_label = {0: [(4, 5, 2)]}
        assert try_insert(label_u, hop_label, 1, 4, 6, 3) is InsertOutcome.REJECTED_CROSS_HOP
        assert 1 not in label_u

    def test_first_candidate_inserted(self):
        label = {}
        assert try_insert(label, {}, 2, 5, 7, 1) is InsertOutcome.INSERTED
        assert label == {2: [(5, 7, 1)]}

    def test_candidate_replaces_dominated_entries(self):
        label = {0: [(2, 6, 2), (1, 7, 2)]}
        assert try_insert(label, {}, 0, 3, 5, 2) is InsertOutcome.INSERTED
        assert label == {0: [(3, 5, 2)]}

    def test_incomparable_entries_accumulate(self):
        label = {0: [(4, 5, 2)]}
        assert try_insert(label, {}, 0, 7, 8, 2) is InsertOutcome.INSERTED
        assert label == {0: [(4, 5, 2), (7, 8, 2)]}

    def test_depth_one_skips_cross_check(self):
        # A single edge can never be explained by a two-entry combination.
        label_u = {0: [(5, 5, 1)]}
        hop_label = {0: [(5, 5, 1)]}
        assert try_insert(label_u, hop_label, 1, 5, 5, 1) is InsertOutcome.INSERTED


class TestToyIndexes:
    def test_wkri_matches_reference_tables(self, toy_graph, toy_full_order):
        index = build_wkri(toy_graph, toy_full_order)
        assert entries_by_external(index, toy_graph) == TOY_WKRI_LABELS

    def test_gwkri_matches_reference_tables(self, toy_graph, toy_cover_order):
        cover = approx_min_cover(toy_graph)
        index = build_gwkri(toy_graph, cover, toy_cover_order)
        assert entries_by_external(index, toy_graph) == TOY_GWKRI_LABELS

    def test_lwkri_matches_reference_tables(self, toy_graph, toy_cover_order):
        cover = approx_min_cover(toy_graph)
        index = build_lwkri(toy_graph, cover, toy_cover_order)
        assert entries_by_external(index, toy_graph) == TOY_LWKRI_LABELS

    def test_lwkri_labels_only_cover_vertices(self, toy_graph, toy_cover_order):
        index = build_lwkri(toy_graph, approx_min_cover(toy_graph), toy_cover_order)
        labeled = {toy_graph.external_ids[u] for u in range(7) if index.has_label(u)}
        assert labeled == {1, 3, 4}
        unlabeled = [u for u in range(7) if not index.has_label(u)]
        assert all(index.entries[u] == [] for u in unlabeled)

    def test_entry_counts_ordered(self, toy_graph, toy_full_order, toy_cover_order):
        cover = approx_min_cover(toy_graph)
        wk = build_wkri(toy_graph, toy_full_order).total_entries()
        gw = build_gwkri(toy_graph, cover, toy_cover_order).total_entries()
        lw = build_lwkri(toy_graph, cover, toy_cover_order).total_entries()
        assert lw <= gw <= wk
        assert (wk, gw, lw) == (27, 22, 9)


class TestBuildEdgeCases:
    def test_single_vertex(self):
        g = random_graph(1, 0, 1, 0)
        index = build_wkri(g)
        assert index.entries == [[(0, 0, 0, 0)]]

    def test_edgeless_gwkri_empty_cover(self):
        g = random_graph(4, 0, 1, 0)
        index = build_gwkri(g)
        assert index.cover.members == ()
        assert index.total_entries() == 0  # no hops, so no self-entries either

    def test_lwkri_with_full_cover_equals_wkri(self):
        from wreach.cover import CoverSet, restricted_order

        for seed in range(5):
            g = random_graph(8, 14, 4, seed)
            order = degree_descending_order(g)
            full = CoverSet(order.order, (True,) * 8)
            lw = build_lwkri(g, full, order)
            wk = build_wkri(g, order)
            assert lw.entries == wk.entries

    def test_prune_carriers_flag_does_not_change_labels(self):
        for seed in range(10):
            g = random_graph(12, 24, 5, seed)
            cover = approx_min_cover(g)
            a = build_lwkri(g, cover)
            b = build_lwkri(g, cover, prune_carriers=True)
            assert a.entries == b.entries

    def test_invalid_cover_rejected(self, toy_graph, toy_ids):
        from wreach.cover import CoverSet

        bad = CoverSet((toy_ids[3],), tuple(v == toy_ids[3] for v in range(7)))
        with pytest.raises(ValueError, match="not a cover"):
            build_gwkri(toy_graph, bad)

    def test_wrong_order_length_rejected(self, toy_graph):
        with pytest.raises(ValueError):
            build_wkri(toy_graph, explicit_order([0, 1, 2], 3))

    def test_parallel_edges_are_distinct_one_step_paths(self):
        g = load_edge_list(io.StringIO("1 2 3\n1 2 7\n"))
        index = build_wkri(g)
        groups = [e for e in index.entries[1] if e[3] == 1]
        assert {(lo, hi) for _, lo, hi, _ in groups} == {(3, 3), (7, 7)}


class TestLabelInvariants:
    def test_entries_sorted_by_rank(self):
        for seed in range(10):
            g = random_graph(15, 30, 4, seed)
            for index in (build_wkri(g), build_gwkri(g), build_lwkri(g)):
                for u in range(15):
                    ranks = [r for r, *_ in index.entries[u]]
                    assert ranks == sorted(ranks)

    def test_self_entry_iff_hop(self):
        for seed in range(5):
            g = random_graph(12, 20, 4, seed)
            for index in (build_wkri(g), build_gwkri(g), build_lwkri(g)):
                for u in range(12):
                    selfs = [e for e in index.entries[u] if e[3] == 0]
                    if index.rank[u] >= 0 and index.has_label(u):
                        assert selfs == [(index.rank[u], 0, 0, 0)]
                    else:
                        assert selfs == []

    def test_group_size_bounded_by_interval_count(self):
        for seed in range(8):
            g = random_graph(10, 20, 3, seed)
            sigma = stats(g).distinct_weight_count
            bound = sigma * (sigma + 1) // 2
            index = build_wkri(g)
            for u in range(10):
                by_rank = {}
                for r, lo, hi, d in index.entries[u]:
                    if d > 0:
                        by_rank.setdefault(r, []).append((lo, hi))
                for grp in by_rank.values():
                    assert len(grp) <= bound


class TestScanRedundancy:
    def test_clean_on_toy_indexes(self, toy_graph, toy_full_order, toy_cover_order):
        cover = approx_min_cover(toy_graph)
        assert scan_redundancy(build_wkri(toy_graph, toy_full_order)) == []
        assert scan_redundancy(build_gwkri(toy_graph, cover, toy_cover_order)) == []
        assert scan_redundancy(build_lwkri(toy_graph, cover, toy_cover_order)) == []

    def test_detects_injected_same_hop_domination(self, toy_graph, toy_full_order):
        index = build_wkri(toy_graph, toy_full_order)
        # (0, 4, 4, 1) lives in L(v2); a looser copy of it is redundant.
        v2 = toy_graph.id_map[2]
        index.entries[v2].insert(1, (0, 3, 5, 2))
        report = scan_redundancy(index)
        assert len(report) >= 1 and "redundant" in report[0]

    def test_detects_injected_cross_hop_redundancy(self, toy_graph, toy_full_order):
        index = build_wkri(toy_graph, toy_full_order)
        # At v5: hop v3 is reachable in [2,3]x2 and L(v4) reaches v3 in
        # [4,5]x2, so a fat (v4, [2,5], 5) entry at v5 is explained.
        v5 = toy_graph.id_map[5]
        entries = index.entries[v5]
        pos = next(i for i, e in enumerate(entries) if e[0] == 1)
        entries.insert(pos, (1, 2, 5, 5))
        report = scan_redundancy(index)
        assert any("earlier hop" in line for line in report)

    def test_clean_on_random_builds(self):
        for seed in range(20):
            g = random_graph(12, 24, 4, seed)
            cover = approx_min_cover(g)
            assert scan_redundancy(build_wkri(g)) == []
            assert scan_redundancy(build_gwkri(g, cover)) == []
            assert scan_redundancy(build_lwkri(g, cover)) == []


class TestDump:
    def test_toy_dump_shows_table_notation(self, toy_graph, toy_full_order):
        index = build_wkri(toy_graph, toy_full_order)
        buf = io.StringIO()
        dump_index(index, buf, name_of=lambda v: f"v{toy_graph.external_ids[v]}")
        lines = dict(line.split(": ", 1) for line in buf.getvalue().strip().splitlines())
        assert lines["L(v3)"] == "(v3,0,0,0)"
        assert lines["L(v7)"] == "(v3,3,5,3) (v4,3,3,1) (v7,0,0,0)"

    def test_lwkri_dump_omits_unlabeled(self, toy_graph, toy_cover_order):
        index = build_lwkri(toy_graph, approx_min_cover(toy_graph), toy_cover_order)
        buf = io.StringIO()
        dump_index(index, buf)
        assert len(buf.getvalue().strip().splitlines()) == 3
