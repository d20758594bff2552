import io

import pytest

from wreach.graph import random_graph
from wreach.intervals import WeightConstraint
from wreach.query import BfsOracle, Query
from wreach.workload import (
    QueryParseError,
    WorkloadSpec,
    generate_workload,
    read_query_file,
    write_query_file,
)


class TestGenerate:
    def test_mix_is_met_and_self_validating(self, toy_graph):
        spec = WorkloadSpec(total=10, reachable_fraction=0.5, k_max=4, seed=3)
        items = generate_workload(toy_graph, spec)
        assert len(items) == 10
        assert sum(1 for _, ans in items if ans) == 5
        oracle = BfsOracle(toy_graph)
        for query, expected in items:
            assert oracle.reachable(query.u, query.v, query.constraint, query.k) == expected

    def test_empty_total(self, toy_graph):
        assert generate_workload(toy_graph, WorkloadSpec(total=0)) == []

    def test_deterministic(self, toy_graph):
        spec = WorkloadSpec(total=12, seed=9, k_max=3)
        assert generate_workload(toy_graph, spec) == generate_workload(toy_graph, spec)
        other = WorkloadSpec(total=12, seed=10, k_max=3)
        assert generate_workload(toy_graph, spec) != generate_workload(toy_graph, other)

    def test_unattainable_mix_yields_partial(self, caplog):
        g = random_graph(5, 0, 3, 0)  # edgeless: nothing is reachable
        spec = WorkloadSpec(total=6, reachable_fraction=1.0, seed=0)
        items = generate_workload(g, spec)
        assert items == []

    def test_all_unreachable_mix(self):
        g = random_graph(6, 0, 3, 0)
        items = generate_workload(g, WorkloadSpec(total=6, reachable_fraction=0.0, seed=1))
        assert len(items) == 6 and not any(ans for _, ans in items)

    def test_weight_window_override(self, toy_graph):
        spec = WorkloadSpec(total=8, weight_lo=2, weight_hi=8, seed=4, k_max=3)
        for query, _ in generate_workload(toy_graph, spec):
            c = query.constraint
            assert c.lower is None or 2 <= c.lower <= 8
            assert c.upper is None or 2 <= c.upper <= 8

    def test_validation(self):
        with pytest.raises(ValueError):
            WorkloadSpec(total=-1)
        with pytest.raises(ValueError):
            WorkloadSpec(total=1, reachable_fraction=1.5)
        with pytest.raises(ValueError):
            WorkloadSpec(total=1, k_min=4, k_max=2)


class TestQueryFiles:
    def test_round_trip_with_expected(self, toy_graph):
        items = generate_workload(toy_graph, WorkloadSpec(total=6, seed=2, k_max=4))
        buf = io.StringIO()
        write_query_file(buf, items)
        parsed = read_query_file(io.StringIO(buf.getvalue()))
        assert len(parsed) == 6
        for (query, expected), (u, v, c, k, exp) in zip(items, parsed):
            assert (query.u, query.v, query.constraint, query.k, expected) == (u, v, c, k, exp)

    def test_inf_tokens(self):
        parsed = read_query_file(io.StringIO("0 1 -inf +inf 3\n"))
        assert parsed == [(0, 1, WeightConstraint(None, None), 3, None)]

    def test_comments_ignored(self):
        parsed = read_query_file(io.StringIO("# workload\n\n0 1 2 5 1 1\n"))
        assert parsed == [(0, 1, WeightConstraint(2, 5), 1, True)]

    def test_malformed_lines(self):
        with pytest.raises(QueryParseError, match="line 1"):
            read_query_file(io.StringIO("0 1 2\n"))
        with pytest.raises(QueryParseError, match="line 2"):
            read_query_file(io.StringIO("0 1 2 5 1\n0 1 2 5 -3\n"))
        with pytest.raises(QueryParseError):
            read_query_file(io.StringIO("0 1 2 5 1 7\n"))

    def test_external_id_mapping(self, toy_graph):
        items = [(Query(0, 2, WeightConstraint(1, 9), 2), True)]
        buf = io.StringIO()
        write_query_file(buf, items, name_of=lambda v: toy_graph.external_ids[v])
        assert buf.getvalue() == "1 3 1 9 2 1\n"
