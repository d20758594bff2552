import itertools

import pytest

from wreach.intervals import (
    EMPTY,
    PathTuple,
    WeightConstraint,
    WeightInterval,
    constraint_from_tokens,
    constraint_to_tokens,
    dominates,
    interval_union,
    satisfies,
)


def iv(lo, hi):
    return WeightInterval.of(lo, hi)


class TestIntervalUnion:
    def test_merges_to_covering_interval(self):
        assert interval_union(iv(4, 5), iv(6, 6)) == iv(4, 6)

    def test_empty_is_identity(self):
        assert interval_union(EMPTY, iv(3, 8)) == iv(3, 8)
        assert interval_union(iv(3, 8), EMPTY) == iv(3, 8)
        assert interval_union(EMPTY, EMPTY) == EMPTY

    def test_chain_of_singletons(self):
        merged = interval_union(interval_union(iv(2, 2), iv(3, 3)), iv(4, 4))
        assert merged == iv(2, 4)

    def test_algebraic_laws_by_enumeration(self):
        universe = [EMPTY] + [iv(a, b) for a in range(4) for b in range(a, 4)]
        for a, b in itertools.product(universe, repeat=2):
            assert interval_union(a, b) == interval_union(b, a)
            assert interval_union(a, a) == a
        for a, b, c in itertools.product(universe, repeat=3):
            assert interval_union(interval_union(a, b), c) == interval_union(a, interval_union(b, c))


class TestSatisfies:
    def test_upper_bounded(self):
        assert satisfies(iv(2, 3), WeightConstraint.at_most(3))

    def test_empty_satisfies_everything(self):
        assert satisfies(EMPTY, WeightConstraint.between(5, 8))
        assert satisfies(EMPTY, WeightConstraint.at_least(100))

    def test_partial_overlap_fails(self):
        assert not satisfies(iv(4, 8), WeightConstraint.between(5, 8))

    def test_weight_zero_is_a_real_weight(self):
        assert satisfies(iv(0, 0), WeightConstraint.at_most(0))
        assert not satisfies(iv(0, 0), WeightConstraint.at_least(1))

    def test_invalid_bounds(self):
        with pytest.raises(ValueError):
            WeightConstraint.between(7, 3)


class TestDominates:
    def t(self, lo, hi, k):
        return PathTuple(4, 3, iv(lo, hi), k)

    def test_tighter_shorter_dominates(self):
        assert dominates(self.t(4, 5, 2), self.t(3, 5, 3))
        assert dominates(self.t(4, 5, 2), self.t(2, 6, 4))

    def test_reflexive(self):
        assert dominates(self.t(4, 5, 2), self.t(4, 5, 2))

    def test_longer_does_not_dominate(self):
        assert not dominates(self.t(4, 5, 3), self.t(4, 5, 2))

    def test_endpoint_mismatch_is_an_error(self):
        with pytest.raises(ValueError):
            dominates(self.t(4, 5, 2), PathTuple(4, 6, iv(4, 5), 2))

    def test_empty_tuple_dominates(self):
        self_tuple = PathTuple(2, 2, EMPTY, 0)
        other = PathTuple(2, 2, iv(1, 1), 2)
        assert dominates(self_tuple, other)
        assert not dominates(other, self_tuple)

    def test_partial_order_by_enumeration(self):
        universe = [PathTuple(0, 1, iv(a, b), k) for a in range(3) for b in range(a, 3) for k in (1, 2)]
        for t1 in universe:
            assert dominates(t1, t1)
        for t1, t2 in itertools.product(universe, repeat=2):
            if dominates(t1, t2) and dominates(t2, t1):
                assert t1 == t2
        for t1, t2, t3 in itertools.product(universe, repeat=3):
            if dominates(t1, t2) and dominates(t2, t3):
                assert dominates(t1, t3)


def test_dominance_monotone_under_constraints():
    # If t1 dominates t2 and t2 answers a query, t1 answers it too.
    tuples = [PathTuple(0, 1, iv(a, b), k) for a in range(3) for b in range(a, 3) for k in (1, 2, 3)]
    constraints = [WeightConstraint.between(a, b) for a in range(3) for b in range(a, 3)]
    constraints += [WeightConstraint.at_most(x) for x in range(3)]
    constraints += [WeightConstraint.at_least(x) for x in range(3)]
    for t1, t2 in itertools.product(tuples, repeat=2):
        if not dominates(t1, t2):
            continue
        for c in constraints:
            for k in range(4):
                if satisfies(t2.interval, c) and t2.dist <= k:
                    assert satisfies(t1.interval, c) and t1.dist <= k


def test_dominance_closed_under_extension():
    # Appending the same edge to both paths preserves dominance; this is
    # what makes stopping the traversal at a rejected vertex safe.
    def extend(t, w):
        return PathTuple(t.src, t.dst, interval_union(t.interval, iv(w, w)), t.dist + 1)

    tuples = [PathTuple(0, 1, iv(a, b), k) for a in range(3) for b in range(a, 3) for k in (1, 2)]
    for t1, t2 in itertools.product(tuples, repeat=2):
        if dominates(t1, t2):
            for w in range(4):
                assert dominates(extend(t1, w), extend(t2, w))


class TestConstraintTokens:
    @pytest.mark.parametrize(
        "ws,we,lower,upper",
        [("3", "8", 3, 8), ("-inf", "5", None, 5), ("2", "+inf", 2, None), ("-inf", "+inf", None, None)],
    )
    def test_round_trip(self, ws, we, lower, upper):
        c = constraint_from_tokens(ws, we)
        assert (c.lower, c.upper) == (lower, upper)
        assert constraint_from_tokens(*constraint_to_tokens(c)) == c


def test_interval_validation():
    with pytest.raises(ValueError):
        WeightInterval.of(5, 4)
    with pytest.raises(ValueError):
        PathTuple(0, 0, iv(1, 2), 0)
    assert EMPTY.is_empty and str(EMPTY) == "EMPTY"
