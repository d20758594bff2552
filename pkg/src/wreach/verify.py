"""Cross-checking index engines against the BFS oracle.

The strongest check runs per (u, v, constraint): the oracle's admissible
hop distance must equal the shortest admissible length derivable from each
index, which decides every step budget k at once.  Production boolean
queries are additionally exercised at and just below that threshold, where
an off-by-one would hide.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .graph import WeightedGraph
from .intervals import WeightConstraint
from .labeling import LabelIndex, Variant, build_gwkri, build_lwkri, build_wkri
from .query import INF, BfsOracle, Query, min_hops_index, query_index


@dataclass(frozen=True)
class Mismatch:
    engine: str
    u: int
    v: int
    constraint: WeightConstraint
    k: Optional[int]
    got: object
    expected: object

    def __str__(self) -> str:
        where = f"k={self.k}" if self.k is not None else "min-hops"
        return (
            f"{self.engine}: query u={self.u} v={self.v} c={self.constraint} {where}: "
            f"got {self.got}, oracle says {self.expected}"
        )


def exhaustive_constraints(g: WeightedGraph) -> list[WeightConstraint]:
    """Every bounded and half-bounded constraint over the graph's weight values."""
    values = sorted({w for _, _, w in g.edges})
    if not values:
        return [WeightConstraint.unconstrained()]
    out: list[WeightConstraint] = []
    for a, b in itertools.combinations_with_replacement(values, 2):
        out.append(WeightConstraint.between(a, b))
    for x in values:
        out.append(WeightConstraint.at_most(x))
        out.append(WeightConstraint.at_least(x))
    return out


def build_all(g: WeightedGraph, variants: Sequence[str] = ("wkri", "gwkri", "lwkri")) -> dict[str, LabelIndex]:
    builders = {"wkri": build_wkri, "gwkri": build_gwkri, "lwkri": build_lwkri}
    unknown = set(variants) - builders.keys()
    if unknown:
        raise ValueError(f"unknown variants: {sorted(unknown)}")
    return {name: builders[name](g) for name in variants}


def check_exhaustive(
    g: WeightedGraph,
    indexes: dict[str, LabelIndex],
    max_mismatches: int = 20,
    thresholds_only: bool = True,
) -> list[Mismatch]:
    """Compare engines against the oracle over all pairs and constraints.

    For each (u, v, c) the admissible-distance equality covers every k.
    With ``thresholds_only`` the boolean engines are probed at the decision
    threshold; otherwise at every k in [0, |V|].
    """
    oracle = BfsOracle(g)
    constraints = exhaustive_constraints(g)
    n = g.vertex_count
    mismatches: list[Mismatch] = []

    for c in constraints:
        for u in range(n):
            for v in range(n):
                want = oracle.min_hops(u, v, c)
                for name, index in indexes.items():
                    got = min_hops_index(index, u, v, c)
                    if got != want:
                        mismatches.append(Mismatch(name, u, v, c, None, got, want))
                        if len(mismatches) >= max_mismatches:
                            return mismatches
                if thresholds_only:
                    # The admissible-distance equality above decides every k;
                    # probe the booleans right at the flip point (or at n for
                    # never-reachable pairs) where an off-by-one would sit.
                    if want is INF:
                        ks: Iterable[int] = (n,)
                    elif want >= 1:
                        ks = (int(want) - 1, int(want))
                    else:
                        ks = (0,)
                else:
                    ks = range(n + 1)
                for k in ks:
                    expected = want <= k
                    for name, index in indexes.items():
                        got_b = query_index(index, Query(u, v, c, k))
                        if got_b != expected:
                            mismatches.append(Mismatch(name, u, v, c, k, got_b, expected))
                            if len(mismatches) >= max_mismatches:
                                return mismatches
    return mismatches


def check_sampled(
    g: WeightedGraph,
    indexes: dict[str, LabelIndex],
    samples: int,
    seed: int,
    k_max: Optional[int] = None,
    max_mismatches: int = 20,
) -> list[Mismatch]:
    """Compare engines against the oracle on random queries (large graphs)."""
    rng = random.Random(seed)
    oracle = BfsOracle(g)
    weights = sorted({w for _, _, w in g.edges})
    lo, hi = (weights[0], weights[-1]) if weights else (0, 1)
    if k_max is None:
        k_max = max(4, min(g.vertex_count, 16))
    mismatches: list[Mismatch] = []
    n = g.vertex_count

    for _ in range(samples):
        u = rng.randrange(n)
        v = rng.randrange(n)
        roll = rng.random()
        if roll < 0.15:
            c = WeightConstraint.at_most(rng.randint(lo, hi))
        elif roll < 0.3:
            c = WeightConstraint.at_least(rng.randint(lo, hi))
        else:
            a, b = rng.randint(lo, hi), rng.randint(lo, hi)
            c = WeightConstraint.between(min(a, b), max(a, b))
        k = rng.randint(0, k_max)
        expected = oracle.reachable(u, v, c, k)
        for name, index in indexes.items():
            got = query_index(index, Query(u, v, c, k))
            if got != expected:
                mismatches.append(Mismatch(name, u, v, c, k, got, expected))
                if len(mismatches) >= max_mismatches:
                    return mismatches
    return mismatches


def format_counterexample(g: WeightedGraph, mismatch: Mismatch, max_edges: int = 60) -> str:
    """Human-readable mismatch report with the graph when it is small."""
    lines = [str(mismatch)]
    if g.edge_count <= max_edges:
        lines.append("graph edges (dense ids):")
        lines.extend(f"  {u} {v} {w}" for u, v, w in g.edges)
    else:
        lines.append(f"graph: {g.vertex_count} vertices, {g.edge_count} edges (omitted)")
    return "\n".join(lines)
