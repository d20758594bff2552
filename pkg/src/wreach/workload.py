"""Query workload generation and the query-file text format.

A workload is a batch of queries with known ground-truth answers in a
target reachable/unreachable mix.  Candidates are rejection-sampled:
random endpoint pair, random constraint (bounded or half-bounded over the
graph's weight range), random step budget, classified by the BFS oracle
and kept while its class still has room.

File format, one query per line, ``#`` comments allowed:

    u v ws we k [expected]

``ws``/``we`` accept ``-inf`` / ``+inf``; ``expected`` is 0/1 and present
in generated workloads so they are self-validating.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from typing import IO, Callable, Iterable, Optional

from .graph import WeightedGraph
from .intervals import WeightConstraint, constraint_from_tokens, constraint_to_tokens
from .query import BfsOracle, Query

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class WorkloadSpec:
    """Knobs for workload generation.

    ``weight_lo``/``weight_hi`` default to the graph's observed weight
    range; ``semi_fraction`` is the share of half-bounded constraints.
    """

    total: int
    reachable_fraction: float = 0.5
    semi_fraction: float = 0.3
    weight_lo: Optional[int] = None
    weight_hi: Optional[int] = None
    k_min: int = 1
    k_max: int = 8
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 <= self.reachable_fraction <= 1.0:
            raise ValueError("reachable_fraction must be in [0, 1]")
        if self.total < 0:
            raise ValueError("total must be >= 0")
        if self.k_min < 0 or self.k_max < self.k_min:
            raise ValueError("need 0 <= k_min <= k_max")


def generate_workload(g: WeightedGraph, spec: WorkloadSpec) -> list[tuple[Query, bool]]:
    """Sample queries until the reachable/unreachable mix is met.

    Deterministic for a fixed spec.  If the mix cannot be filled within a
    bounded number of attempts (e.g. asking for reachable pairs on an
    edgeless graph) a partial workload is returned with a warning.
    """
    if spec.total == 0:
        return []
    if g.vertex_count < 2:
        raise ValueError("workload generation needs at least two vertices")

    lo = spec.weight_lo
    hi = spec.weight_hi
    if lo is None or hi is None:
        weights = [w for _, _, w in g.edges]
        lo = min(weights) if weights and lo is None else (lo or 0)
        hi = max(weights) if weights and hi is None else (hi if hi is not None else 1)
    if lo > hi:
        raise ValueError("weight_lo exceeds weight_hi")

    rng = random.Random(spec.seed)
    oracle = BfsOracle(g)
    want_true = round(spec.total * spec.reachable_fraction)
    need = {True: want_true, False: spec.total - want_true}
    out: list[tuple[Query, bool]] = []
    max_attempts = max(10_000, 200 * spec.total)
    attempts = 0
    n = g.vertex_count

    while (need[True] > 0 or need[False] > 0) and attempts < max_attempts:
        attempts += 1
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        if rng.random() < spec.semi_fraction:
            if rng.random() < 0.5:
                c = WeightConstraint.at_most(rng.randint(lo, hi))
            else:
                c = WeightConstraint.at_least(rng.randint(lo, hi))
        else:
            a = rng.randint(lo, hi)
            b = rng.randint(lo, hi)
            c = WeightConstraint.between(min(a, b), max(a, b))
        k = rng.randint(spec.k_min, spec.k_max)
        answer = oracle.reachable(u, v, c, k)
        if need[answer] > 0:
            need[answer] -= 1
            out.append((Query(u, v, c, k), answer))

    if need[True] or need[False]:
        log.warning(
            "workload mix unattainable after %d attempts: missing %d reachable, %d unreachable",
            attempts,
            need[True],
            need[False],
        )
    return out


def write_query_file(
    sink: IO[str],
    items: Iterable[tuple[Query, Optional[bool]]],
    name_of: Optional[Callable[[int], object]] = None,
) -> None:
    if name_of is None:
        name_of = lambda v: v
    for q, expected in items:
        ws, we = constraint_to_tokens(q.constraint)
        line = f"{name_of(q.u)} {name_of(q.v)} {ws} {we} {q.k}"
        if expected is not None:
            line += f" {int(expected)}"
        sink.write(line + "\n")


class QueryParseError(ValueError):
    pass


def parse_query_tokens(parts: list[str]) -> tuple[int, int, WeightConstraint, int, Optional[bool]]:
    """Parse one query line's tokens; endpoint ids are left unresolved ints."""
    if len(parts) not in (5, 6):
        raise QueryParseError(f"expected 'u v ws we k [expected]', got {len(parts)} tokens")
    u, v = int(parts[0]), int(parts[1])
    c = constraint_from_tokens(parts[2], parts[3])
    k = int(parts[4])
    if k < 0:
        raise QueryParseError("k must be >= 0")
    expected = None
    if len(parts) == 6:
        if parts[5] not in ("0", "1"):
            raise QueryParseError(f"expected answer must be 0 or 1, got {parts[5]!r}")
        expected = parts[5] == "1"
    return u, v, c, k, expected


def read_query_file(source: IO[str]) -> list[tuple[int, int, WeightConstraint, int, Optional[bool]]]:
    """Read a query file; returns raw (u, v, c, k, expected) tuples."""
    out = []
    for lineno, raw in enumerate(source, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            out.append(parse_query_tokens(line.split()))
        except (ValueError, QueryParseError) as exc:
            raise QueryParseError(f"line {lineno}: {exc}") from None
    return out
