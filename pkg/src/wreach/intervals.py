"""Weight intervals, query constraints, and dominance between path tuples.

An interval [lo, hi] summarizes the edge weights seen along one path: lo is
the smallest weight, hi the largest.  The zero-length path has seen no edge
at all; its summary is the EMPTY interval, which is the identity of
``interval_union`` and satisfies every constraint.  EMPTY is a structural
case, never the numeric pair (0, 0): weight 0 is a perfectly legal edge
weight here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class WeightInterval:
    """Closed integer interval [lo, hi], or the unique EMPTY interval.

    EMPTY is represented structurally (``lo > hi``); use the module constant
    ``EMPTY`` or :meth:`WeightInterval.empty` rather than constructing it.
    """

    lo: int = 1
    hi: int = 0

    def __post_init__(self) -> None:
        if self.lo > self.hi and (self.lo, self.hi) != (1, 0):
            raise ValueError(f"invalid interval [{self.lo}, {self.hi}]")

    @classmethod
    def empty(cls) -> "WeightInterval":
        return cls(1, 0)

    @classmethod
    def of(cls, lo: int, hi: int) -> "WeightInterval":
        if lo > hi:
            raise ValueError(f"invalid interval [{lo}, {hi}]")
        return cls(lo, hi)

    @classmethod
    def point(cls, w: int) -> "WeightInterval":
        return cls(w, w)

    @property
    def is_empty(self) -> bool:
        return self.lo > self.hi

    def issubset(self, other: "WeightInterval") -> bool:
        """True iff every weight in self also lies in other (EMPTY ⊆ anything)."""
        if self.is_empty:
            return True
        if other.is_empty:
            return False
        return other.lo <= self.lo and self.hi <= other.hi

    def __str__(self) -> str:
        return "EMPTY" if self.is_empty else f"[{self.lo},{self.hi}]"


EMPTY = WeightInterval.empty()


def interval_union(a: WeightInterval, b: WeightInterval) -> WeightInterval:
    """Smallest interval containing both operands; EMPTY is the identity."""
    if a.is_empty:
        return b
    if b.is_empty:
        return a
    return WeightInterval(min(a.lo, b.lo), max(a.hi, b.hi))


@dataclass(frozen=True)
class WeightConstraint:
    """Per-edge weight constraint: lower/upper bound, either side optional.

    ``None`` means unbounded on that side, so the three supported forms are
    ``<= upper``, ``>= lower`` and the bounded ``[lower, upper]``.
    """

    lower: Optional[int] = None
    upper: Optional[int] = None

    def __post_init__(self) -> None:
        if self.lower is not None and self.upper is not None and self.lower > self.upper:
            raise ValueError(f"constraint lower {self.lower} exceeds upper {self.upper}")

    @classmethod
    def at_most(cls, upper: int) -> "WeightConstraint":
        return cls(None, upper)

    @classmethod
    def at_least(cls, lower: int) -> "WeightConstraint":
        return cls(lower, None)

    @classmethod
    def between(cls, lower: int, upper: int) -> "WeightConstraint":
        return cls(lower, upper)

    @classmethod
    def unconstrained(cls) -> "WeightConstraint":
        return cls(None, None)

    def __str__(self) -> str:
        lo = "-inf" if self.lower is None else str(self.lower)
        hi = "+inf" if self.upper is None else str(self.upper)
        return f"[{lo},{hi}]"


def satisfies(interval: WeightInterval, c: WeightConstraint) -> bool:
    """True iff every weight in the interval satisfies the constraint.

    The EMPTY interval satisfies every constraint: a path with no edges has
    nothing that could violate it.
    """
    if interval.is_empty:
        return True
    if c.lower is not None and interval.lo < c.lower:
        return False
    if c.upper is not None and interval.hi > c.upper:
        return False
    return True


def constraint_from_tokens(ws: str, we: str) -> WeightConstraint:
    """Parse the two-token text form used in query and workload files.

    ``ws``/``we`` are decimal integers, or ``-inf`` / ``+inf`` (``inf``
    accepted for the upper bound) for an unbounded side.
    """
    lower = None if ws in ("-inf", "-INF") else int(ws)
    upper = None if we in ("+inf", "inf", "+INF", "INF") else int(we)
    return WeightConstraint(lower, upper)


def constraint_to_tokens(c: WeightConstraint) -> tuple[str, str]:
    ws = "-inf" if c.lower is None else str(c.lower)
    we = "+inf" if c.upper is None else str(c.upper)
    return ws, we


@dataclass(frozen=True)
class PathTuple:
    """A reachability fact: src reaches dst within ``interval`` in ``dist`` steps."""

    src: int
    dst: int
    interval: WeightInterval
    dist: int

    def __post_init__(self) -> None:
        if self.dist == 0 and (self.src != self.dst or not self.interval.is_empty):
            raise ValueError("zero-length tuple must be a self tuple with EMPTY interval")
        if self.dist < 0:
            raise ValueError("negative path length")


def dominates(t1: PathTuple, t2: PathTuple) -> bool:
    """True iff t1 makes t2 redundant: tighter-or-equal interval, no longer.

    Both tuples must connect the same endpoints; anything else is a caller
    bug, not a comparable pair.
    """
    if t1.src != t2.src or t1.dst != t2.dst:
        raise ValueError("dominance is defined only for tuples with equal endpoints")
    return t1.interval.issubset(t2.interval) and t1.dist <= t2.dist
