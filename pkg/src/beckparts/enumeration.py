"""Exhaustive partition generation, the brute-force side of every check.

All generators yield in descending lexicographic order of the flattened part
list (6 before 5+1 before 4+2 before 4+1+1 ...), so output is deterministic
and golden files stay stable.  Class filters are plain predicates over the
generic generator; partitions into distinct parts get a dedicated
strictly-decreasing generator because they dominate the hot paths.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .partitions import (
    Partition,
    PartitionClass,
    WitnessPair,
    classify,
    make_partition,
)


@dataclass(frozen=True, slots=True)
class EnumerationQuery:
    """Parameters for one enumeration run."""

    n: int
    class_filter: PartitionClass | None = None
    max_part: int | None = None

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")
        if self.max_part is not None and self.max_part < 1:
            raise ValueError(f"max_part must be positive, got {self.max_part}")


def _all_parts(remaining: int, bound: int) -> Iterator[tuple[int, ...]]:
    """Flattened part tuples of ``remaining`` with parts <= bound, descending lex."""
    if remaining == 0:
        yield ()
        return
    for first in range(min(remaining, bound), 0, -1):
        for rest in _all_parts(remaining - first, first):
            yield (first,) + rest


def _distinct_parts(
    remaining: int, bound: int, avoid: int | None
) -> Iterator[tuple[int, ...]]:
    """Strictly decreasing part tuples, optionally skipping the value ``avoid``."""
    if remaining == 0:
        yield ()
        return
    for first in range(min(remaining, bound), 0, -1):
        if first == avoid:
            continue
        for rest in _distinct_parts(remaining - first, first - 1, avoid):
            yield (first,) + rest


def enumerate_partitions(query: EnumerationQuery) -> Iterator[Partition]:
    """Every partition matching the query, each exactly once.

    With no filter the stream has length p(n), the unrestricted partition
    number.  n = 0 yields exactly the empty partition whenever it passes the
    filter (it is distinct and odd, and in no bo/be/co/ce class).
    """
    bound = query.n if query.max_part is None else min(query.max_part, query.n)
    if query.class_filter is PartitionClass.DISTINCT:
        for flat in _distinct_parts(query.n, bound, None):
            yield make_partition(flat)
        return
    for flat in _all_parts(query.n, bound):
        p = make_partition(flat)
        if query.class_filter is None or query.class_filter in classify(p):
            yield p


def enumerate_distinct(n: int, avoid: int | None = None) -> Iterator[Partition]:
    """All partitions of n into distinct parts, optionally avoiding one value."""
    if n < 0:
        return
    for flat in _distinct_parts(n, n, avoid):
        yield make_partition(flat)


def enumerate_witness_pairs(n: int) -> Iterator[WitnessPair]:
    """Every (distinct partition of n, even part of it) pair.

    Pairs are grouped by partition in enumeration order; within a partition
    the even parts come out descending.  The stream length is the total
    number of even parts over all distinct partitions of n.
    """
    for p in enumerate_distinct(n):
        for part, _ in p.entries:
            if part % 2 == 0:
                yield WitnessPair(p, part)
