"""Integer partitions as normalized multisets of positive parts.

A partition is stored as a tuple of ``(part, multiplicity)`` runs with the
parts strictly descending, so the multiplicity structure that the bijections
and class predicates manipulate is directly addressable.  The canonical text
form writes multiplicities with a caret and joins runs with ``+``: the
partition with parts 5, 3, 3, 2 renders as ``5+3^2+2``.  The empty partition,
the unique partition of 0, renders as ``0``.

Class predicates
----------------
distinct   every multiplicity is 1
odd        every part is odd
bo / be    exactly one even part value, and the total number of parts
           (counted with multiplicity) is odd / even
bo-prime / be-prime
           exactly one even part value, and that value's own multiplicity
           is odd / even
co / ce    exactly one part value is repeated (multiplicity >= 2), and the
           repeated value is odd / even

"Exactly one even part value" constrains the set of distinct even values,
not the number of even parts: 2+2+2 qualifies.  Likewise "exactly one part
repeated" allows any multiplicity >= 2 for the repeated value, so 1^7
qualifies.  The empty partition is distinct and odd (vacuously) and belongs
to none of the bo/be/co/ce families.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum, unique
from typing import Iterable, Iterator


class ParseError(ValueError):
    """Partition text or JSON input is malformed or not in canonical form."""


@unique
class PartitionClass(Enum):
    """Identifiers for the partition families related by the counting identities."""

    DISTINCT = "distinct"
    ODD = "odd"
    BO = "bo"
    BE = "be"
    CO = "co"
    CE = "ce"
    BO_PRIME = "bo-prime"
    BE_PRIME = "be-prime"


@dataclass(frozen=True, slots=True)
class Partition:
    """A partition of ``n`` as (part, multiplicity) runs, parts strictly descending.

    Instances are immutable, hashable and totally validated on construction.
    ``n`` may be omitted, in which case it is computed; when supplied it must
    equal the actual sum (this catches corrupted serialized input).
    """

    entries: tuple[tuple[int, int], ...] = ()
    n: int = -1

    def __post_init__(self) -> None:
        entries = tuple((int(p), int(m)) for p, m in self.entries)
        object.__setattr__(self, "entries", entries)
        total = 0
        prev = None
        for part, mult in entries:
            if part < 1:
                raise ValueError(f"parts must be positive, got {part}")
            if mult < 1:
                raise ValueError(f"multiplicities must be positive, got {mult}")
            if prev is not None and part >= prev:
                raise ValueError("entries must be strictly descending by part")
            prev = part
            total += part * mult
        if self.n == -1:
            object.__setattr__(self, "n", total)
        elif self.n != total:
            raise ValueError(f"declared sum {self.n} does not match actual sum {total}")

    @classmethod
    def from_entries(cls, pairs: Iterable[tuple[int, int]]) -> "Partition":
        """Build from (part, multiplicity) pairs in any order, merging duplicates."""
        merged: dict[int, int] = {}
        for part, mult in pairs:
            merged[part] = merged.get(part, 0) + mult
        return cls(tuple(sorted(merged.items(), reverse=True)))

    # -- queries ---------------------------------------------------------

    def multiplicity(self, part: int) -> int:
        for p, m in self.entries:
            if p == part:
                return m
        return 0

    def __contains__(self, part: int) -> bool:
        return self.multiplicity(part) > 0

    def parts(self) -> Iterator[int]:
        """All parts, flattened and descending."""
        for p, m in self.entries:
            for _ in range(m):
                yield p

    def num_parts(self) -> int:
        """Number of parts counted with multiplicity."""
        return sum(m for _, m in self.entries)

    def is_distinct(self) -> bool:
        return all(m == 1 for _, m in self.entries)

    def is_odd(self) -> bool:
        return all(p % 2 == 1 for p, _ in self.entries)

    def even_entries(self) -> tuple[tuple[int, int], ...]:
        return tuple((p, m) for p, m in self.entries if p % 2 == 0)

    def odd_entries(self) -> tuple[tuple[int, int], ...]:
        return tuple((p, m) for p, m in self.entries if p % 2 == 1)

    def repeated_entries(self) -> tuple[tuple[int, int], ...]:
        return tuple((p, m) for p, m in self.entries if m >= 2)

    # -- rendering -------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text form: ``part^mult`` runs joined by ``+``, or ``0``."""
        if not self.entries:
            return "0"
        return "+".join(f"{p}^{m}" if m > 1 else str(p) for p, m in self.entries)

    def to_json_obj(self) -> dict:
        """Canonical JSON form ``{"n": ..., "parts": [[part, mult], ...]}``."""
        return {"n": self.n, "parts": [[p, m] for p, m in self.entries]}

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Partition({self.to_text()!r})"


EMPTY_PARTITION = Partition()


@dataclass(frozen=True, slots=True)
class WitnessPair:
    """A distinct partition together with one of its even parts.

    These pairs realize the count "number of even parts over all distinct
    partitions of n" as a set that bijections can target.
    """

    partition: Partition
    even_part: int

    def __post_init__(self) -> None:
        if not self.partition.is_distinct():
            raise ValueError(f"witness partition must be distinct: {self.partition}")
        if self.even_part % 2 != 0:
            raise ValueError(f"witness part must be even, got {self.even_part}")
        if self.partition.multiplicity(self.even_part) != 1:
            raise ValueError(
                f"witness part {self.even_part} does not occur in {self.partition}"
            )

    @property
    def n(self) -> int:
        return self.partition.n

    def to_text(self) -> str:
        return f"({self.partition.to_text()}, {self.even_part})"

    def to_json_obj(self) -> dict:
        return {"partition": self.partition.to_json_obj(), "even_part": self.even_part}

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"WitnessPair({self.partition.to_text()!r}, {self.even_part})"


# -- construction and arithmetic ----------------------------------------


def make_partition(parts: Iterable[int]) -> Partition:
    """Normalize a flat list of positive parts, in any order, into a Partition."""
    counts: dict[int, int] = {}
    for part in parts:
        part = int(part)
        if part < 1:
            raise ValueError(f"parts must be positive, got {part}")
        counts[part] = counts.get(part, 0) + 1
    return Partition(tuple(sorted(counts.items(), reverse=True)))


def repeat(part: int, count: int) -> Partition:
    """The partition consisting of ``count`` copies of ``part``."""
    return Partition(((part, count),))


def add(lam: Partition, mu: Partition) -> Partition:
    """Multiset union: multiplicities add, sums add exactly."""
    merged = dict(lam.entries)
    for p, m in mu.entries:
        merged[p] = merged.get(p, 0) + m
    return Partition(tuple(sorted(merged.items(), reverse=True)))


def remove_one(lam: Partition, part: int) -> Partition:
    """Remove exactly one copy of ``part``.

    Raises ValueError if ``part`` is absent; the bijection code relies on
    this to surface logic errors instead of silently corrupting a map.
    """
    out = []
    found = False
    for p, m in lam.entries:
        if p == part:
            found = True
            if m > 1:
                out.append((p, m - 1))
        else:
            out.append((p, m))
    if not found:
        raise ValueError(f"cannot remove {part}: not a part of {lam}")
    return Partition(tuple(out))


def classify(lam: Partition) -> frozenset[PartitionClass]:
    """Every class predicate the partition satisfies."""
    found = set()
    if lam.is_distinct():
        found.add(PartitionClass.DISTINCT)
    if lam.is_odd():
        found.add(PartitionClass.ODD)
    evens = lam.even_entries()
    if len(evens) == 1:
        _, mult = evens[0]
        found.add(PartitionClass.BO if lam.num_parts() % 2 == 1 else PartitionClass.BE)
        found.add(PartitionClass.BO_PRIME if mult % 2 == 1 else PartitionClass.BE_PRIME)
    repeated = lam.repeated_entries()
    if len(repeated) == 1:
        part, _ = repeated[0]
        found.add(PartitionClass.CO if part % 2 == 1 else PartitionClass.CE)
    return frozenset(found)


def satisfies(lam: Partition, cls: PartitionClass) -> bool:
    return cls in classify(lam)


# -- parsing -------------------------------------------------------------

_TOKEN_RE = re.compile(r"(\d+)(?:\^(\d+))?\Z")


def parse_partition(text: str) -> Partition:
    """Parse canonical text form; rejects non-descending or malformed input."""
    s = text.strip()
    if s == "0":
        return EMPTY_PARTITION
    if not s:
        raise ParseError("empty partition text (the empty partition is written '0')")
    entries = []
    prev = None
    for token in s.split("+"):
        match = _TOKEN_RE.match(token)
        if match is None:
            raise ParseError(f"bad partition token {token!r}")
        part = int(match.group(1))
        mult = int(match.group(2)) if match.group(2) is not None else 1
        if part < 1:
            raise ParseError(f"bad partition token {token!r}: part must be positive")
        if mult < 1:
            raise ParseError(
                f"bad partition token {token!r}: multiplicity must be positive"
            )
        if prev is not None and part >= prev:
            raise ParseError(
                f"bad partition token {token!r}: parts must be strictly descending"
            )
        entries.append((part, mult))
        prev = part
    return Partition(tuple(entries))


def partition_from_json(obj: object) -> Partition:
    """Parse canonical JSON form; rejects non-descending parts and sum mismatches."""
    if not isinstance(obj, dict) or set(obj) != {"n", "parts"}:
        raise ParseError("partition JSON must be an object with keys 'n' and 'parts'")
    n, pairs = obj["n"], obj["parts"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParseError(f"'n' must be an integer, got {n!r}")
    if not isinstance(pairs, list):
        raise ParseError("'parts' must be a list of [part, multiplicity] pairs")
    entries = []
    for pair in pairs:
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(v, int) and not isinstance(v, bool) for v in pair)
        ):
            raise ParseError(f"bad parts entry {pair!r}: expected [part, multiplicity]")
        entries.append((pair[0], pair[1]))
    try:
        return Partition(tuple(entries), n)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_witness(text: str) -> WitnessPair:
    """Parse the witness text form ``(<partition>, <even_part>)``."""
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ParseError(f"witness pair must look like '(<partition>, <part>)': {text!r}")
    body = s[1:-1]
    if "," not in body:
        raise ParseError(f"witness pair is missing the ', <part>' component: {text!r}")
    part_text, _, even_text = body.rpartition(",")
    partition = parse_partition(part_text)
    even_text = even_text.strip()
    if not even_text.isdigit():
        raise ParseError(f"bad witness part token {even_text!r}")
    try:
        return WitnessPair(partition, int(even_text))
    except ValueError as exc:
        raise ParseError(str(exc)) from None
