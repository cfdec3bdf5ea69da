"""Exact counting without enumeration: a DP table plus closed summation formulas.

Two independent pipelines produce the same counters so they can cross-check
each other:

* the enumeration pipeline delegates to :mod:`beckparts.enumeration` and is
  budget-limited (exhaustive generation gets expensive fast);
* the formula pipeline reduces every class count to the distinct-partition
  counter N via summations that terminate once their argument goes negative.

Notation used throughout (all counts are of partitions of n):

* ``N(n)``        partitions into distinct parts; N(n) = 0 for n < 0, N(0) = 1.
* ``N_avoid(n,m)``  distinct partitions with no part equal to m.  Two methods:
  the two-term recurrence N_avoid(n, m) = N(n) - N_avoid(n - m, m), and the
  alternating sum over i >= 0 of (-1)^i N(n - i*m).  They agree; both ship.
* ``bo'(n) = sum over s,k >= 1 of N(n - (2s-1) * 2k)`` - one even value 2k with
  odd multiplicity 2s-1, remainder an odd partition (as many odd partitions
  of r as distinct ones, so N(r) counts them).
* ``be'(n) = sum over s,k >= 1 of N(n - 2s * 2k)``.
* ``co(n) = sum over t >= 2, s >= 1 of N_avoid(n - t * (2s-1), 2s-1)`` - repeated
  odd value 2s-1 with multiplicity t, remainder distinct avoiding it.
* ``ce(n) = sum over t >= 2, s >= 1 of N_avoid(n - t * 2s, 2s)``.
* ``a(n) = sum over k >= 1 of N_avoid(n - 2k, 2k)`` - even parts over all
  distinct partitions: choosing the even part 2k and deleting it leaves a
  distinct partition of n - 2k avoiding 2k.

The unprimed bo/be counters follow from the primed ones by the parity
correspondence (for even n they coincide, for odd n they swap); the
correspondence itself is machine-verified at set level by the verification
module.

All counter values are held to a signed 128-bit range.  Python integers
cannot wrap, so "checked arithmetic" here means an explicit range check
that raises OverflowError naming the offending n instead of ever emitting
a value a 128-bit consumer would truncate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .enumeration import (
    enumerate_distinct,
    enumerate_partitions,
    EnumerationQuery,
)
from .partitions import Partition, PartitionClass, classify

INT128_MAX = 2**127 - 1
INT128_MIN = -(2**127)

DEFAULT_ENUMERATION_BUDGET = 40

FORMULA_COUNTERS = ("bo_prime", "be_prime", "co", "ce", "b_prime")


class BudgetError(ValueError):
    """An enumeration-backed count was requested beyond the configured budget."""


def _checked(value: int, context: str) -> int:
    if not (INT128_MIN <= value <= INT128_MAX):
        raise OverflowError(f"{context} does not fit in signed 128-bit range")
    return value


class _DistinctTable:
    """Cache of N(0..max) plus memoized avoid-one-value rows.

    The table is rebuilt wholesale when it needs to grow and then shared
    read-only, so concurrent readers never observe a half-built row.
    """

    def __init__(self) -> None:
        self._values: list[int] = [1]
        self._avoid_rows: dict[int, list[int]] = {}

    def ensure(self, n_max: int) -> None:
        if n_max < len(self._values):
            return
        size = max(n_max + 1, 2 * len(self._values))
        ways = [0] * size
        ways[0] = 1
        for part in range(1, size):
            for total in range(size - 1, part - 1, -1):
                ways[total] += ways[total - part]
        for total, value in enumerate(ways):
            if value > INT128_MAX:
                raise OverflowError(
                    f"distinct partition count at n={total} does not fit in "
                    "signed 128-bit range"
                )
        self._values = ways
        self._avoid_rows = {}

    def count(self, n: int) -> int:
        if n < 0:
            return 0
        self.ensure(n)
        return self._values[n]

    def avoid_row(self, m: int, n_max: int) -> list[int]:
        """N_avoid(0..n_max, m) computed by the two-term recurrence."""
        self.ensure(n_max)
        row = self._avoid_rows.get(m)
        if row is None or len(row) <= n_max:
            values = self._values
            row = [0] * len(values)
            for n in range(len(values)):
                row[n] = values[n] - (row[n - m] if n >= m else 0)
            self._avoid_rows[m] = row
        return row


_TABLE = _DistinctTable()


def count_distinct(n: int) -> int:
    """N(n): partitions of n into distinct parts; 0 for negative n."""
    return _checked(_TABLE.count(n), f"N({n})")


def count_distinct_avoiding(n: int, m: int, method: str = "recurrence") -> int:
    """Distinct partitions of n containing no part equal to m.

    ``method`` selects between the two-term recurrence and the alternating
    sum of N values; they are proved equal and the verification suite checks
    the equality exhaustively.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    if n < 0:
        return 0
    if method == "recurrence":
        value = _TABLE.avoid_row(m, n)[n]
    elif method == "alternating_sum":
        value = 0
        sign = 1
        arg = n
        while arg >= 0:
            value += sign * _TABLE.count(arg)
            sign = -sign
            arg -= m
    else:
        raise ValueError(f"unknown method {method!r}")
    return _checked(value, f"N_avoid({n}, {m})")


def count_class_by_formula(n: int, which: str) -> int:
    """Formula-pipeline value of one of the class counters.

    ``which`` is one of ``bo_prime``, ``be_prime``, ``co``, ``ce`` or
    ``b_prime`` (the signed difference bo' - be').  Each summation runs until
    its N argument would go negative; N vanishes there, so the truncation is
    exact.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if which == "b_prime":
        value = 0
        k = 1
        while n - 2 * k >= 0:
            value += count_distinct_avoiding(n - 2 * k, 2 * k)
            k += 1
        return _checked(value, f"b_prime({n})")
    if which in ("bo_prime", "be_prime"):
        value = 0
        mult = 1 if which == "bo_prime" else 2
        while 2 * mult <= n:  # smallest term uses even value 2
            even = 2
            while mult * even <= n:
                value += _TABLE.count(n - mult * even)
                even += 2
            mult += 2
        return _checked(value, f"{which}({n})")
    if which in ("co", "ce"):
        value = 0
        start = 1 if which == "co" else 2
        for rep in range(start, n // 2 + 1, 2):
            row = _TABLE.avoid_row(rep, n)
            for t in range(2, n // rep + 1):
                value += row[n - t * rep]
        return _checked(value, f"{which}({n})")
    raise ValueError(f"unknown counter {which!r}")


def count_class_by_enumeration(
    n: int, cls: PartitionClass, budget: int = DEFAULT_ENUMERATION_BUDGET
) -> int:
    """Oracle-pipeline class count, via exhaustive enumeration."""
    if n > budget:
        raise BudgetError(f"n={n} exceeds the enumeration budget {budget}")
    count = sum(1 for _ in enumerate_partitions(EnumerationQuery(n, cls)))
    return _checked(count, f"|{cls.value}({n})|")


def count_even_parts_a(
    n: int, method: str = "formula", budget: int = DEFAULT_ENUMERATION_BUDGET
) -> int:
    """a(n): total number of even parts over all distinct partitions of n."""
    if n < 0:
        return 0
    if method == "formula":
        value = 0
        k = 1
        while n - 2 * k >= 0:
            value += count_distinct_avoiding(n - 2 * k, 2 * k)
            k += 1
    elif method == "enumeration":
        if n > budget:
            raise BudgetError(f"n={n} exceeds the enumeration budget {budget}")
        value = 0
        for p in enumerate_distinct(n):
            value += len(p.even_entries())
    else:
        raise ValueError(f"unknown method {method!r}")
    return _checked(value, f"a({n})")


# -- per-n counter rows ----------------------------------------------------

CSV_HEADER = "n,N,a,bo,be,b,co,ce,c,bo_prime,be_prime"


@dataclass(frozen=True, slots=True)
class CountRow:
    """All ten counters for a single n."""

    n: int
    N: int
    a: int
    bo: int
    be: int
    b: int
    co: int
    ce: int
    c: int
    bo_prime: int
    be_prime: int

    def to_csv(self) -> str:
        return (
            f"{self.n},{self.N},{self.a},{self.bo},{self.be},{self.b},"
            f"{self.co},{self.ce},{self.c},{self.bo_prime},{self.be_prime}"
        )

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "N": self.N,
            "a": self.a,
            "bo": self.bo,
            "be": self.be,
            "b": self.b,
            "co": self.co,
            "ce": self.ce,
            "c": self.c,
            "bo_prime": self.bo_prime,
            "be_prime": self.be_prime,
        }


@dataclass(frozen=True, slots=True)
class CountTable:
    """Counter rows for 0..n_max from a single pipeline."""

    n_max: int
    pipeline: str
    rows: tuple[CountRow, ...]

    def to_csv(self) -> str:
        lines = [CSV_HEADER]
        lines.extend(row.to_csv() for row in self.rows)
        return "\n".join(lines) + "\n"


def formula_row(n: int) -> CountRow:
    """One row of the formula pipeline.

    bo/be come from bo'/be' through the parity correspondence: the two
    splittings of the one-even-value family coincide for even n and swap
    for odd n.
    """
    bo_prime = count_class_by_formula(n, "bo_prime")
    be_prime = count_class_by_formula(n, "be_prime")
    co = count_class_by_formula(n, "co")
    ce = count_class_by_formula(n, "ce")
    bo, be = (bo_prime, be_prime) if n % 2 == 0 else (be_prime, bo_prime)
    return CountRow(
        n=n,
        N=count_distinct(n),
        a=count_even_parts_a(n, "formula"),
        bo=bo,
        be=be,
        b=_checked(bo - be, f"b({n})"),
        co=co,
        ce=ce,
        c=_checked(co - ce, f"c({n})"),
        bo_prime=bo_prime,
        be_prime=be_prime,
    )


def enumeration_row(n: int, budget: int = DEFAULT_ENUMERATION_BUDGET) -> CountRow:
    """One row of the enumeration pipeline; every counter from brute force."""
    if n > budget:
        raise BudgetError(f"n={n} exceeds the enumeration budget {budget}")
    tallies = {cls: 0 for cls in PartitionClass}
    for p in enumerate_partitions(EnumerationQuery(n)):
        for cls in classify(p):
            tallies[cls] += 1
    bo, be = tallies[PartitionClass.BO], tallies[PartitionClass.BE]
    co, ce = tallies[PartitionClass.CO], tallies[PartitionClass.CE]
    return CountRow(
        n=n,
        N=tallies[PartitionClass.DISTINCT],
        a=count_even_parts_a(n, "enumeration", budget=budget),
        bo=bo,
        be=be,
        b=bo - be,
        co=co,
        ce=ce,
        c=co - ce,
        bo_prime=tallies[PartitionClass.BO_PRIME],
        be_prime=tallies[PartitionClass.BE_PRIME],
    )


def build_table(
    n_max: int,
    pipeline: str = "formula",
    budget: int = DEFAULT_ENUMERATION_BUDGET,
) -> CountTable:
    """Counter rows for n = 0..n_max via the chosen pipeline."""
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    if pipeline == "formula":
        _TABLE.ensure(n_max)
        rows = tuple(formula_row(n) for n in range(n_max + 1))
    elif pipeline == "enumeration":
        rows = tuple(enumeration_row(n, budget=budget) for n in range(n_max + 1))
    else:
        raise ValueError(f"unknown pipeline {pipeline!r}")
    return CountTable(n_max=n_max, pipeline=pipeline, rows=rows)
