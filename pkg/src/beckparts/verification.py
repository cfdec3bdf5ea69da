"""Theorem-checking harness: exhaustive finite certification of every identity.

Each check walks a range of n, compares independently computed sides and
returns a :class:`VerificationReport`; a failing check always carries a
counterexample payload with partitions in canonical text form.  The checks
take their count/map functions as keyword parameters so the harness can be
self-tested: injecting a corrupted counter or map must flip the report to
fail (see :func:`verify_harness_self_test`).

Enumerations are memoized per n for the lifetime of the process; all cached
values are immutable, so sharing is safe.  Checks run sequentially, n by n,
which keeps reports deterministic; every underlying operation is pure, so
callers that want parallelism can shard ranges themselves.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

from .bijections import (
    glaisher_to_distinct,
    glaisher_to_odd,
    theta1,
    theta1_even,
    theta1_even_inv,
    theta1_inv,
    theta2,
    theta2_inv,
)
from .counting import (
    DEFAULT_ENUMERATION_BUDGET,
    count_distinct_avoiding,
    formula_row,
)
from .enumeration import (
    EnumerationQuery,
    enumerate_partitions,
    enumerate_witness_pairs,
)
from .partitions import Partition, PartitionClass, add, classify, repeat

DEFAULT_FORMULA_BUDGET = 200

BIJECTION_IDS = ("glaisher", "theta1", "theta1-even", "theta2")


@dataclass(frozen=True, slots=True)
class VerificationReport:
    """Outcome of one check over an inclusive n range."""

    check_name: str
    n_range: tuple[int, int]
    status: str
    counterexample: dict | None
    elapsed: float

    def __post_init__(self) -> None:
        if self.status not in ("pass", "fail"):
            raise ValueError(f"status must be 'pass' or 'fail', got {self.status!r}")
        if self.status == "fail" and not self.counterexample:
            raise ValueError("failing reports must carry a counterexample")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json_obj(self) -> dict:
        return {
            "check": self.check_name,
            "n_range": list(self.n_range),
            "status": self.status,
            "counterexample": self.counterexample,
            "elapsed_seconds": round(self.elapsed, 6),
        }


def _finish(
    name: str, lo: int, hi: int, counterexample: dict | None, started: float
) -> VerificationReport:
    status = "pass" if counterexample is None else "fail"
    return VerificationReport(name, (lo, hi), status, counterexample, time.perf_counter() - started)


@lru_cache(maxsize=None)
def _classified(n: int) -> dict[PartitionClass, tuple[Partition, ...]]:
    """All partitions of n bucketed by the class predicates they satisfy."""
    buckets: dict[PartitionClass, list[Partition]] = {cls: [] for cls in PartitionClass}
    for p in enumerate_partitions(EnumerationQuery(n)):
        for cls in classify(p):
            buckets[cls].append(p)
    return {cls: tuple(members) for cls, members in buckets.items()}


def _enum_counts(n: int) -> dict[str, int]:
    """The ten counters of one n, from enumeration alone."""
    buckets = _classified(n)
    bo, be = len(buckets[PartitionClass.BO]), len(buckets[PartitionClass.BE])
    co, ce = len(buckets[PartitionClass.CO]), len(buckets[PartitionClass.CE])
    a = sum(len(p.even_entries()) for p in buckets[PartitionClass.DISTINCT])
    return {
        "N": len(buckets[PartitionClass.DISTINCT]),
        "a": a,
        "bo": bo,
        "be": be,
        "b": bo - be,
        "co": co,
        "ce": ce,
        "c": co - ce,
        "bo_prime": len(buckets[PartitionClass.BO_PRIME]),
        "be_prime": len(buckets[PartitionClass.BE_PRIME]),
    }


def _formula_abc(n: int) -> tuple[int, int, int]:
    row = formula_row(n)
    return row.a, row.b, row.c


def _formula_quad(n: int) -> tuple[int, int, int, int]:
    row = formula_row(n)
    return row.bo, row.be, row.co, row.ce


def verify_even_parts_identity(
    n_max: int,
    enum_budget: int | None = None,
    *,
    formula_triple: Callable[[int], tuple[int, int, int]] = _formula_abc,
) -> VerificationReport:
    """Check a(n) = (-1)^n b(n) = c(n) for 1 <= n <= n_max.

    The chain is evaluated on formula-pipeline counts for the whole range
    and re-checked against enumeration counts up to the enumeration budget.
    """
    started = time.perf_counter()
    if enum_budget is None:
        enum_budget = DEFAULT_ENUMERATION_BUDGET
    enum_budget = min(enum_budget, n_max)
    counterexample = None
    for n in range(1, n_max + 1):
        a, b, c = formula_triple(n)
        sign = -1 if n % 2 else 1
        if not (a == sign * b and a == c):
            counterexample = {"n": n, "a": a, "b": b, "c": c, "source": "formula"}
            break
        if n <= enum_budget:
            counts = _enum_counts(n)
            if (counts["a"], counts["b"], counts["c"]) != (a, b, c):
                counterexample = {
                    "n": n,
                    "formula": {"a": a, "b": b, "c": c},
                    "enumeration": {k: counts[k] for k in ("a", "b", "c")},
                    "source": "pipeline mismatch",
                }
                break
    return _finish("even_parts_identity", 1, n_max, counterexample, started)


def verify_parity_refinement(
    n_max: int,
    enum_budget: int | None = None,
    *,
    formula_quad: Callable[[int], tuple[int, int, int, int]] = _formula_quad,
) -> VerificationReport:
    """Check bo(n)/be(n) against co(n)/ce(n) with the roles set by the parity of n."""
    started = time.perf_counter()
    if enum_budget is None:
        enum_budget = DEFAULT_ENUMERATION_BUDGET
    enum_budget = min(enum_budget, n_max)
    counterexample = None
    for n in range(1, n_max + 1):
        bo, be, co, ce = formula_quad(n)
        want = (co, ce) if n % 2 == 0 else (ce, co)
        if (bo, be) != want:
            counterexample = {"n": n, "bo": bo, "be": be, "co": co, "ce": ce, "source": "formula"}
            break
        if n <= enum_budget:
            counts = _enum_counts(n)
            got = (counts["bo"], counts["be"], counts["co"], counts["ce"])
            if got != (bo, be, co, ce):
                counterexample = {
                    "n": n,
                    "formula": {"bo": bo, "be": be, "co": co, "ce": ce},
                    "enumeration": dict(zip(("bo", "be", "co", "ce"), got)),
                    "source": "pipeline mismatch",
                }
                break
    return _finish("parity_refinement", 1, n_max, counterexample, started)


def verify_class_parity_sets(n_max: int) -> VerificationReport:
    """Set-level check that the two splittings of the one-even-value family
    coincide for even n and swap for odd n (not just their cardinalities)."""
    started = time.perf_counter()
    counterexample = None
    for n in range(n_max + 1):
        buckets = _classified(n)
        bo = set(buckets[PartitionClass.BO])
        be = set(buckets[PartitionClass.BE])
        bo_prime = set(buckets[PartitionClass.BO_PRIME])
        be_prime = set(buckets[PartitionClass.BE_PRIME])
        want_bo, want_be = (bo_prime, be_prime) if n % 2 == 0 else (be_prime, bo_prime)
        if bo != want_bo or be != want_be:
            diff = sorted(p.to_text() for p in (bo ^ want_bo) | (be ^ want_be))
            counterexample = {"n": n, "set_difference": diff}
            break
    return _finish("class_parity_sets", 0, n_max, counterexample, started)


def verify_pipeline_agreement(
    n_max_enum: int = DEFAULT_ENUMERATION_BUDGET,
    n_max_formula: int = DEFAULT_FORMULA_BUDGET,
    m_max: int = 20,
    *,
    row_fn: Callable[[int], "object"] = formula_row,
    avoiding_count: Callable[..., int] = count_distinct_avoiding,
) -> VerificationReport:
    """Cross-validate the counting pipelines.

    All ten counters must agree between formula and enumeration up to
    n_max_enum, and the two avoid-one-value methods must agree up to
    n_max_formula for every m <= m_max (matching brute force within the
    enumeration range).
    """
    started = time.perf_counter()
    counterexample = None
    for n in range(n_max_enum + 1):
        row = row_fn(n)
        counts = _enum_counts(n)
        for counter, enum_value in counts.items():
            if getattr(row, counter) != enum_value:
                counterexample = {
                    "n": n,
                    "counter": counter,
                    "formula": getattr(row, counter),
                    "enumeration": enum_value,
                }
                break
        if counterexample:
            break
    if counterexample is None:
        for m in range(1, m_max + 1):
            for n in range(n_max_formula + 1):
                rec = avoiding_count(n, m, "recurrence")
                alt = avoiding_count(n, m, "alternating_sum")
                if rec != alt:
                    counterexample = {"n": n, "m": m, "recurrence": rec, "alternating_sum": alt}
                    break
                if n <= n_max_enum:
                    brute = sum(
                        1
                        for p in _classified(n)[PartitionClass.DISTINCT]
                        if m not in p
                    )
                    if rec != brute:
                        counterexample = {"n": n, "m": m, "recurrence": rec, "enumeration": brute}
                        break
            if counterexample:
                break
    return _finish(
        "pipeline_agreement", 0, max(n_max_enum, n_max_formula), counterexample, started
    )


# -- bijection certification -------------------------------------------------


def _members(cls: PartitionClass) -> Callable[[int], tuple]:
    return lambda n: _classified(n)[cls]


def _theta2_codomain(n: int) -> tuple:
    return _classified(n)[PartitionClass.BE_PRIME] + tuple(enumerate_witness_pairs(n))


_BIJECTION_SPECS: dict[str, tuple[Callable, Callable, Callable, Callable]] = {
    "glaisher": (
        _members(PartitionClass.DISTINCT),
        _members(PartitionClass.ODD),
        glaisher_to_odd,
        glaisher_to_distinct,
    ),
    "theta1": (_members(PartitionClass.BO_PRIME), _members(PartitionClass.CO), theta1, theta1_inv),
    "theta1-even": (
        _members(PartitionClass.BE_PRIME),
        _members(PartitionClass.CE),
        theta1_even,
        theta1_even_inv,
    ),
    "theta2": (_members(PartitionClass.BO_PRIME), _theta2_codomain, theta2, theta2_inv),
}


def verify_bijection(
    map_id: str,
    n_max: int,
    *,
    forward: Callable | None = None,
    inverse: Callable | None = None,
) -> VerificationReport:
    """Certify one map exhaustively for 0 <= n <= n_max.

    For every n the map is applied to the full enumerated domain and must
    land inside the enumerated codomain, hit no image twice, cover the
    codomain exactly, and round-trip with its inverse from both sides.
    """
    if map_id not in _BIJECTION_SPECS:
        raise ValueError(f"unknown bijection {map_id!r}; expected one of {BIJECTION_IDS}")
    domain_fn, codomain_fn, default_fwd, default_inv = _BIJECTION_SPECS[map_id]
    fwd = default_fwd if forward is None else forward
    inv = default_inv if inverse is None else inverse
    started = time.perf_counter()
    counterexample = None
    for n in range(n_max + 1):
        domain = domain_fn(n)
        codomain = codomain_fn(n)
        codomain_set = set(codomain)
        seen: dict = {}
        for x in domain:
            y = fwd(x)
            if y not in codomain_set:
                counterexample = {
                    "n": n,
                    "kind": "image outside codomain",
                    "input": x.to_text(),
                    "image": y.to_text(),
                }
                break
            if y in seen:
                counterexample = {
                    "n": n,
                    "kind": "not injective",
                    "inputs": [seen[y].to_text(), x.to_text()],
                    "image": y.to_text(),
                }
                break
            seen[y] = x
            back = inv(y)
            if back != x:
                counterexample = {
                    "n": n,
                    "kind": "round trip failed",
                    "input": x.to_text(),
                    "image": y.to_text(),
                    "returned": back.to_text(),
                }
                break
        if counterexample is None and len(seen) != len(codomain_set):
            missing = sorted(y.to_text() for y in codomain_set - set(seen))
            counterexample = {"n": n, "kind": "not surjective", "missing": missing}
        if counterexample is None:
            for y in codomain:
                if fwd(inv(y)) != y:
                    counterexample = {
                        "n": n,
                        "kind": "codomain round trip failed",
                        "element": y.to_text(),
                    }
                    break
        if counterexample:
            break
    return _finish(f"bijection[{map_id}]", 0, n_max, counterexample, started)


def verify_harness_self_test() -> VerificationReport:
    """Prove the harness can fail: inject one corrupted counter and one
    corrupted map and require both to be caught with counterexamples."""
    started = time.perf_counter()
    issues = []

    def bumped_triple(n: int) -> tuple[int, int, int]:
        a, b, c = _formula_abc(n)
        return (a + 1, b, c) if n == 8 else (a, b, c)

    report = verify_even_parts_identity(10, formula_triple=bumped_triple)
    if report.passed or not report.counterexample:
        issues.append("perturbed counter was not detected")

    def corrupted_theta1(lam: Partition) -> Partition:
        image = theta1(lam)
        if lam.n == 9 and lam == _classified(9)[PartitionClass.BO_PRIME][0]:
            return add(image, repeat(1, 2))
        return image

    report = verify_bijection("theta1", 10, forward=corrupted_theta1)
    if report.passed or not report.counterexample:
        issues.append("corrupted map output was not detected")

    counterexample = None if not issues else {"issues": issues}
    return _finish("harness_self_test", 0, 10, counterexample, started)


def run_all(
    enum_budget: int = DEFAULT_ENUMERATION_BUDGET,
    formula_budget: int = DEFAULT_FORMULA_BUDGET,
) -> list[VerificationReport]:
    """The full battery, in a fixed order."""
    reports = [
        verify_pipeline_agreement(enum_budget, formula_budget),
        verify_even_parts_identity(formula_budget, enum_budget),
        verify_parity_refinement(formula_budget, enum_budget),
        verify_class_parity_sets(enum_budget),
    ]
    reports.extend(verify_bijection(map_id, enum_budget) for map_id in BIJECTION_IDS)
    reports.append(verify_harness_self_test())
    return reports
