"""Independent brute-force oracles used to freeze expected values.

Everything here is deliberately implemented with different algorithms than
the package (ascending-part DFS instead of descending-lex recursion, the
unbounded-coin DP instead of the 0/1 table) so a shared bug cannot hide.
Partitions are plain non-increasing tuples of ints.
"""

from __future__ import annotations


def distinct_partitions_brute(n: int, avoid: int | None = None) -> list[tuple[int, ...]]:
    """All sets of distinct positive parts summing to n, by ascending DFS."""
    results: list[tuple[int, ...]] = []

    def go(remaining: int, min_part: int, acc: list[int]) -> None:
        if remaining == 0:
            results.append(tuple(sorted(acc, reverse=True)))
            return
        part = min_part
        while part <= remaining:
            if part != avoid:
                acc.append(part)
                go(remaining - part, part + 1, acc)
                acc.pop()
            part += 1

    go(n, 1, [])
    return results


def all_partitions_brute(n: int) -> list[tuple[int, ...]]:
    """All multisets of positive parts summing to n, by ascending DFS."""
    results: list[tuple[int, ...]] = []

    def go(remaining: int, min_part: int, acc: list[int]) -> None:
        if remaining == 0:
            results.append(tuple(sorted(acc, reverse=True)))
            return
        part = min_part
        while part <= remaining:
            acc.append(part)
            go(remaining - part, part, acc)
            acc.pop()
            part += 1

    go(n, 1, [])
    return results


def unrestricted_count_dp(n: int) -> int:
    """p(n) via the unbounded-coin dynamic program."""
    table = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            table[total] += table[total - part]
    return table[n]


def even_part_total_brute(n: int) -> int:
    """Total count of even parts over all distinct partitions of n."""
    return sum(
        sum(1 for part in t if part % 2 == 0) for t in distinct_partitions_brute(n)
    )
