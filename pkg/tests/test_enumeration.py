import pytest

from beckparts.enumeration import (
    EnumerationQuery,
    enumerate_distinct,
    enumerate_partitions,
    enumerate_witness_pairs,
)
from beckparts.partitions import PartitionClass, classify, parse_partition

from oracles import (
    all_partitions_brute,
    distinct_partitions_brute,
    unrestricted_count_dp,
)


def P(text):
    return parse_partition(text)


def texts(stream):
    return [p.to_text() for p in stream]


# -- worked example sets -----------------------------------------------------


def test_bo_of_6_exact():
    got = texts(enumerate_partitions(EnumerationQuery(6, PartitionClass.BO)))
    assert got == ["6", "4+1^2", "3+2+1", "2^3", "2+1^4"]


def test_ce_of_7_exact():
    got = texts(enumerate_partitions(EnumerationQuery(7, PartitionClass.CE)))
    assert got == ["3+2^2", "2^3+1"]


def test_bo_prime_of_6_matches_bo():
    bo = texts(enumerate_partitions(EnumerationQuery(6, PartitionClass.BO)))
    bo_prime = texts(enumerate_partitions(EnumerationQuery(6, PartitionClass.BO_PRIME)))
    assert bo == bo_prime


def test_be_prime_of_6_exact():
    got = texts(enumerate_partitions(EnumerationQuery(6, PartitionClass.BE_PRIME)))
    assert got == ["2^2+1^2"]


def test_n_zero_yields_empty_partition_only():
    assert texts(enumerate_partitions(EnumerationQuery(0))) == ["0"]
    assert texts(enumerate_partitions(EnumerationQuery(0, PartitionClass.DISTINCT))) == ["0"]
    assert texts(enumerate_partitions(EnumerationQuery(0, PartitionClass.BO))) == []


# -- ordering and determinism -------------------------------------------------


def test_descending_lex_order():
    got = texts(enumerate_partitions(EnumerationQuery(6)))
    assert got[:4] == ["6", "5+1", "4+2", "4+1^2"]
    flat = [tuple(p.parts()) for p in enumerate_partitions(EnumerationQuery(8))]
    assert flat == sorted(flat, reverse=True)


def test_streams_are_deterministic():
    q = EnumerationQuery(11, PartitionClass.CO)
    assert list(enumerate_partitions(q)) == list(enumerate_partitions(q))


def test_max_part_bound():
    got = texts(enumerate_partitions(EnumerationQuery(6, max_part=3)))
    assert got == ["3^2", "3+2+1", "3+1^3", "2^3", "2^2+1^2", "2+1^4", "1^6"]
    assert all(max(p.parts()) <= 3 for p in enumerate_partitions(EnumerationQuery(9, max_part=3)))


def test_query_validation():
    with pytest.raises(ValueError):
        EnumerationQuery(-1)
    with pytest.raises(ValueError):
        EnumerationQuery(5, max_part=0)


# -- distinct streams ----------------------------------------------------------


def test_distinct_partitions_of_7():
    assert texts(enumerate_distinct(7)) == ["7", "6+1", "5+2", "4+3", "4+2+1"]


def test_distinct_avoiding_examples():
    assert texts(enumerate_distinct(6, avoid=2)) == ["6", "5+1"]
    assert texts(enumerate_distinct(1, avoid=1)) == []


def test_distinct_filter_agrees_with_generic_predicate_path():
    for n in range(9):
        fast = list(enumerate_partitions(EnumerationQuery(n, PartitionClass.DISTINCT)))
        slow = [
            p
            for p in enumerate_partitions(EnumerationQuery(n))
            if PartitionClass.DISTINCT in classify(p)
        ]
        assert fast == slow


# -- witness pairs -------------------------------------------------------------


def test_witness_pairs_of_6():
    got = [w.to_text() for w in enumerate_witness_pairs(6)]
    assert got == ["(6, 6)", "(4+2, 4)", "(4+2, 2)", "(3+2+1, 2)"]


def test_witness_pair_counts():
    assert sum(1 for _ in enumerate_witness_pairs(7)) == 5
    assert list(enumerate_witness_pairs(1)) == []


# -- brute-force cross-checks ---------------------------------------------------


@pytest.mark.parametrize("n", range(13))
def test_matches_bruteforce_all_partitions(n):
    got = sorted(tuple(p.parts()) for p in enumerate_partitions(EnumerationQuery(n)))
    assert got == sorted(all_partitions_brute(n))
    assert len(got) == unrestricted_count_dp(n)


@pytest.mark.parametrize("n", range(13))
def test_matches_bruteforce_distinct(n):
    got = sorted(tuple(p.parts()) for p in enumerate_distinct(n))
    assert got == sorted(distinct_partitions_brute(n))
    for m in (1, 2, 3):
        got_avoid = sorted(tuple(p.parts()) for p in enumerate_distinct(n, avoid=m))
        assert got_avoid == sorted(distinct_partitions_brute(n, avoid=m))


def test_euler_identity_on_streams():
    for n in range(21):
        odd = sum(1 for _ in enumerate_partitions(EnumerationQuery(n, PartitionClass.ODD)))
        distinct = sum(1 for _ in enumerate_distinct(n))
        assert odd == distinct


def test_class_streams_partition_their_supersets():
    for n in range(15):
        all_parts = list(enumerate_partitions(EnumerationQuery(n)))
        one_even = {p for p in all_parts if len(p.even_entries()) == 1}
        bo = set(enumerate_partitions(EnumerationQuery(n, PartitionClass.BO)))
        be = set(enumerate_partitions(EnumerationQuery(n, PartitionClass.BE)))
        bop = set(enumerate_partitions(EnumerationQuery(n, PartitionClass.BO_PRIME)))
        bep = set(enumerate_partitions(EnumerationQuery(n, PartitionClass.BE_PRIME)))
        assert bo | be == one_even and not bo & be
        assert bop | bep == one_even and not bop & bep
        one_repeated = {p for p in all_parts if len(p.repeated_entries()) == 1}
        co = set(enumerate_partitions(EnumerationQuery(n, PartitionClass.CO)))
        ce = set(enumerate_partitions(EnumerationQuery(n, PartitionClass.CE)))
        assert co | ce == one_repeated and not co & ce


def test_parity_correspondence_as_sets_small():
    for n in range(15):
        bo = set(enumerate_partitions(EnumerationQuery(n, PartitionClass.BO)))
        be = set(enumerate_partitions(EnumerationQuery(n, PartitionClass.BE)))
        bop = set(enumerate_partitions(EnumerationQuery(n, PartitionClass.BO_PRIME)))
        bep = set(enumerate_partitions(EnumerationQuery(n, PartitionClass.BE_PRIME)))
        if n % 2 == 0:
            assert bo == bop and be == bep
        else:
            assert bo == bep and be == bop
