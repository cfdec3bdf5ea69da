"""Beck-type partition identities: exact counting, enumeration, bijections
and exhaustive machine verification.

The package relates three families of partition statistics of n:

* a(n), the total number of even parts over all partitions of n into
  distinct parts;
* the counts of partitions with exactly one even part value, split either
  by the total number of parts (bo/be) or by that value's multiplicity
  (bo'/be');
* the counts of partitions with exactly one repeated part, split by the
  parity of the repeated value (co/ce).

It provides two independent counting pipelines (closed summation formulas
and brute-force enumeration), explicit bijections witnessing the identities
a(n) = (-1)^n (bo - be) = co - ce together with their refinements, and a
verification harness that certifies everything exhaustively over finite
ranges.
"""

from .bijections import (
    GLAISHER,
    BijectionPair,
    DomainError,
    ThetaTwoImage,
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
    CSV_HEADER,
    DEFAULT_ENUMERATION_BUDGET,
    INT128_MAX,
    INT128_MIN,
    BudgetError,
    CountRow,
    CountTable,
    build_table,
    count_class_by_enumeration,
    count_class_by_formula,
    count_distinct,
    count_distinct_avoiding,
    count_even_parts_a,
    enumeration_row,
    formula_row,
)
from .enumeration import (
    EnumerationQuery,
    enumerate_distinct,
    enumerate_partitions,
    enumerate_witness_pairs,
)
from .partitions import (
    EMPTY_PARTITION,
    ParseError,
    Partition,
    PartitionClass,
    WitnessPair,
    add,
    classify,
    make_partition,
    parse_partition,
    parse_witness,
    partition_from_json,
    remove_one,
    repeat,
    satisfies,
)
from .verification import (
    BIJECTION_IDS,
    DEFAULT_FORMULA_BUDGET,
    VerificationReport,
    run_all,
    verify_bijection,
    verify_class_parity_sets,
    verify_even_parts_identity,
    verify_harness_self_test,
    verify_parity_refinement,
    verify_pipeline_agreement,
)

__version__ = "1.0.0"

__all__ = [
    "BIJECTION_IDS",
    "BijectionPair",
    "BudgetError",
    "CSV_HEADER",
    "CountRow",
    "CountTable",
    "DEFAULT_ENUMERATION_BUDGET",
    "DEFAULT_FORMULA_BUDGET",
    "DomainError",
    "EMPTY_PARTITION",
    "EnumerationQuery",
    "GLAISHER",
    "INT128_MAX",
    "INT128_MIN",
    "ParseError",
    "Partition",
    "PartitionClass",
    "ThetaTwoImage",
    "VerificationReport",
    "WitnessPair",
    "add",
    "build_table",
    "classify",
    "count_class_by_enumeration",
    "count_class_by_formula",
    "count_distinct",
    "count_distinct_avoiding",
    "count_even_parts_a",
    "enumerate_distinct",
    "enumerate_partitions",
    "enumerate_witness_pairs",
    "enumeration_row",
    "formula_row",
    "glaisher_to_distinct",
    "glaisher_to_odd",
    "make_partition",
    "parse_partition",
    "parse_witness",
    "partition_from_json",
    "remove_one",
    "repeat",
    "run_all",
    "satisfies",
    "theta1",
    "theta1_even",
    "theta1_even_inv",
    "theta1_inv",
    "theta2",
    "theta2_inv",
    "verify_bijection",
    "verify_class_parity_sets",
    "verify_even_parts_identity",
    "verify_harness_self_test",
    "verify_parity_refinement",
    "verify_pipeline_agreement",
]
