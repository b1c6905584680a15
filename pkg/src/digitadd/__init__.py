"""Additions on fixed-length base-b digit vectors.

Carryless (XOR) and carry addition mixed per a composition of the vector
length, optional automorphism twists per component, exact counts of the
resulting operations, brute-force verification and a key-selected block
combiner.
"""

from .combinatorics import (
    c_b,
    count_additions_general,
    count_additions_prime,
    count_compositions,
    count_partitions,
    enumerate_compositions,
    enumerate_partitions,
    enumerate_twist_units,
    euler_phi,
    sum_over_compositions,
    twist_count_for_composition,
)
from .digits import Base, DigitVector, dig_radix, int_radix
from .errors import DigitAddError
from .schemes import (
    AdditionScheme,
    AxiomReport,
    Composition,
    TwistVector,
    operation_table,
    scheme_add,
    scheme_negate,
    scheme_parse,
    scheme_serialize,
    scheme_solve,
    scheme_zero,
)
from .verify import census_distinct_tables, check_group_axioms, classify_all, order_profile

__version__ = "0.1.0"

__all__ = [
    "census_distinct_tables",
    "check_group_axioms",
    "classify_all",
    "order_profile",
    "AdditionScheme",
    "AxiomReport",
    "Base",
    "Composition",
    "DigitAddError",
    "DigitVector",
    "TwistVector",
    "c_b",
    "count_additions_general",
    "count_additions_prime",
    "count_compositions",
    "count_partitions",
    "dig_radix",
    "enumerate_compositions",
    "enumerate_partitions",
    "enumerate_twist_units",
    "euler_phi",
    "int_radix",
    "operation_table",
    "scheme_add",
    "scheme_negate",
    "scheme_parse",
    "scheme_serialize",
    "scheme_solve",
    "scheme_zero",
    "sum_over_compositions",
    "twist_count_for_composition",
]
