import numpy as np
import pytest

from digitadd.combinatorics import count_partitions
from digitadd.digits import dig_radix
from digitadd.errors import CapExceeded, NotAGroupError, TwistedSchemeError
from digitadd.schemes import AdditionScheme, operation_table, scheme_add, scheme_parse
from digitadd.verify import (
    OrderProfile,
    census_distinct_tables,
    check_group_axioms,
    check_table,
    classify_all,
    format_axiom_report,
    iter_schemes,
    order_profile,
    partition_of_scheme,
)

from oracles import assoc_counterexample_loops, element_orders, identity_loops


def test_untwisted_schemes_are_groups():
    for m in range(1, 5):
        for s in iter_schemes(2, m, include_twists=False):
            r = check_group_axioms(s)
            assert r.is_abelian_group and r.latin_square and r.identity == 0
            assert r.associative_counterexample is None


def test_twisted_example_counterexample():
    s = AdditionScheme(2, (2,), (3,))
    r = check_group_axioms(s)
    assert r.commutative and r.latin_square
    assert not r.associative and not r.has_identity and not r.has_inverses
    # least failing triple
    assert r.associative_counterexample == (0, 0, 1)
    table = operation_table(s)
    x, y, z = 1, 1, 0
    assert table[table[x, y], z] != table[x, table[y, z]]


def test_base3_twist():
    r = check_group_axioms(AdditionScheme(3, (1,), (2,)))
    assert not r.associative
    assert r.associative_counterexample == (0, 0, 1)


@pytest.mark.parametrize("text", ["b=2 comp=2,1 twist=3,1", "b=3 comp=2 twist=5", "b=5 comp=1,1 twist=2,3"])
def test_counterexample_matches_loop_oracle(text):
    s = scheme_parse(text)
    table = operation_table(s)
    r = check_table(table)
    assert r.associative_counterexample == assoc_counterexample_loops(table.tolist())
    assert r.identity == identity_loops(table.tolist()) is None


def test_non_latin_and_non_commutative_tables():
    n = 5
    sub = np.array([[(i - j) % n for j in range(n)] for i in range(n)])
    r = check_table(sub)
    assert r.latin_square and not r.commutative and not r.associative
    assert r.commutative_counterexample == (0, 1)
    assert not r.has_identity

    const = np.zeros((3, 3), dtype=int)
    r = check_table(const)
    assert not r.latin_square and r.latin_counterexample == (0, 1)
    assert r.commutative and r.associative and not r.has_identity

    # x*y = max(x, y): monoid with identity 0, no inverses
    mx = np.maximum.outer(np.arange(4), np.arange(4))
    r = check_table(mx)
    assert r.associative and r.identity == 0 and not r.has_inverses
    assert r.inverse_counterexample == 1


def test_report_text():
    s = AdditionScheme(2, (2,), (3,))
    text = format_axiom_report(s, check_group_axioms(s))
    assert "ASSOCIATIVE: no (counterexample 00,00,10)" in text
    assert "IDENTITY: none" in text
    assert "GROUP: no" in text
    text = format_axiom_report(AdditionScheme(2, (1, 1)), check_group_axioms(AdditionScheme(2, (1, 1))))
    assert text.splitlines()[-1] == "GROUP: yes"


def test_cap():
    with pytest.raises(CapExceeded):
        check_group_axioms(AdditionScheme(2, (13,)))
    with pytest.raises(CapExceeded):
        census_distinct_tables(2, 13)


@pytest.mark.parametrize("b", [2, 3])
@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_census_untwisted(b, m):
    r = census_distinct_tables(b, m)
    assert r.distinct_tables == r.schemes_enumerated == 2 ** (m - 1) == r.expected
    assert dict(r.tallies)["abelian_group"] == 2 ** (m - 1)


def test_census_text():
    text = census_distinct_tables(2, 3).to_text()
    assert "distinct=4 expected=4" in text.splitlines()
    assert "distinct=1 expected=1" in census_distinct_tables(2, 1).to_text()
    r = census_distinct_tables(2, 3, include_twists=True)
    assert r.schemes_enumerated == 9 and r.expected == 9
    assert r.distinct_tables <= r.schemes_enumerated


@pytest.mark.parametrize(
    "comp, expected",
    [((1, 1), {1: 1, 2: 3}), ((2,), {1: 1, 2: 1, 4: 2}), ((1,), {1: 1, 2: 1})],
)
def test_order_profile(comp, expected):
    assert order_profile(operation_table(AdditionScheme(2, comp))).as_dict() == expected


def test_order_profile_matches_loop_oracle():
    for comp in [(3, 1, 2), (2, 2, 2), (1, 5)]:
        table = operation_table(AdditionScheme(2, comp))
        assert order_profile(table).as_dict() == element_orders(table.tolist(), 0)
    table = operation_table(AdditionScheme(3, (2, 1)))
    prof = order_profile(table)
    assert prof.as_dict() == element_orders(table.tolist(), 0)
    assert sum(prof.as_dict().values()) == 27 and prof.as_dict()[1] == 1


def test_order_profile_rejects_non_groups():
    with pytest.raises(NotAGroupError):
        order_profile(operation_table(AdditionScheme(2, (2,), (3,))))


def test_partition_of_scheme():
    assert partition_of_scheme(AdditionScheme(2, (3, 2, 1, 1, 1))) == (3, 2, 1, 1, 1)
    assert partition_of_scheme(AdditionScheme(2, (1, 2, 3))) == (3, 2, 1)
    with pytest.raises(TwistedSchemeError):
        partition_of_scheme(AdditionScheme(2, (2,), (3,)))


def test_isomorphic_but_different():
    a = AdditionScheme(2, (3, 2, 1, 1, 1))
    b = AdditionScheme(2, (1, 1, 1, 2, 3))
    assert partition_of_scheme(a) == partition_of_scheme(b)
    ta, tb = operation_table(a), operation_table(b)
    assert order_profile(ta) == order_profile(tb)
    assert not np.array_equal(ta, tb)


def test_classify_small():
    c = classify_all(2, 3)
    assert {p: [x.parts for x in comps] for p, comps in c.classes.items()} == {
        (3,): [(3,)],
        (2, 1): [(2, 1), (1, 2)],
        (1, 1, 1): [(1, 1, 1)],
    }
    assert c.profiles_checked
    assert len(classify_all(2, 1).classes) == 1


@pytest.mark.parametrize("m", range(1, 7))
def test_classify_profiles(m):
    c = classify_all(2, m)
    assert len(c.classes) == count_partitions(m)
    assert c.profiles_checked
    assert len(set(c.profiles.values())) == count_partitions(m)


def test_classify_large_without_profiles():
    c = classify_all(2, 8)
    assert len(c.classes) == 22
    assert not c.profiles_checked


def test_classify_composite_base():
    c = classify_all(6, 2, profile_cap=36)
    assert c.profiles_checked and len(c.profiles) == 2


def test_order_profile_str():
    assert str(OrderProfile.from_dict({4: 2, 1: 1, 2: 1})) == "1:1 2:1 4:2"


def test_twisted_counterexample_is_real():
    # recompute through scalar adds, not the table
    s = AdditionScheme(3, (1, 2), (2, 1))
    x, y, z = (dig_radix(k, 3, 3) for k in check_group_axioms(s).associative_counterexample)
    assert scheme_add(s, scheme_add(s, x, y), z) != scheme_add(s, x, scheme_add(s, y, z))
