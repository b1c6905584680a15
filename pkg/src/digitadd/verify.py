"""Brute-force checks over materialized operation tables.

Tables are square numpy arrays over integer labels (see
:func:`digitadd.schemes.operation_table`).  Every check is exhaustive.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .combinatorics import (
    count_additions_general,
    count_compositions,
    count_partitions,
    enumerate_compositions,
    enumerate_partitions,
    enumerate_twist_units,
    DEFAULT_BUDGET,
)
from .digits import Base, as_base, dig_radix, format_digits
from .errors import BudgetExceeded, CapExceeded, ClassificationError, NotAGroupError, TwistedSchemeError
from .schemes import (
    DEFAULT_TABLE_CAP,
    AdditionScheme,
    AxiomReport,
    Composition,
    operation_table,
    scheme_serialize,
)

# elements gathered per associativity chunk
_ASSOC_CHUNK = 1 << 22


def _first_index(mask: np.ndarray):
    """Lexicographically least True index of ``mask``, or None."""
    flat = np.flatnonzero(mask.ravel())
    if flat.size == 0:
        return None
    return tuple(int(i) for i in np.unravel_index(flat[0], mask.shape))


def _latin_counterexample(table: np.ndarray):
    n = table.shape[0]
    expected = np.arange(n)
    candidates = []
    for t, transpose in ((table, False), (table.T, True)):
        bad_rows = np.flatnonzero((np.sort(t, axis=1) != expected).any(axis=1))
        if bad_rows.size:
            row = int(bad_rows[0])
            _, first = np.unique(t[row], return_index=True)
            dup = int(np.setdiff1d(np.arange(n), first)[0])
            candidates.append((dup, row) if transpose else (row, dup))
    return min(candidates) if candidates else None


def _associativity_counterexample(table: np.ndarray):
    n = table.shape[0]
    step = max(1, _ASSOC_CHUNK // (n * n))
    for start in range(0, n, step):
        rows = table[start:start + step]
        left = table[rows]           # [x, y, z] -> (x*y)*z
        right = rows[:, table]       # [x, y, z] -> x*(y*z)
        hit = _first_index(left != right)
        if hit is not None:
            return (hit[0] + start, hit[1], hit[2])
    return None


def check_table(table: np.ndarray) -> AxiomReport:
    table = np.asarray(table)
    n = table.shape[0]
    if table.shape != (n, n):
        raise ValueError(f"operation table must be square, got shape {table.shape}")
    labels = np.arange(n)

    latin_cx = _latin_counterexample(table)
    comm_cx = _first_index(table != table.T)
    assoc_cx = _associativity_counterexample(table)

    identity = None
    left_ids = np.flatnonzero((table == labels).all(axis=1))
    for e in left_ids:
        if (table[:, e] == labels).all():
            identity = int(e)
            break

    inverse_cx = None
    if identity is not None:
        both = (table == identity) & (table.T == identity)
        missing = np.flatnonzero(~both.any(axis=1))
        if missing.size:
            inverse_cx = int(missing[0])

    return AxiomReport(
        element_count=n,
        latin_square=latin_cx is None,
        commutative=comm_cx is None,
        associative=assoc_cx is None,
        has_identity=identity is not None,
        has_inverses=identity is not None and inverse_cx is None,
        identity=identity,
        latin_counterexample=latin_cx,
        commutative_counterexample=comm_cx,
        associative_counterexample=assoc_cx,
        inverse_counterexample=inverse_cx,
    )


def check_group_axioms(s: AdditionScheme, cap: int = DEFAULT_TABLE_CAP) -> AxiomReport:
    return check_table(operation_table(s, cap))


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def format_axiom_report(s: AdditionScheme, report: AxiomReport) -> str:
    """Line-oriented report; elements printed as digit text."""
    b, m = s.base.b, s.m

    def el(k: int) -> str:
        return format_digits(dig_radix(k, b, m))

    def cx(items) -> str:
        return " (counterexample " + ",".join(el(k) for k in items) + ")"

    lines = [
        f"SCHEME: {scheme_serialize(s)}",
        f"ELEMENTS: {report.element_count}",
        "LATIN_SQUARE: " + _yes(report.latin_square)
        + ("" if report.latin_counterexample is None else cx(report.latin_counterexample)),
        "COMMUTATIVE: " + _yes(report.commutative)
        + ("" if report.commutative_counterexample is None else cx(report.commutative_counterexample)),
        "ASSOCIATIVE: " + _yes(report.associative)
        + ("" if report.associative_counterexample is None else cx(report.associative_counterexample)),
        "IDENTITY: " + ("none" if report.identity is None else el(report.identity)),
        "INVERSES: " + _yes(report.has_inverses)
        + ("" if report.inverse_counterexample is None else cx((report.inverse_counterexample,))),
        "GROUP: " + _yes(report.is_abelian_group),
    ]
    return "\n".join(lines) + "\n"


# -- census ----------------------------------------------------------------

TALLY_FIELDS = ("latin_square", "commutative", "associative", "identity", "inverses", "abelian_group")


@dataclass(frozen=True)
class CensusReport:
    base: int
    m: int
    include_twists: bool
    schemes_enumerated: int
    distinct_tables: int
    expected_untwisted: int
    expected_with_twists: int
    tallies: tuple[tuple[str, int], ...] = ()

    @property
    def expected(self) -> int:
        return self.expected_with_twists if self.include_twists else self.expected_untwisted

    def to_text(self) -> str:
        lines = [
            f"census b={self.base} m={self.m} twists={_yes(self.include_twists)}",
            f"schemes={self.schemes_enumerated}",
            f"distinct={self.distinct_tables} expected={self.expected}",
            f"match={_yes(self.distinct_tables == self.expected)}",
            f"expected_untwisted={self.expected_untwisted}",
            f"expected_with_twists={self.expected_with_twists}",
        ]
        lines.extend(f"{name}={count}" for name, count in self.tallies)
        return "\n".join(lines) + "\n"


def iter_schemes(base: Base | int, m: int, include_twists: bool, budget: int = DEFAULT_BUDGET):
    """Every (composition, twist) scheme in deterministic order.

    Compositions come in box-counter order; twists vary fastest, last part
    fastest, units ascending.
    """
    base = as_base(base)
    for comp in enumerate_compositions(m, budget):
        if not include_twists:
            yield AdditionScheme(base, comp)
            continue
        unit_lists = [enumerate_twist_units(base, t, budget) for t in comp]
        for twist in itertools.product(*unit_lists):
            yield AdditionScheme(base, comp, twist)


def census_distinct_tables(
    base: Base | int,
    m: int,
    include_twists: bool = False,
    cap: int = DEFAULT_TABLE_CAP,
    budget: int = DEFAULT_BUDGET,
    axioms: bool = True,
) -> CensusReport:
    base = as_base(base)
    b = base.b
    if b**m > cap:
        raise CapExceeded(f"tables would have {b**m} elements, cap is {cap}")
    expected_twists = count_additions_general(b, m)
    planned = expected_twists if include_twists else count_compositions(m)
    if planned > budget:
        raise BudgetExceeded(f"{planned} schemes exceed budget {budget}")

    seen: set[bytes] = set()
    tally = Counter()
    count = 0
    for s in iter_schemes(base, m, include_twists, budget):
        table = operation_table(s, cap)
        seen.add(table.tobytes())
        count += 1
        if axioms:
            r = check_table(table)
            tally["latin_square"] += r.latin_square
            tally["commutative"] += r.commutative
            tally["associative"] += r.associative
            tally["identity"] += r.has_identity
            tally["inverses"] += r.has_inverses
            tally["abelian_group"] += r.is_abelian_group
    return CensusReport(
        base=b,
        m=m,
        include_twists=include_twists,
        schemes_enumerated=count,
        distinct_tables=len(seen),
        expected_untwisted=count_compositions(m),
        expected_with_twists=expected_twists,
        tallies=tuple((name, tally[name]) for name in TALLY_FIELDS) if axioms else (),
    )


# -- isomorphism fingerprints ------------------------------------------------

@dataclass(frozen=True)
class OrderProfile:
    """Element order -> number of elements of that order."""

    counts: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, counts: dict[int, int]) -> OrderProfile:
        return cls(tuple(sorted(counts.items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.counts)

    def __str__(self) -> str:
        return " ".join(f"{order}:{count}" for order, count in self.counts)


def order_profile(table: np.ndarray, check: bool = True) -> OrderProfile:
    """Multiset of element orders of a group table.

    With ``check`` the table is first run through :func:`check_table` and
    rejected unless it is a group.
    """
    table = np.asarray(table)
    n = table.shape[0]
    if check:
        report = check_table(table)
        if not report.is_group:
            raise NotAGroupError("order profile needs an associative table with identity and inverses")
        e = report.identity
    else:
        ids = np.flatnonzero((table == np.arange(n)).all(axis=1))
        if ids.size == 0:
            raise NotAGroupError("table has no identity")
        e = int(ids[0])

    labels = np.arange(n)
    orders = np.zeros(n, dtype=np.int64)
    power = labels.copy()
    for k in range(1, n + 1):
        done = (power == e) & (orders == 0)
        orders[done] = k
        if (orders > 0).all():
            break
        power = table[power, labels]
    else:
        raise NotAGroupError("some element never reaches the identity")
    return OrderProfile.from_dict(Counter(int(o) for o in orders))


def partition_of_scheme(s: AdditionScheme) -> tuple[int, ...]:
    if s.is_twisted:
        raise TwistedSchemeError("only untwisted schemes have an isomorphism class here")
    return tuple(sorted(s.composition.parts, reverse=True))


@dataclass
class Classification:
    base: int
    m: int
    classes: dict[tuple[int, ...], list[Composition]]
    profiles: dict[tuple[int, ...], OrderProfile] = field(default_factory=dict)

    @property
    def profiles_checked(self) -> bool:
        return bool(self.profiles)

    def to_text(self) -> str:
        lines = [f"classify b={self.base} m={self.m} classes={len(self.classes)}"]
        for part, comps in self.classes.items():
            line = "partition=" + ",".join(map(str, part)) + f" compositions={len(comps)}"
            if part in self.profiles:
                line += f" orders={self.profiles[part]}"
            lines.append(line)
            lines.extend("  comp=" + str(c) for c in comps)
        return "\n".join(lines) + "\n"


def classify_all(
    base: Base | int,
    m: int,
    budget: int = DEFAULT_BUDGET,
    profile_cap: int = 64,
) -> Classification:
    """Group the untwisted compositions of m by their partition.

    When ``b**m <= profile_cap`` every table is also fingerprinted by its
    order profile: profiles must agree inside a class and differ across
    classes, otherwise :class:`ClassificationError` is raised.
    """
    base = as_base(base)
    b = base.b
    classes: dict[tuple[int, ...], list[Composition]] = {p: [] for p in enumerate_partitions(m)}
    for comp in enumerate_compositions(m, budget):
        classes[partition_of_scheme(AdditionScheme(base, comp))].append(comp)
    if len(classes) != count_partitions(m):
        raise ClassificationError(f"{len(classes)} classes but P({m}) = {count_partitions(m)}")

    result = Classification(b, m, classes)
    if b**m > profile_cap:
        return result

    for part, comps in classes.items():
        profiles = {order_profile(operation_table(AdditionScheme(base, c), profile_cap)) for c in comps}
        if len(profiles) != 1:
            raise ClassificationError(f"compositions of class {part} have differing order profiles")
        result.profiles[part] = profiles.pop()
    owners: dict[OrderProfile, tuple[int, ...]] = {}
    for part, prof in result.profiles.items():
        if prof in owners:
            raise ClassificationError(f"classes {owners[prof]} and {part} share order profile {prof}")
        owners[prof] = part
    return result
