"""Exact counting: compositions, partitions, totients and scheme totals.

Every count is a Python int, so nothing overflows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .digits import Base, as_base, is_prime
from .errors import BudgetExceeded, DigitAddError
from .schemes import Composition

DEFAULT_BUDGET = 1 << 20


@dataclass(frozen=True)
class Factorization:
    n: int
    prime_powers: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.prime_powers)


def factorize(n: int) -> Factorization:
    if n < 1:
        raise DigitAddError(f"can only factor positive integers, got {n}")
    powers = []
    rest = n
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            alpha = 0
            while rest % p == 0:
                rest //= p
                alpha += 1
            powers.append((p, alpha))
        p += 1 if p == 2 else 2
    if rest > 1:
        powers.append((rest, 1))
    return Factorization(n, tuple(powers))


def euler_phi(n: int) -> int:
    result = 1
    for p, alpha in factorize(n).prime_powers:
        result *= (p - 1) * p ** (alpha - 1)
    return result


# -- compositions ----------------------------------------------------------

def composition_from_boxes(m: int, boxes: int) -> Composition:
    """Fill the m-1 boxes of ``1 _ 1 _ ... _ 1`` from the bits of ``boxes``.

    Bit ``i`` (least significant first) set means a plus in box ``i``,
    merging the ``i``-th and ``(i+1)``-th ones; clear means a comma.
    """
    parts = []
    run = 1
    for i in range(m - 1):
        if boxes >> i & 1:
            run += 1
        else:
            parts.append(run)
            run = 1
    parts.append(run)
    return Composition(tuple(parts))


def enumerate_compositions(m: int, budget: int = DEFAULT_BUDGET) -> list[Composition]:
    """All compositions of m in box-counter order.

    Counter value ``c`` runs from 0 to ``2**(m-1) - 1`` and is decoded by
    :func:`composition_from_boxes`; so ``m = 3`` gives
    ``(1,1,1), (2,1), (1,2), (3)``.
    """
    if m < 1:
        raise DigitAddError(f"m must be >= 1, got {m}")
    total = count_compositions(m)
    if total > budget:
        raise BudgetExceeded(f"{total} compositions of {m} exceed budget {budget}")
    return [composition_from_boxes(m, c) for c in range(total)]


def count_compositions(m: int) -> int:
    if m < 1:
        raise DigitAddError(f"m must be >= 1, got {m}")
    return 1 << (m - 1)


# -- partitions ------------------------------------------------------------

def count_partitions(m: int) -> int:
    if m < 1:
        raise DigitAddError(f"m must be >= 1, got {m}")
    ways = [1] + [0] * m
    for part in range(1, m + 1):
        for total in range(part, m + 1):
            ways[total] += ways[total - part]
    return ways[m]


def _partitions(m: int, largest: int) -> Iterator[tuple[int, ...]]:
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first):
            yield (first,) + rest


def enumerate_partitions(m: int) -> list[tuple[int, ...]]:
    """Weakly decreasing part lists summing to m, in reverse lexicographic order."""
    if m < 1:
        raise DigitAddError(f"m must be >= 1, got {m}")
    return list(_partitions(m, m))


# -- twist units and scheme counts ------------------------------------------

@lru_cache(maxsize=None)
def _units(n: int) -> tuple[int, ...]:
    return tuple(u for u in range(1, n) if math.gcd(u, n) == 1)


def enumerate_twist_units(base: Base | int, t: int, budget: int = DEFAULT_BUDGET) -> list[int]:
    """Ascending units of Z/b^tZ; ``u`` stands for the automorphism ``a -> a*u``."""
    b = as_base(base).b
    if t < 1:
        raise DigitAddError(f"part length must be >= 1, got {t}")
    n = b**t
    if n > budget:
        raise BudgetExceeded(f"{b}^{t} = {n} residues exceed budget {budget}")
    return list(_units(n))


def twist_unit_at(base: Base | int, t: int, index: int) -> int:
    """``enumerate_twist_units(base, t)[index]`` without building the list.

    gcd(u, b**t) == 1 iff gcd(u, b) == 1, so the units repeat with period b.
    """
    b = as_base(base).b
    small = _units(b)
    per_block = len(small)
    if not 0 <= index < per_block * b ** (t - 1):
        raise IndexError(f"unit index {index} out of range for {b}^{t}")
    q, r = divmod(index, per_block)
    return q * b + small[r]


def twist_count_for_composition(base: Base | int, comp: Composition | tuple[int, ...]) -> int:
    b = as_base(base).b
    parts = comp.parts if isinstance(comp, Composition) else tuple(comp)
    return math.prod(euler_phi(b**t) for t in parts)


def count_additions_prime(p: int, m: int) -> int:
    if not is_prime(p):
        raise DigitAddError(f"{p} is not prime")
    if m < 1:
        raise DigitAddError(f"m must be >= 1, got {m}")
    return (p - 1) * (2 * p - 1) ** (m - 1)


def c_b(base: Base | int) -> Fraction:
    """Product of (1 - 1/p) over the distinct primes p dividing b."""
    out = Fraction(1)
    for p in factorize(as_base(base).b).primes:
        out *= 1 - Fraction(1, p)
    return out


def count_additions_general(base: Base | int, m: int) -> int:
    # b**m * C_b * (1 + C_b)**(m-1) with C_b = phi(b)/b, cleared of denominators
    b = as_base(base).b
    if m < 1:
        raise DigitAddError(f"m must be >= 1, got {m}")
    phi = euler_phi(b)
    return phi * (b + phi) ** (m - 1)


@dataclass(frozen=True)
class CountReport:
    base: int
    m: int
    closed_form_total: int
    enumerated_parameter_tuples: int
    distinct_tables: int | None = None

    @property
    def matches(self) -> bool:
        return self.closed_form_total == self.enumerated_parameter_tuples


def sum_over_compositions(base: Base | int, m: int, budget: int = DEFAULT_BUDGET) -> CountReport:
    """Count (composition, twist) tuples by enumeration and by closed form."""
    b = as_base(base).b
    phis = {t: euler_phi(b**t) for t in range(1, m + 1)}
    total = 0
    for comp in enumerate_compositions(m, budget):
        total += math.prod(phis[t] for t in comp)
    return CountReport(b, m, count_additions_general(b, m), total)
