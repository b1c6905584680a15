"""Addition schemes on A_b^m.

A scheme is a base, a composition ``(t_1, ..., t_r)`` of ``m`` and one
unit ``u_i`` per part.  Part ``i`` owns the digit positions
``[o_i, o_i + t_i)`` with ``o_1 = 0`` and the digits of every part read
least significant first.  Inside a part the two operands are combined as::

    dig(u_i * (int(x) + int(y)) mod b**t_i)

With every ``u_i == 1`` this is addition in the product group
Z/b^t_1 x ... x Z/b^t_r; ``b == 2`` with all parts equal to one is XOR and a
single part ``(m,)`` is ordinary integer addition mod ``b**m``.

A unit ``u != 1`` gives a commutative Latin square that is neither
associative nor has an identity.  Such schemes are still valid operations
(the cipher only needs unique division) but the group-only helpers refuse
them.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .digits import Base, DigitVector, as_base, digits_of
from .errors import (
    CapExceeded,
    DimensionMismatch,
    SchemeInvariantError,
    SchemeSyntaxError,
    TwistedSchemeError,
)

DEFAULT_TABLE_CAP = 4096


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise SchemeInvariantError("a composition needs at least one part")
        for t in parts:
            if isinstance(t, bool) or not isinstance(t, int) or t < 1:
                raise SchemeInvariantError(f"composition parts must be positive ints, got {t!r}")

    @property
    def m(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


@dataclass(frozen=True)
class TwistVector:
    """Automorphism units ``u_i = sigma_i(1)``, one per composition part."""

    units: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "units", tuple(self.units))

    @classmethod
    def identity(cls, r: int) -> TwistVector:
        return cls((1,) * r)

    def __len__(self) -> int:
        return len(self.units)

    def __iter__(self):
        return iter(self.units)

    def __str__(self) -> str:
        return ",".join(map(str, self.units))


@dataclass(frozen=True, init=False)
class AdditionScheme:
    base: Base
    composition: Composition
    twist: TwistVector

    def __init__(
        self,
        base: Base | int,
        composition: Composition | Sequence[int],
        twist: TwistVector | Sequence[int] | None = None,
    ):
        base = as_base(base)
        if not isinstance(composition, Composition):
            composition = Composition(tuple(composition))
        if twist is None:
            twist = TwistVector.identity(len(composition))
        elif not isinstance(twist, TwistVector):
            twist = TwistVector(tuple(twist))
        if len(twist) != len(composition):
            raise SchemeInvariantError(
                f"twist has {len(twist)} units but composition has {len(composition)} parts"
            )
        for t, u in zip(composition, twist):
            n = base.b**t
            if isinstance(u, bool) or not isinstance(u, int) or not 1 <= u < n:
                raise SchemeInvariantError(f"twist unit {u!r} not in [1, {n}) for part {t}")
            if math.gcd(u, n) != 1:
                raise SchemeInvariantError(f"twist unit {u} is not coprime to {base.b}^{t} = {n}")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "composition", composition)
        object.__setattr__(self, "twist", twist)

    @property
    def m(self) -> int:
        return self.composition.m

    @property
    def size(self) -> int:
        """Number of elements b**m."""
        return self.base.b**self.m

    @property
    def is_twisted(self) -> bool:
        return any(u != 1 for u in self.twist)

    def components(self) -> list[tuple[int, int, int]]:
        """``(offset, part length, unit)`` for every part, in position order."""
        out = []
        offset = 0
        for t, u in zip(self.composition, self.twist):
            out.append((offset, t, u))
            offset += t
        return out

    def __str__(self) -> str:
        return scheme_serialize(self)


@dataclass(frozen=True)
class AxiomReport:
    """Brute-force verdict on one operation table.

    Elements are reported by their integer labels ``int_radix(v)``.
    Counterexamples are lexicographically least.
    """

    element_count: int
    latin_square: bool
    commutative: bool
    associative: bool
    has_identity: bool
    has_inverses: bool
    identity: int | None = None
    latin_counterexample: tuple[int, int] | None = None
    commutative_counterexample: tuple[int, int] | None = None
    associative_counterexample: tuple[int, int, int] | None = None
    inverse_counterexample: int | None = None

    @property
    def is_group(self) -> bool:
        return self.associative and self.has_identity and self.has_inverses

    @property
    def is_abelian_group(self) -> bool:
        return self.is_group and self.commutative


def _check_vector(s: AdditionScheme, v: DigitVector, name: str) -> None:
    if v.base.b != s.base.b:
        raise DimensionMismatch(f"{name} has base {v.base.b}, scheme has base {s.base.b}")
    if len(v) != s.m:
        raise DimensionMismatch(f"{name} has length {len(v)}, scheme has length {s.m}")


def _part_value(digits: Sequence[int], offset: int, t: int, b: int) -> int:
    k = 0
    for i in range(offset + t - 1, offset - 1, -1):
        k = k * b + digits[i]
    return k


def scheme_add(s: AdditionScheme, x: DigitVector, y: DigitVector) -> DigitVector:
    _check_vector(s, x, "x")
    _check_vector(s, y, "y")
    b = s.base.b
    out: list[int] = []
    for offset, t, u in s.components():
        n = b**t
        xv = _part_value(x.digits, offset, t, b)
        yv = _part_value(y.digits, offset, t, b)
        out.extend(digits_of(u * (xv + yv) % n, b, t))
    return DigitVector(s.base, out)


def scheme_solve(s: AdditionScheme, z: DigitVector, y: DigitVector) -> DigitVector:
    """The unique ``x`` with ``scheme_add(s, x, y) == z``."""
    _check_vector(s, z, "z")
    _check_vector(s, y, "y")
    b = s.base.b
    out: list[int] = []
    for offset, t, u in s.components():
        n = b**t
        zv = _part_value(z.digits, offset, t, b)
        yv = _part_value(y.digits, offset, t, b)
        out.extend(digits_of((pow(u, -1, n) * zv - yv) % n, b, t))
    return DigitVector(s.base, out)


def scheme_zero(s: AdditionScheme) -> DigitVector:
    return DigitVector(s.base, [0] * s.m)


def scheme_negate(s: AdditionScheme, x: DigitVector) -> DigitVector:
    if s.is_twisted:
        raise TwistedSchemeError("negation is only defined for untwisted schemes")
    _check_vector(s, x, "x")
    b = s.base.b
    out: list[int] = []
    for offset, t, _ in s.components():
        n = b**t
        out.extend(digits_of(-_part_value(x.digits, offset, t, b) % n, b, t))
    return DigitVector(s.base, out)


def table_dtype(n: int):
    return np.uint16 if n <= 1 << 16 else np.uint32


def operation_table(s: AdditionScheme, cap: int = DEFAULT_TABLE_CAP) -> np.ndarray:
    """Cayley table over integer labels: ``T[i, j] = int(dig(i) + dig(j))``."""
    n = s.size
    if n > cap:
        raise CapExceeded(f"table would have {n} elements, cap is {cap}")
    b = s.base.b
    labels = np.arange(n, dtype=np.int64)
    table = np.zeros((n, n), dtype=np.int64)
    for offset, t, u in s.components():
        scale = b**offset
        mod = b**t
        part = (labels // scale) % mod
        combined = part[:, None] + part[None, :]
        if u != 1:
            combined *= u
        table += (combined % mod) * scale
    return table.astype(table_dtype(n))


def scheme_serialize(s: AdditionScheme) -> str:
    return f"b={s.base.b} comp={s.composition} twist={s.twist}"


_INT_LIST = re.compile(r"^\d+(,\d+)*$")


def _int_list(key: str, value: str) -> tuple[int, ...]:
    if not _INT_LIST.match(value):
        raise SchemeSyntaxError(f"malformed {key} list {value!r}")
    return tuple(int(v) for v in value.split(","))


def scheme_parse(text: str) -> AdditionScheme:
    """Parse ``b=<int> comp=<t1>,...,<tr> [twist=<u1>,...,<ur>]``."""
    fields: dict[str, str] = {}
    for token in text.split():
        key, sep, value = token.partition("=")
        if not sep or key not in ("b", "comp", "twist"):
            raise SchemeSyntaxError(f"unexpected token {token!r}")
        if key in fields:
            raise SchemeSyntaxError(f"duplicate field {key!r}")
        fields[key] = value
    for key in ("b", "comp"):
        if key not in fields:
            raise SchemeSyntaxError(f"missing field {key!r} in {text!r}")
    if not fields["b"].isdigit():
        raise SchemeSyntaxError(f"malformed base {fields['b']!r}")
    b = int(fields["b"])
    if b < 2:
        raise SchemeInvariantError(f"base must be >= 2, got {b}")
    comp = _int_list("comp", fields["comp"])
    twist = _int_list("twist", fields["twist"]) if "twist" in fields else None
    return AdditionScheme(b, comp, twist)

