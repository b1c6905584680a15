"""Base-b digit vectors and the radix maps between vectors and integers.

Digit position 0 is the least significant one::

    int_radix((x_0, ..., x_{m-1})) = x_0 + x_1*b + ... + x_{m-1}*b**(m-1)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import DigitAddError


def is_prime(n: int) -> bool:
    """Trial-division primality test; bases are small."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Base:
    b: int
    is_prime: bool = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if isinstance(self.b, bool) or not isinstance(self.b, int):
            raise TypeError(f"base must be an int, got {self.b!r}")
        if self.b < 2:
            raise DigitAddError(f"base must be >= 2, got {self.b}")
        object.__setattr__(self, "is_prime", is_prime(self.b))

    def __int__(self) -> int:
        return self.b

    def __str__(self) -> str:
        return str(self.b)


def as_base(base: Base | int) -> Base:
    return base if isinstance(base, Base) else Base(base)


@dataclass(frozen=True, init=False)
class DigitVector:
    """An element of A_b^m, stored as a tuple of small ints."""

    base: Base
    digits: tuple[int, ...]

    def __init__(self, base: Base | int, digits: Iterable[int]):
        base = as_base(base)
        digits = tuple(digits)
        if not digits:
            raise DigitAddError("digit vector must have length >= 1")
        b = base.b
        for i, d in enumerate(digits):
            if not isinstance(d, int) or not 0 <= d < b:
                raise DigitAddError(f"digit {d!r} at position {i} is not in [0, {b})")
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "digits", digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __getitem__(self, i):
        return self.digits[i]

    @property
    def m(self) -> int:
        return len(self.digits)


class DigitRangeError(DigitAddError):
    """An integer does not fit in m base-b digits."""


def int_radix(v: DigitVector) -> int:
    b = v.base.b
    k = 0
    for d in reversed(v.digits):
        k = k * b + d
    return k


def digits_of(k: int, b: int, m: int) -> list[int]:
    """Plain-list form of ``dig_radix`` used in hot loops."""
    out = []
    for _ in range(m):
        k, d = divmod(k, b)
        out.append(d)
    return out


def dig_radix(k: int, base: Base | int, m: int) -> DigitVector:
    base = as_base(base)
    if m < 1:
        raise DigitAddError(f"length must be >= 1, got {m}")
    if not 0 <= k < base.b**m:
        raise DigitRangeError(f"{k} is out of range for {m} digits in base {base.b}")
    return DigitVector(base, digits_of(k, base.b, m))


DIGIT_CHARS = "0123456789abcdefghijklmnopqrstuvwxyz"
MAX_TEXT_BASE = len(DIGIT_CHARS)


def format_digits(v: DigitVector | Sequence[int]) -> str:
    """Digit text, position 0 leftmost."""
    return "".join(DIGIT_CHARS[d] for d in v)


def parse_digits(text: str, base: Base | int, m: int | None = None) -> DigitVector:
    base = as_base(base)
    if base.b > MAX_TEXT_BASE:
        raise DigitAddError(f"base {base.b} has no text form (max {MAX_TEXT_BASE})")
    digits = []
    for ch in text.strip().lower():
        d = DIGIT_CHARS.find(ch)
        if d < 0 or d >= base.b:
            raise DigitAddError(f"invalid digit {ch!r} for base {base.b} in {text!r}")
        digits.append(d)
    if m is not None and len(digits) != m:
        raise DigitAddError(f"{text!r} has {len(digits)} digits, expected {m}")
    return DigitVector(base, digits)
