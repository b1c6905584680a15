"""Key-selected block combiner.

A key chooses which digits of a block are added with carry and which
without, plus a twist unit per component.  Blocks are then combined with a
caller-supplied keystream under the chosen scheme.  This is a
demonstration of the mixing operation only: there is no keystream
generator and no security claim.

Key layout for block length m with r derived components::

    bytes [0, ceil((m-1)/8))        m-1 box bits, MSB of byte 0 first;
                                    1 = plus (extend part), 0 = comma
    bytes [B + 4*i, B + 4*i + 4)    big-endian selector for part i, taken
                                    mod phi(b**t_i) as an index into the
                                    ascending units
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .combinatorics import composition_from_boxes, euler_phi, twist_unit_at
from .digits import Base, DigitVector, as_base, digits_of
from .errors import DigitAddError, DimensionMismatch, KeyTooShort
from .schemes import AdditionScheme, scheme_add, scheme_serialize, scheme_solve


@dataclass(frozen=True, init=False)
class KeySpec:
    key_bytes: bytes
    base: Base
    block_length: int

    def __init__(self, key_bytes: bytes, base: Base | int, block_length: int):
        if block_length < 1:
            raise DigitAddError(f"block length must be >= 1, got {block_length}")
        object.__setattr__(self, "key_bytes", bytes(key_bytes))
        object.__setattr__(self, "base", as_base(base))
        object.__setattr__(self, "block_length", block_length)


@dataclass(frozen=True)
class SchemeDerivation:
    scheme: AdditionScheme
    transcript: tuple[str, ...]

    def transcript_text(self) -> str:
        return "\n".join(self.transcript) + "\n"


def box_bytes(m: int) -> int:
    return (m - 1 + 7) // 8


def required_key_length(m: int, parts: int) -> int:
    return box_bytes(m) + 4 * parts


def derive_scheme_from_key(k: KeySpec) -> SchemeDerivation:
    key = k.key_bytes
    m = k.block_length
    b = k.base.b
    nbox = box_bytes(m)
    if len(key) < required_key_length(m, 1):
        raise KeyTooShort(required_key_length(m, 1), len(key))

    bits = [key[i // 8] >> (7 - i % 8) & 1 for i in range(m - 1)]
    boxes = sum(bit << i for i, bit in enumerate(bits))
    comp = composition_from_boxes(m, boxes)
    needed = required_key_length(m, len(comp))
    if len(key) < needed:
        raise KeyTooShort(needed, len(key))

    lines = [
        f"base={b} m={m} key_bytes={len(key)}",
        "boxes=" + "".join(map(str, bits)),
        f"composition={comp}",
    ]
    units = []
    for i, t in enumerate(comp):
        start = nbox + 4 * i
        chunk = key[start:start + 4]
        selector = int.from_bytes(chunk, "big")
        phi = euler_phi(b**t)
        u = twist_unit_at(b, t, selector % phi)
        units.append(u)
        lines.append(
            f"part {i + 1} t={t}: key[{start}:{start + 4}]={chunk.hex()}"
            f" -> {selector} mod {phi} = {selector % phi} -> u={u}"
        )
    scheme = AdditionScheme(k.base, comp, units)
    lines.append("scheme=" + scheme_serialize(scheme))
    return SchemeDerivation(scheme, tuple(lines))


def encrypt_block(d: SchemeDerivation, plain: DigitVector, keystream: DigitVector) -> DigitVector:
    return scheme_add(d.scheme, plain, keystream)


def decrypt_block(d: SchemeDerivation, cipher: DigitVector, keystream: DigitVector) -> DigitVector:
    return scheme_solve(d.scheme, cipher, keystream)


def _blocks(d: SchemeDerivation, data: Sequence[int], keystream: Sequence[int]):
    m = d.scheme.m
    if len(data) % m:
        raise DimensionMismatch(f"data length {len(data)} is not a multiple of block length {m}")
    if len(keystream) < len(data):
        raise DimensionMismatch(f"keystream exhausted: {len(keystream)} digits for {len(data)} data digits")
    base = d.scheme.base
    for start in range(0, len(data), m):
        yield (
            DigitVector(base, data[start:start + m]),
            DigitVector(base, keystream[start:start + m]),
        )


def encrypt_stream(d: SchemeDerivation, data: Sequence[int], keystream: Sequence[int]) -> list[int]:
    out: list[int] = []
    for block, ks in _blocks(d, data, keystream):
        out.extend(encrypt_block(d, block, ks))
    return out


def decrypt_stream(d: SchemeDerivation, data: Sequence[int], keystream: Sequence[int]) -> list[int]:
    out: list[int] = []
    for block, ks in _blocks(d, data, keystream):
        out.extend(decrypt_block(d, block, ks))
    return out


def bytes_to_digits(data: bytes) -> list[int]:
    """Raw bytes as base-2 blocks of 8; bit 0 of each byte is digit 0."""
    out: list[int] = []
    for byte in data:
        out.extend(digits_of(byte, 2, 8))
    return out


def digits_to_bytes(digits: Sequence[int]) -> bytes:
    if len(digits) % 8:
        raise DimensionMismatch(f"{len(digits)} bits do not fill whole bytes")
    return bytes(
        sum(bit << j for j, bit in enumerate(digits[i:i + 8]))
        for i in range(0, len(digits), 8)
    )
