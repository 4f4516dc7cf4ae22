"""Fixed-length binary vectors packed into Python integers.

Index 0 is the leftmost entry and maps to the most significant bit of the
packed value, so ``int(v)`` is the MSB-first reading of the vector.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

import numpy as np


@dataclass(frozen=True, slots=True)
class BitVector:
    length: int
    value: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError(f"length must be non-negative, got {self.length}")
        if self.value < 0 or self.value >> self.length:
            raise ValueError(f"value {self.value} does not fit in {self.length} bits")

    @classmethod
    def from_bits(cls, bits: Iterable[int]) -> BitVector:
        value = 0
        length = 0
        for b in bits:
            if b not in (0, 1):
                raise ValueError(f"entries must be 0 or 1, got {b!r}")
            value = (value << 1) | int(b)
            length += 1
        return cls(length, value)

    @classmethod
    def from_str(cls, text: str) -> BitVector:
        return cls.from_bits(int(ch) for ch in text.strip())

    @classmethod
    def zeros(cls, length: int) -> BitVector:
        return cls(length, 0)

    @classmethod
    def ones(cls, length: int) -> BitVector:
        return cls(length, (1 << length) - 1)

    @classmethod
    def prefix(cls, w: int, length: int) -> BitVector:
        """The vector ``[1]*w + [0]*(length - w)``."""
        if not 0 <= w <= length:
            raise ValueError(f"prefix weight {w} outside [0, {length}]")
        return cls(length, ((1 << w) - 1) << (length - w))

    def __len__(self) -> int:
        return self.length

    def __int__(self) -> int:
        return self.value

    def __getitem__(self, i: int) -> int:
        if i < 0:
            i += self.length
        if not 0 <= i < self.length:
            raise IndexError(f"index {i} out of range for length {self.length}")
        return (self.value >> (self.length - 1 - i)) & 1

    def __iter__(self) -> Iterator[int]:
        for i in range(self.length):
            yield (self.value >> (self.length - 1 - i)) & 1

    def _check_same_length(self, other: BitVector):
        if self.length != other.length:
            raise ValueError(f"length mismatch: {self.length} vs {other.length}")

    def __xor__(self, other: BitVector) -> BitVector:
        self._check_same_length(other)
        return BitVector(self.length, self.value ^ other.value)

    def __and__(self, other: BitVector) -> BitVector:
        self._check_same_length(other)
        return BitVector(self.length, self.value & other.value)

    def concat(self, other: BitVector) -> BitVector:
        return BitVector(self.length + other.length, (self.value << other.length) | other.value)

    def reversed(self) -> BitVector:
        return BitVector.from_bits(list(self)[::-1])

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(self)

    def weight(self) -> int:
        return self.value.bit_count()

    def to_array(self) -> np.ndarray:
        return np.fromiter(self, dtype=np.uint8, count=self.length)

    def __str__(self) -> str:
        return format(self.value, f"0{self.length}b") if self.length else ""

    def __repr__(self) -> str:
        return f"BitVector('{self}')"


def weight(v: BitVector) -> int:
    """Hamming weight (number of ones)."""
    return v.weight()


def pack_bits(bits: Iterable[int]) -> bytes:
    """Pack bits MSB-first into bytes, zero-padding the final byte on the right."""
    bits = list(bits)
    out = bytearray((len(bits) + 7) // 8)
    for i, b in enumerate(bits):
        if b:
            out[i // 8] |= 0x80 >> (i % 8)
    return bytes(out)


def unpack_bits(data: bytes, nbits: int) -> list[int]:
    """Inverse of :func:`pack_bits`; the padding bits must be zero."""
    if len(data) != (nbits + 7) // 8:
        raise ValueError(f"expected {(nbits + 7) // 8} bytes for {nbits} bits, got {len(data)}")
    bits = [(data[i // 8] >> (7 - i % 8)) & 1 for i in range(len(data) * 8)]
    if any(bits[nbits:]):
        raise ValueError("non-zero padding bits after payload")
    return bits[:nbits]
