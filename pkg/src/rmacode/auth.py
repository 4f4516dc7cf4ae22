"""Keys, tag generation and verification, and the message/key serialisation.

A key is a pair ``(k1, k2)``: ``k1`` picks ``l`` coordinates of the
codeword, ``k2`` is an ``l``-bit mask. The tag of a source ``s`` is the
projection of its sub-code codeword onto ``k1``, XORed with ``k2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .bits import BitVector, pack_bits, unpack_bits
from .errors import DimensionError, ParameterError
from .rm_code import RmCode, SubcodeParams, build_generator, encode_source


@dataclass(frozen=True)
class AuthConfig:
    code: RmCode
    params: SubcodeParams

    def __post_init__(self):
        self.params.validate(self.code)

    @classmethod
    def create(cls, m: int, r: int, M: int, l: int, freeze_last: bool = True) -> AuthConfig:
        return cls(build_generator(m, r), SubcodeParams(M, l, freeze_last))

    @property
    def n(self) -> int:
        return self.code.n

    @property
    def M(self) -> int:
        return self.params.M

    @property
    def l(self) -> int:
        return self.params.l

    def header(self) -> str:
        return f"rmacode m={self.code.m} r={self.code.r} M={self.M} l={self.l}"


@dataclass(frozen=True)
class AuthKey:
    k1: tuple[int, ...]
    k2: BitVector

    def __post_init__(self):
        object.__setattr__(self, "k1", tuple(int(i) for i in self.k1))
        if any(b <= a for a, b in zip(self.k1, self.k1[1:])):
            raise ParameterError(f"k1 must be strictly increasing, got {self.k1}")
        if len(self.k1) != len(self.k2):
            raise ParameterError(f"|k1|={len(self.k1)} but k2 has length {len(self.k2)}")

    @property
    def l(self) -> int:
        return len(self.k1)

    def indicator(self, n: int) -> BitVector:
        """``k1`` as a length-``n`` weight-``l`` vector."""
        value = 0
        for i in self.k1:
            if not 0 <= i < n:
                raise IndexError(f"k1 index {i} out of range for n={n}")
            value |= 1 << (n - 1 - i)
        return BitVector(n, value)

    @classmethod
    def from_indicator(cls, k1: BitVector, k2: BitVector) -> AuthKey:
        return cls(tuple(i for i, b in enumerate(k1) if b), k2)


@dataclass(frozen=True)
class Message:
    s: BitVector
    t: BitVector


def draw_subset(rng: np.random.Generator, n: int, l: int) -> tuple[int, ...]:
    """Uniform size-``l`` subset of ``range(n)`` by a partial Fisher-Yates shuffle."""
    idx = list(range(n))
    for j in range(l):
        p = j + int(rng.integers(n - j))
        idx[j], idx[p] = idx[p], idx[j]
    return tuple(sorted(idx[:l]))


def draw_key(rng: np.random.Generator, n: int, l: int) -> AuthKey:
    k1 = draw_subset(rng, n, l)
    k2 = BitVector.from_bits(int(b) for b in rng.integers(0, 2, size=l))
    return AuthKey(k1, k2)


def sample_key(config: AuthConfig, seed: int) -> AuthKey:
    """Draw a key uniformly from all ``C(n, l) * 2**l`` keys; deterministic in ``seed``."""
    return draw_key(np.random.default_rng(seed), config.n, config.l)


def project(c: BitVector, k1: Sequence[int]) -> BitVector:
    """Entries of ``c`` at the indices ``k1``, in increasing index order."""
    n = len(c)
    value = 0
    for i in sorted(k1):
        if not 0 <= i < n:
            raise IndexError(f"index {i} out of range for length {n}")
        value = (value << 1) | ((c.value >> (n - 1 - i)) & 1)
    return BitVector(len(k1), value)


def _check_key(config: AuthConfig, key: AuthKey):
    if key.l != config.l:
        raise DimensionError(f"key has l={key.l}, config has l={config.l}")


def generate_tag(config: AuthConfig, s: BitVector, key: AuthKey) -> BitVector:
    _check_key(config, key)
    return project(encode_source(config.code, config.params, s), key.k1) ^ key.k2


def verify(config: AuthConfig, msg: Message, key: AuthKey) -> bool:
    if len(msg.t) != config.l:
        raise DimensionError(f"tag length {len(msg.t)} != l={config.l}")
    return generate_tag(config, msg.s, key) == msg.t


def authenticate(config: AuthConfig, s: BitVector, key: AuthKey) -> Message:
    return Message(s, generate_tag(config, s, key))


def encode_message(msg: Message) -> bytes:
    """Wire form: source bits then tag bits, MSB-first, zero-padded to a whole byte."""
    return pack_bits(msg.s.concat(msg.t))


def decode_message(data: bytes, config: AuthConfig) -> Message:
    nbits = config.M + config.l
    need = (nbits + 7) // 8
    if len(data) < need:
        raise DimensionError(f"message needs {need} bytes, got {len(data)}")
    if len(data) > need:
        raise DimensionError(f"{len(data) - need} trailing bytes after message")
    try:
        bits = unpack_bits(data, nbits)
    except ValueError as exc:
        raise DimensionError(str(exc)) from None
    return Message(BitVector.from_bits(bits[: config.M]), BitVector.from_bits(bits[config.M :]))


def dump_key(config: AuthConfig, key: AuthKey) -> str:
    """Two-line key file: parameter header, then hex-packed ``k1`` indicator and ``k2``."""
    _check_key(config, key)
    k1 = pack_bits(key.indicator(config.n)).hex()
    k2 = pack_bits(key.k2).hex()
    return f"{config.header()}\nk1={k1} k2={k2}\n"


def parse_header(line: str) -> dict[str, int]:
    fields = line.split()
    if not fields or fields[0] != "rmacode":
        raise ValueError("key file must start with an 'rmacode' header line")
    values = dict(f.split("=", 1) for f in fields[1:])
    try:
        return {name: int(values[name]) for name in ("m", "r", "M", "l")}
    except KeyError as exc:
        raise ValueError(f"key file header lacks {exc.args[0]}=") from None


def load_key(text: str) -> tuple[AuthConfig, AuthKey]:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 2:
        raise ValueError(f"key file must have 2 lines, got {len(lines)}")
    p = parse_header(lines[0])
    config = AuthConfig.create(p["m"], p["r"], p["M"], p["l"])
    parts = dict(f.split("=", 1) for f in lines[1].split())
    if set(parts) != {"k1", "k2"}:
        raise ValueError("key line must be 'k1=<hex> k2=<hex>'")
    k1 = BitVector.from_bits(unpack_bits(bytes.fromhex(parts["k1"]), config.n))
    k2 = BitVector.from_bits(unpack_bits(bytes.fromhex(parts["k2"]), config.l))
    if k1.weight() != config.l:
        raise ValueError(f"k1 indicator has weight {k1.weight()}, expected l={config.l}")
    return config, AuthKey.from_indicator(k1, k2)
