"""Reed-Muller generator matrices over GF(2) and the frozen-bit sub-code encoder.

Rows are stored as packed integers (see :mod:`rmacode.bits`), so encoding is
a XOR of the selected rows.

Conventions:

* Column ``c`` (``0 <= c < 2**m``) of the degree-1 row for variable ``i``
  holds 1 iff bit ``i`` of ``c`` is 0.
* Within the degree-``j`` block, rows follow the colex order of their
  variable subsets, so the last row is the product of the ``j`` highest
  variables and equals ``[1]*2**(m-j) + [0]*(n - 2**(m-j))``.
* Blocks run from degree ``r`` at the top down to the all-one row at the
  bottom.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterator

from .bits import BitVector
from .combinatorics import colex_subsets
from .errors import DimensionError, GuardrailError, ParameterError

MAX_M = 20


@dataclass(frozen=True)
class RmCode:
    m: int
    r: int
    rows: tuple[int, ...]
    block_bounds: dict

    @property
    def n(self) -> int:
        return 1 << self.m

    @property
    def k_dim(self) -> int:
        return len(self.rows)

    def row(self, i: int) -> BitVector:
        return BitVector(self.n, self.rows[i])

    def to_text(self) -> str:
        """One row per line as '0'/'1' characters."""
        return "\n".join(format(row, f"0{self.n}b") for row in self.rows) + "\n"

    def __repr__(self):
        return f"RmCode(m={self.m}, r={self.r}, n={self.n}, k={self.k_dim})"


def dimension(m: int, r: int) -> int:
    return sum(comb(m, i) for i in range(r + 1))


def _variable_row(m: int, i: int) -> int:
    n = 1 << m
    row = 0
    for c in range(n):
        if not (c >> i) & 1:
            row |= 1 << (n - 1 - c)
    return row


def build_generator(m: int, r: int) -> RmCode:
    """Generator matrix of RM(m, r).

    Example:
        >>> print(build_generator(2, 1).to_text(), end="")
        1010
        1100
        1111
    """
    if m < 1 or not 0 <= r <= m:
        raise ParameterError(f"need m >= 1 and 0 <= r <= m, got m={m}, r={r}")
    if m > MAX_M:
        raise GuardrailError("blocklength exponent m", m, MAX_M)
    n = 1 << m
    variables = [_variable_row(m, i) for i in range(m)]
    rows = []
    bounds = {}
    for j in range(r, 0, -1):
        start = len(rows)
        for subset in colex_subsets(m, j):
            prod = (1 << n) - 1
            for i in subset:
                prod &= variables[i]
            rows.append(prod)
        bounds[j] = (start, len(rows))
    bounds[0] = (len(rows), len(rows) + 1)
    rows.append((1 << n) - 1)
    return RmCode(m=m, r=r, rows=tuple(rows), block_bounds=bounds)


def encode(code: RmCode, u: BitVector) -> BitVector:
    """Compute ``uG`` over GF(2)."""
    if len(u) != code.k_dim:
        raise DimensionError(f"input length {len(u)} != code dimension {code.k_dim}")
    acc = 0
    for bit, row in zip(u, code.rows):
        if bit:
            acc ^= row
    return BitVector(code.n, acc)


@dataclass(frozen=True)
class SubcodeParams:
    """Source length ``M`` and tag length ``l``.

    With ``freeze_last`` (the normal scheme) the source fills the ``M`` rows
    just above the all-one row, and that row plus every row above the source
    block is fed a constant 0. ``freeze_last=False`` places the source on the
    last ``M`` rows instead, which exposes the complement attack.
    """

    M: int
    l: int
    freeze_last: bool = True

    def __post_init__(self):
        if self.l < 1:
            raise ParameterError(f"tag length l must be >= 1, got {self.l}")
        if self.M < self.l:
            raise ParameterError(f"need M >= l, got M={self.M}, l={self.l}")

    def validate(self, code: RmCode):
        if self.M >= code.n:
            raise ParameterError(f"need n > M, got n={code.n}, M={self.M}")
        limit = code.k_dim - 1 if self.freeze_last else code.k_dim
        if self.M > limit:
            if limit == 0:
                raise ParameterError(
                    f"RM({code.m},{code.r}) has only the all-one row; no source rows remain "
                    "once it is frozen"
                )
            raise ParameterError(f"M={self.M} exceeds the {limit} available source rows")

    def source_rows(self, code: RmCode) -> range:
        stop = code.k_dim - 1 if self.freeze_last else code.k_dim
        return range(stop - self.M, stop)


def active_rows(code: RmCode, params: SubcodeParams) -> list[int]:
    """Generator rows carrying the source, in source-bit order."""
    params.validate(code)
    return [code.rows[i] for i in params.source_rows(code)]


def source_to_input(code: RmCode, params: SubcodeParams, s: BitVector) -> BitVector:
    """Place ``s`` into the information vector, with zeros on the frozen positions.

    Example:
        >>> source_to_input(build_generator(5, 1), SubcodeParams(4, 3), BitVector.from_str("1011"))
        BitVector('010110')
    """
    params.validate(code)
    if len(s) != params.M:
        raise DimensionError(f"source length {len(s)} != M={params.M}")
    tail = code.k_dim - params.source_rows(code).stop
    return BitVector(code.k_dim, s.value << tail)


def encode_source(code: RmCode, params: SubcodeParams, s: BitVector) -> BitVector:
    return encode(code, source_to_input(code, params, s))


def subcode_codewords(code: RmCode, params: SubcodeParams) -> Iterator[tuple[int, int]]:
    """Yield ``(source value, packed codeword)`` for every source, in ascending source order."""
    rows = active_rows(code, params)
    M = params.M
    for s in range(1 << M):
        acc = 0
        for j, row in enumerate(rows):
            if (s >> (M - 1 - j)) & 1:
                acc ^= row
        yield s, acc


def _reduce(basis: dict[int, int], v: int) -> int:
    while v:
        top = v.bit_length() - 1
        if top not in basis:
            return v
        v ^= basis[top]
    return 0


def echelon_basis(rows) -> dict[int, int]:
    """XOR basis keyed by leading bit position."""
    basis: dict[int, int] = {}
    for row in rows:
        v = _reduce(basis, row)
        if v:
            basis[v.bit_length() - 1] = v
    return basis


def rank(rows) -> int:
    return len(echelon_basis(rows))


def in_span(rows, target: int) -> bool:
    return _reduce(echelon_basis(rows), target) == 0


def prefix_codeword_weights(code: RmCode, params: SubcodeParams) -> set[int]:
    """Weights ``w`` in ``[1, n-1]`` such that ``[1]*w + [0]*(n-w)`` is a sub-code codeword."""
    basis = echelon_basis(active_rows(code, params))
    n = code.n
    return {w for w in range(1, n) if _reduce(basis, ((1 << w) - 1) << (n - w)) == 0}


def minimum_distance(code: RmCode, max_dim: int = 16) -> int:
    """Smallest nonzero codeword weight by exhaustive span enumeration."""
    if code.k_dim > max_dim:
        raise GuardrailError("codewords to enumerate (2^k)", 1 << code.k_dim, 1 << max_dim)
    best = code.n
    acc = 0
    # Gray-code walk touches every nonzero codeword once
    for i in range(1, 1 << code.k_dim):
        acc ^= code.rows[(i & -i).bit_length() - 1]
        best = min(best, acc.bit_count())
    return best
