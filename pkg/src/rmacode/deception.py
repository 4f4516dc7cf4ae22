"""Probabilities of deception for the RM authentication scheme.

Three independent routes compute the substitution probability:

``closed_form``
    Maximise ``C(w, wt) * C(n-w, l-wt) / C(n, l)`` over the prefix-form
    codeword weights ``n/2**r <= w <= n/2`` of the sub-code.
``bruteforce_simplified``
    For every nonzero source, count how many coordinate subsets produce each
    tag, and take the largest fraction.
``bruteforce_definition``
    Build the full key-by-source tag table and evaluate the conditional
    success probability of every (observed, forged) message pair.

Each route is checked against the next on small parameters. All
probabilities are exact :class:`fractions.Fraction` values.
"""

from __future__ import annotations

import os
from collections import defaultdict
from dataclasses import dataclass, field, replace
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from math import comb

import numpy as np

from .auth import AuthConfig, project
from .bits import BitVector
from .combinatorics import colex_blocks, colex_subsets
from .errors import GuardrailError, NoWitnessError
from .rm_code import encode_source, prefix_codeword_weights, subcode_codewords

CLOSED_FORM = "closed_form"
BRUTEFORCE_SIMPLIFIED = "bruteforce_simplified"
BRUTEFORCE_DEFINITION = "bruteforce_definition"

DEFAULT_MAX_KEYS = 10**6
DEFAULT_MAX_SUBSETS = 10**8
MAX_DEFINITION_SOURCES = 1 << 12
MAX_BRUTEFORCE_SOURCES = 1 << 20


def max_keys() -> int:
    return int(os.environ.get("RMACODE_GUARDRAIL_KEYS", DEFAULT_MAX_KEYS))


def max_subsets() -> int:
    return int(os.environ.get("RMACODE_GUARDRAIL_SUBSETS", DEFAULT_MAX_SUBSETS))


def dec4(x: Fraction) -> str:
    """Four-decimal rendering with round-half-even."""
    with localcontext() as ctx:
        ctx.prec = 60
        value = Decimal(x.numerator) / Decimal(x.denominator)
        return str(value.quantize(Decimal("0.0001"), rounding=ROUND_HALF_EVEN))


def frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class DeceptionReport:
    p_i: Fraction
    p_s: Fraction
    witness_w: int
    witness_wt: int
    method: str
    m: int
    r: int
    M: int
    l: int

    def satisfies_bounds(self) -> bool:
        return self.p_s >= self.p_i == Fraction(1, 2**self.l)

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "r": self.r,
            "M": self.M,
            "l": self.l,
            "P_I": frac_str(self.p_i),
            "P_I_dec4": dec4(self.p_i),
            "P_S": frac_str(self.p_s),
            "P_S_dec4": dec4(self.p_s),
            "w": self.witness_w,
            "wt": self.witness_wt,
            "method": self.method,
        }

    def to_record(self) -> str:
        return " ".join(str(v) for v in self.to_dict().values())



@dataclass
class TagDistribution:
    """How many coordinate subsets ``k1`` project a fixed codeword onto each tag."""

    l: int
    counts: dict[int, int] = field(default_factory=dict)

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def count(self, tag: BitVector | int) -> int:
        return self.counts.get(int(tag), 0)

    def max_count(self) -> int:
        return max(self.counts.values())

    def p_t(self) -> Fraction:
        return Fraction(self.max_count(), self.total)

    def best_tags(self) -> list[BitVector]:
        top = self.max_count()
        return [BitVector(self.l, t) for t in sorted(self.counts) if self.counts[t] == top]

    def as_bitvectors(self) -> dict[BitVector, int]:
        return {BitVector(self.l, t): c for t, c in sorted(self.counts.items())}


def p_impersonation(l: int) -> Fraction:
    if l < 1:
        raise ValueError(f"tag length must be >= 1, got {l}")
    return Fraction(1, 2**l)


def wt_range(w: int, n: int, l: int) -> tuple[int, int]:
    """Admissible tag weights for the prefix codeword of weight ``w``."""
    return max(0, l - (n - w)), min(l, w)


def _binom(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


def count_tags_by_weight(w: int, n: int, l: int, wt: int) -> int:
    """Number of ``l``-subsets hitting exactly ``wt`` of the ``w`` ones in a length-``n`` word."""
    return _binom(w, wt) * _binom(n - w, l - wt)


def _report(config: AuthConfig, p_s: Fraction, w: int, wt: int, method: str) -> DeceptionReport:
    code = config.code
    return DeceptionReport(
        p_i=p_impersonation(config.l),
        p_s=p_s,
        witness_w=w,
        witness_wt=wt,
        method=method,
        m=code.m,
        r=code.r,
        M=config.M,
        l=config.l,
    )


def p_substitution_closed_form(config: AuthConfig) -> DeceptionReport:
    code = config.code
    n, l = code.n, config.l
    lo, hi = n >> code.r, n // 2
    weights = sorted(w for w in prefix_codeword_weights(code, config.params) if lo <= w <= hi)
    if not weights:
        raise NoWitnessError(
            f"RM({code.m},{code.r}) with M={config.M} has no prefix-form codeword with "
            f"{lo} <= w <= {hi}; use p_substitution_bruteforce"
        )
    best = None
    for w in weights:
        wt_min, wt_max = wt_range(w, n, l)
        for wt in range(wt_min, wt_max + 1):
            c = count_tags_by_weight(w, n, l, wt)
            if best is None or c > best[0]:
                best = (c, w, wt)
    c, w, wt = best
    return _report(config, Fraction(c, comb(n, l)), w, wt, CLOSED_FORM)


def _check_subsets(n: int, l: int, limit: int | None):
    limit = max_subsets() if limit is None else limit
    if comb(n, l) > limit:
        raise GuardrailError(f"C({n},{l}) coordinate subsets", comb(n, l), limit)


def _tag_counts(bits: np.ndarray, l: int) -> dict[int, int]:
    n = bits.shape[0]
    counts: dict[int, int] = defaultdict(int)
    if l <= 16:
        weights = (1 << np.arange(l - 1, -1, -1)).astype(np.int64)
        total = np.zeros(1 << l, dtype=np.int64)
        for block in colex_blocks(n, l):
            tags = bits[block].astype(np.int64) @ weights
            total += np.bincount(tags, minlength=1 << l)
        for t in np.flatnonzero(total):
            counts[int(t)] = int(total[t])
    else:
        for block in colex_blocks(n, l):
            packed = np.packbits(bits[block], axis=1)
            rows, freq = np.unique(packed, axis=0, return_counts=True)
            for row, f in zip(rows, freq):
                counts[int.from_bytes(row.tobytes(), "big") >> (8 * packed.shape[1] - l)] += int(f)
    return dict(counts)


def tag_distribution(c: BitVector, l: int, limit: int | None = None) -> TagDistribution:
    """Count, over all ``l``-subsets ``k1`` in colex order, the tag ``project(c, k1)``."""
    _check_subsets(len(c), l, limit)
    return TagDistribution(l, _tag_counts(c.to_array(), l))


def p_substitution_bruteforce(config: AuthConfig, limit: int | None = None) -> DeceptionReport:
    code, n, l = config.code, config.n, config.l
    _check_subsets(n, l, limit)
    if (1 << config.M) > MAX_BRUTEFORCE_SOURCES:
        raise GuardrailError("2^M sources", 1 << config.M, MAX_BRUTEFORCE_SOURCES)
    best = None
    for s, cw in subcode_codewords(code, config.params):
        if s == 0:
            continue
        dist = tag_distribution(BitVector(n, cw), l, limit)
        top = dist.max_count()
        wt = min(t.weight() for t in dist.best_tags())
        key = (-top, cw.bit_count(), wt)
        if best is None or key < best:
            best = key
    top, w, wt = -best[0], best[1], best[2]
    return _report(config, Fraction(top, comb(n, l)), w, wt, BRUTEFORCE_SIMPLIFIED)


def _check_definition(config: AuthConfig, limit: int | None):
    limit = max_keys() if limit is None else limit
    keys = comb(config.n, config.l) * 2**config.l
    if keys > limit:
        raise GuardrailError("keys C(n,l)*2^l", keys, limit)
    if (1 << config.M) > MAX_DEFINITION_SOURCES:
        raise GuardrailError("2^M sources", 1 << config.M, MAX_DEFINITION_SOURCES)


def key_order(config: AuthConfig) -> list[tuple[tuple[int, ...], int]]:
    """Canonical key order: ``k1`` in colex order, then ``k2`` ascending."""
    return [(k1, k2) for k1 in colex_subsets(config.n, config.l) for k2 in range(2**config.l)]


def matrix_sources(config: AuthConfig) -> list[BitVector]:
    """Sources in authentication-matrix column order.

    Column ``j`` holds the source whose first bit is the least significant
    bit of ``j``: for ``M = 2`` the columns are ``00, 10, 01, 11``.
    """
    M = config.M
    return [BitVector.from_bits((j >> i) & 1 for i in range(M)) for j in range(1 << M)]


def authentication_matrix(config: AuthConfig, limit: int | None = None) -> np.ndarray:
    """Tag of every (key, source) pair as a ``(|K|, 2**M)`` integer array.

    Rows follow :func:`key_order`; columns follow :func:`matrix_sources`.
    Entries are tags read as MSB-first integers.
    """
    _check_definition(config, limit)
    l = config.l
    codewords = [encode_source(config.code, config.params, s) for s in matrix_sources(config)]
    subsets = list(colex_subsets(config.n, l))
    proj = np.array([[project(c, k1).value for c in codewords] for k1 in subsets], dtype=np.int64)
    masks = np.arange(2**l, dtype=np.int64)
    return (proj[:, None, :] ^ masks[None, :, None]).reshape(len(subsets) * 2**l, 1 << config.M)


def p_deception_from_definitions(config: AuthConfig, limit: int | None = None) -> DeceptionReport:
    A = authentication_matrix(config, limit)
    num_keys, num_sources = A.shape
    T = 2**config.l

    # impersonation: best forged (s', t') over the whole key space
    imp = max(int(np.bincount(A[:, s], minlength=T).max()) for s in range(num_sources))
    p_i = Fraction(imp, num_keys)

    codewords = [
        encode_source(config.code, config.params, s).value for s in matrix_sources(config)
    ]
    best = None
    for s in range(num_sources):
        observed = np.bincount(A[:, s], minlength=T)
        for s2 in range(num_sources):
            if s2 == s:
                continue
            joint = np.bincount(A[:, s] * T + A[:, s2], minlength=T * T).reshape(T, T)
            for t in np.flatnonzero(observed):
                row = joint[t]
                p = Fraction(int(row.max()), int(observed[t]))
                w = (codewords[s] ^ codewords[s2]).bit_count()
                wt = min((int(t) ^ int(t2)).bit_count() for t2 in np.flatnonzero(row == row.max()))
                key = (-p, w, wt)
                if best is None or key < best:
                    best = key
    p_s, w, wt = -best[0], best[1], best[2]
    return replace(_report(config, p_s, w, wt, BRUTEFORCE_DEFINITION), p_i=p_i)


def matrix_csv(config: AuthConfig, A: np.ndarray | None = None) -> str:
    """Authentication matrix as CSV: ``k1`` indicator, ``k2``, then one tag column per source.

    The header names source columns by index (see :func:`matrix_sources`).
    """
    if A is None:
        A = authentication_matrix(config)
    n, l = config.n, config.l
    lines = ["k1,k2," + ",".join(str(s) for s in range(A.shape[1]))]
    for (k1, k2), row in zip(key_order(config), A):
        ind = "".join("1" if i in k1 else "0" for i in range(n))
        lines.append(",".join([ind, format(k2, f"0{l}b")] + [format(int(t), f"0{l}b") for t in row]))
    return "\n".join(lines) + "\n"
