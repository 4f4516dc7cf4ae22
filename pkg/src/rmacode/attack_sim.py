"""Monte-Carlo impersonation and substitution games.

Each trial draws a fresh uniform key. In the substitution game a uniform
source is authenticated, the adversary sees ``(s, t)`` and forwards
``(s ^ delta_s, t ^ delta_t)``; the forgery succeeds if the receiver, holding
the same key, accepts it.

Trials are processed in fixed-size batches, each with its own generator
spawned from ``SeedSequence(seed)``, so ``(seed, trials)`` alone fixes the
outcome.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .auth import AuthConfig
from .bits import BitVector
from .deception import MAX_BRUTEFORCE_SOURCES, _check_subsets, p_impersonation, tag_distribution
from .errors import GuardrailError, ParameterError
from .rm_code import active_rows, encode_source, subcode_codewords

BATCH = 8192


@dataclass(frozen=True)
class SubstitutionStrategy:
    delta_s: BitVector
    delta_t: BitVector

    def __post_init__(self):
        if self.delta_s.value == 0:
            raise ParameterError("delta_s must be nonzero: the forged source has to differ")


@dataclass(frozen=True)
class AttackOutcome:
    attack: str
    trials: int
    successes: int
    reference_rate: Fraction
    seed: int
    trace: np.ndarray | None = None

    @property
    def empirical_rate(self) -> Fraction:
        return Fraction(self.successes, self.trials)

    @property
    def z_score(self) -> float:
        p = float(self.reference_rate)
        diff = float(self.empirical_rate) - p
        if p in (0.0, 1.0):
            return 0.0 if diff == 0 else math.copysign(math.inf, diff)
        return diff / math.sqrt(p * (1 - p) / self.trials)

    def record(self, config: AuthConfig) -> str:
        code = config.code
        tag = "imp" if self.attack == "impersonation" else "sub"
        return (
            f"attack={tag} m={code.m} r={code.r} M={config.M} l={config.l} "
            f"trials={self.trials} seed={self.seed} successes={self.successes} "
            f"rate={float(self.empirical_rate):.6f} reference={float(self.reference_rate):.6f} "
            f"z={self.z_score:.3f}"
        )



def strategy_success(config: AuthConfig, strategy: SubstitutionStrategy) -> Fraction:
    """Exact success probability of a fixed offset strategy."""
    c = encode_source(config.code, config.params, strategy.delta_s)
    dist = tag_distribution(c, config.l)
    return Fraction(dist.count(strategy.delta_t), comb(config.n, config.l))


def best_substitution_strategy(config: AuthConfig) -> SubstitutionStrategy:
    """Offset pair with the most coordinate subsets reproducing ``delta_t``.

    Ties go to the smallest source offset, then the smallest tag.
    """
    _check_subsets(config.n, config.l, None)
    if (1 << config.M) > MAX_BRUTEFORCE_SOURCES:
        raise GuardrailError("2^M sources", 1 << config.M, MAX_BRUTEFORCE_SOURCES)
    best = None
    for s, cw in subcode_codewords(config.code, config.params):
        if s == 0:
            continue
        dist = tag_distribution(BitVector(config.n, cw), config.l)
        top = dist.max_count()
        if best is None or top > best[0]:
            best = (top, s, dist.best_tags()[0])
    _, s, t = best
    return SubstitutionStrategy(BitVector(config.M, s), t)


def _batches(seed: int, trials: int):
    nb = -(-trials // BATCH)
    for i, child in enumerate(np.random.SeedSequence(seed).spawn(nb)):
        yield np.random.default_rng(child), min(BATCH, trials - i * BATCH)


def _draw_keys(rng: np.random.Generator, size: int, n: int, l: int):
    """Vectorised partial Fisher-Yates: ``size`` uniform ``l``-subsets plus masks."""
    idx = np.tile(np.arange(n, dtype=np.int32), (size, 1))
    rows = np.arange(size)
    for j in range(l):
        p = j + rng.integers(0, n - j, size=size)
        a = idx[rows, j].copy()
        idx[rows, j] = idx[rows, p]
        idx[rows, p] = a
    k1 = np.sort(idx[:, :l], axis=1)
    k2 = rng.integers(0, 2, size=(size, l), dtype=np.uint8)
    return k1, k2


def _generator_bits(config: AuthConfig) -> np.ndarray:
    rows = [BitVector(config.n, r).to_array() for r in active_rows(config.code, config.params)]
    return np.array(rows, dtype=np.int64)


def _codewords(sources: np.ndarray, G: np.ndarray) -> np.ndarray:
    return (sources.astype(np.int64) @ G) & 1


def _project(codewords: np.ndarray, k1: np.ndarray) -> np.ndarray:
    return np.take_along_axis(codewords, k1, axis=1).astype(np.uint8)


def run_impersonation(
    config: AuthConfig,
    trials: int,
    seed: int,
    forged_s: BitVector | None = None,
    forged_t: BitVector | None = None,
    trace: bool = False,
) -> AttackOutcome:
    """Adversary inserts a fixed ``(s', t')`` against a fresh key every trial.

    Any forged pair does equally well, so the defaults are all-zero vectors.
    """
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}")
    forged_s = forged_s or BitVector.zeros(config.M)
    forged_t = forged_t or BitVector.zeros(config.l)
    c = encode_source(config.code, config.params, forged_s).to_array()[None, :]
    t = forged_t.to_array()
    hits = []
    for rng, size in _batches(seed, trials):
        k1, k2 = _draw_keys(rng, size, config.n, config.l)
        valid = np.take(c[0], k1) ^ k2
        hits.append(np.all(valid == t, axis=1))
    hits = np.concatenate(hits)
    return AttackOutcome(
        "impersonation", trials, int(hits.sum()), p_impersonation(config.l), seed,
        hits if trace else None,
    )


def run_substitution(
    config: AuthConfig,
    strategy: SubstitutionStrategy,
    trials: int,
    seed: int,
    trace: bool = False,
) -> AttackOutcome:
    """Play the intercept-and-replace game with a fixed offset strategy.

    ``reference_rate`` is the exact success probability of ``strategy``,
    which equals the substitution probability when the strategy is optimal.
    """
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}")
    if len(strategy.delta_s) != config.M or len(strategy.delta_t) != config.l:
        raise ParameterError("strategy offsets do not match (M, l)")
    G = _generator_bits(config)
    ds = strategy.delta_s.to_array()
    dt = strategy.delta_t.to_array()
    hits = []
    for rng, size in _batches(seed, trials):
        k1, k2 = _draw_keys(rng, size, config.n, config.l)
        s = rng.integers(0, 2, size=(size, config.M), dtype=np.uint8)
        t = _project(_codewords(s, G), k1) ^ k2
        s_forged = s ^ ds
        t_forged = t ^ dt
        expected = _project(_codewords(s_forged, G), k1) ^ k2
        hits.append(np.all(expected == t_forged, axis=1))
    hits = np.concatenate(hits)
    return AttackOutcome(
        "substitution", trials, int(hits.sum()), strategy_success(config, strategy), seed,
        hits if trace else None,
    )


def trace_csv(outcome: AttackOutcome) -> str:
    if outcome.trace is None:
        raise ValueError("outcome was produced without trace=True")
    return "trial,success\n" + "".join(f"{i},{int(h)}\n" for i, h in enumerate(outcome.trace))
