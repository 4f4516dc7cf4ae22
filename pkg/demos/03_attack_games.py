"""
Simulated impersonation and substitution attacks
================================================

The optimal substitution offset is found by scanning all nonzero sources,
then both games are played 100000 times with a fixed seed.
"""

from rmacode import AuthConfig
from rmacode.attack_sim import (
    SubstitutionStrategy,
    best_substitution_strategy,
    run_impersonation,
    run_substitution,
    strategy_success,
)
from rmacode.bits import BitVector
from rmacode.rm_code import encode_source

cfg = AuthConfig.create(4, 1, 4, 3)

strategy = best_substitution_strategy(cfg)
print("optimal offset:", strategy.delta_s, "codeword", encode_source(cfg.code, cfg.params, strategy.delta_s))
print("tag offset:", strategy.delta_t, "exact success", strategy_success(cfg, strategy))

print(run_impersonation(cfg, 100_000, seed=1).record(cfg))
print(run_substitution(cfg, strategy, 100_000, seed=2).record(cfg))

###############################################################################
# A weight-8 codeword that is not prefix-shaped does worse.

weak = SubstitutionStrategy(BitVector.from_str("1000"), BitVector.from_str("100"))
print("weak offset exact success", strategy_success(cfg, weak))
print(run_substitution(cfg, weak, 100_000, seed=3).record(cfg))
