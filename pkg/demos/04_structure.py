"""
Why the all-one row is frozen, and which prefix words exist
===========================================================

Feeding the source into the all-one row lets an adversary flip every tag
bit and win with certainty. With the row frozen, the prefix-form codewords
of the sub-code decide the substitution probability.
"""

from rmacode import AuthConfig, p_substitution_bruteforce, prefix_codeword_weights, tag_distribution
from rmacode.bits import BitVector
from rmacode.rm_code import dimension

for freeze in (False, True):
    M = 3 if not freeze else 2
    cfg = AuthConfig.create(2, 1, M, 1, freeze_last=freeze)
    print(f"freeze_last={freeze}: P_S = {p_substitution_bruteforce(cfg).p_s}")

###############################################################################
# Prefix-form weights in the largest frozen sub-code of RM(m, r).

for m, r in ((4, 1), (4, 2), (5, 2), (6, 3)):
    cfg = AuthConfig.create(m, r, dimension(m, r) - 1, 1)
    print(f"RM({m},{r}) prefix weights:", sorted(prefix_codeword_weights(cfg.code, cfg.params)))

###############################################################################
# Tag multiplicities for the prefix word [1]*8 + [0]*8 with three-bit tags:
# only tags of the form 1..10..0 occur.

for tag, count in tag_distribution(BitVector.prefix(8, 16), 3).as_bitvectors().items():
    print(tag, count)
