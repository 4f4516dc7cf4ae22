"""
Toy scheme: RM(2,1), two source bits, one tag bit
==================================================

Build the generator, authenticate a message, and print the full
key-by-source tag table together with the exact deception probabilities.
"""

from rmacode import (
    AuthConfig,
    AuthKey,
    BitVector,
    authentication_matrix,
    encode_source,
    generate_tag,
    p_deception_from_definitions,
    verify,
)
from rmacode.auth import authenticate
from rmacode.deception import key_order, matrix_sources

cfg = AuthConfig.create(m=2, r=1, M=2, l=1)
print(cfg.code.to_text())

###############################################################################
# Every source maps to a codeword of the sub-code; the all-one row is frozen.

for s in ("00", "01", "10", "11"):
    c = encode_source(cfg.code, cfg.params, BitVector.from_str(s))
    print(f"s={s} -> c={c}")

###############################################################################
# Tag with k1 = {0}, k2 = 0 and check the receiver accepts it.

key = AuthKey((0,), BitVector.from_str("0"))
msg = authenticate(cfg, BitVector.from_str("01"), key)
print("tag:", msg.t, "accepted:", verify(cfg, msg, key))
print("flipped tag accepted:", verify(cfg, type(msg)(msg.s, msg.t ^ BitVector.ones(1)), key))

###############################################################################
# The authentication matrix: rows are keys, columns are sources.

A = authentication_matrix(cfg)
print("      " + "  ".join(str(s) for s in matrix_sources(cfg)))
for (k1, k2), row in zip(key_order(cfg), A):
    print(f"{k1}+{k2}  " + "   ".join(str(t) for t in row))

rep = p_deception_from_definitions(cfg)
print("P_I =", rep.p_i, " P_S =", rep.p_s)
