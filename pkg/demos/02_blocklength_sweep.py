"""
Substitution probability versus blocklength
===========================================

Fix M=4, l=3, r=1 and let m run from 4 to 10. The closed form and the
brute-force count over all coordinate subsets are compared where the brute
force is still cheap.
"""

import time

from rmacode import AuthConfig, p_substitution_bruteforce, p_substitution_closed_form
from rmacode.deception import dec4
from rmacode.report import reference_note

for m in range(4, 11):
    cfg = AuthConfig.create(m, 1, 4, 3)
    closed = p_substitution_closed_form(cfg)
    line = f"m={m:2d}  n={cfg.n:5d}  P_I={dec4(closed.p_i)}  P_S={dec4(closed.p_s)} ({closed.p_s})"
    if m <= 8:
        t0 = time.perf_counter()
        brute = p_substitution_bruteforce(cfg)
        line += f"  brute={brute.p_s} [{time.perf_counter() - t0:.2f}s]"
        assert brute.p_s == closed.p_s
    print(line)
    note = reference_note(closed)
    if note:
        print("   note:", note)

###############################################################################
# As n grows with l fixed, the best tag weight is 1 or 2 out of 3 and P_S
# approaches 3/8 from above.

print("limit 3/8 =", 3 / 8)
