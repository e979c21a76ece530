"""Discrete time-varying systems: how many steps are enough?

For a pattern that is controllable whenever coefficients are constant, a
time-varying system may still need more steps than the state dimension
suggests -- or fewer.  The horizon-expanded graph answers this per window.

Run:  python3 demos/02_discrete_horizons.py
"""
import numpy as np

from strongctrl import Query, analyze_controllability, check_G3
from strongctrl.catalog import chain_pair, chain_singular_instantiation
from strongctrl.numeric import numeric_rank, rank_oracle, reachability_matrix_dt

A, B = chain_pair()
n = A.rows

print("window  G3 holds  witness size")
for T in range(1, 8):
    v = check_G3(A, B, T)
    print(f"{T:>6}  {str(v.holds):>8}  {'' if v.holds else len(v.witness)}")

# Random systems of the pattern are almost always controllable even at T=3:
# "not guaranteed" means *some* system fails, not a typical one.
for T in (3, 5):
    ranks = rank_oracle(A, B, T, "per-step", count=200, seed=1)
    print(f"T={T}: ranks of 200 random time-varying systems: min {min(ranks)}, max {max(ranks)}")

# A hand-built system makes every three-step window rank deficient.
# (the determinant is zero up to round-off)
inst = chain_singular_instantiation(0, 9)
for t1 in range(3, 10):
    M = reachability_matrix_dt(inst, t1 - 3, t1)
    print(f"window [{t1 - 3}, {t1}): rank {numeric_rank(M)} of {n}, det {np.linalg.det(M):+.1e}")

# The analysis layer turns this into an answer.
for T in (3, 5, 6):
    rep = analyze_controllability(A, B, Query("discrete", "time-varying", "controllability", T))
    print(f"time-varying, {T} steps: {rep.answer}")

# With constant coefficients but a short window no graph criterion is known.
rep = analyze_controllability(A, B, Query("discrete", "time-invariant", "controllability", 3))
print("time-invariant, 3 steps:", rep.answer)
print("  ", rep.notes[-1])
