"""Cross-checking the fast reduction against exhaustive search and random systems.

Run:  python3 demos/05_oracles.py
"""
import time

import numpy as np

from strongctrl import brute_check, check, seeded_pick
from strongctrl.numeric import rank_oracle
from strongctrl.selftest import random_pairs

pairs = random_pairs(seed=11, count=300, n_max=8, r_max=3)

# 1. exhaustive search over all nonempty state subsets
start = time.perf_counter()
disagree = 0
for a, b in pairs:
    for cond in ("G1", "G2", "G4"):
        disagree += check(cond, a, b).holds != brute_check(cond, a, b).holds
print(f"reduction vs exhaustive search: {disagree} disagreements over {3 * len(pairs)} checks "
      f"({time.perf_counter() - start:.2f} s)")

# 2. the choice of vertex at each step does not change the outcome
flips = sum(
    check("G2", a, b, pick=seeded_pick(s)).holds != check("G2", a, b).holds
    for a, b in pairs[:100]
    for s in range(5)
)
print("pick-dependent outcomes:", flips)

# 3. patterns passing the test: every sampled system has full rank
passing = [(a, b) for a, b in pairs if check("G1", a, b).holds and check("G2", a, b).holds]
ranks = [min(rank_oracle(a, b, a.rows, "constant", count=50, seed=k)) == a.rows for k, (a, b) in enumerate(passing)]
print(f"{sum(ranks)}/{len(passing)} passing patterns had full rank in all 50 samples")

# 4. failing patterns: full rank is not guaranteed, and usually some sample shows it
failing = [(a, b) for a, b in pairs if not check("G3", a, b, horizon=2).holds and a.rows <= 4]
deficient = [min(rank_oracle(a, b, 2, "per-step", count=200, seed=1)) < a.rows for a, b in failing]
print(f"{np.sum(deficient)}/{len(failing)} failing patterns (2 steps) showed a rank-deficient sample")
