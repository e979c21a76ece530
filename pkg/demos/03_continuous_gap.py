"""Continuous time: constant-coefficient controllability does not carry over.

Both patterns below pass the time-invariant test, yet a time-varying input
matrix makes the system uncontrollable on every interval.  We exhibit a
fixed row vector p with p^T exp(A (t1 - tau)) B(tau) = 0 for all tau.

Run:  python3 demos/03_continuous_gap.py
"""
import numpy as np

from strongctrl import Query, analyze_controllability, check_G4, with_identity, render_pattern
from strongctrl.catalog import diagonal_annihilator, diagonal_pair, nilpotent_annihilator, nilpotent_pair
from strongctrl.numeric import annihilator_residual_ct, exp_scaled_coefficients

lti = Query("continuous", "time-invariant", "controllability")
ltv = Query("continuous", "time-varying", "controllability")

for name, (A, B), annihilator in (
    ("nilpotent", nilpotent_pair(), nilpotent_annihilator),
    ("diagonal", diagonal_pair(), diagonal_annihilator),
):
    print(f"--- {name} pattern")
    print("constant coefficients:", analyze_controllability(A, B, lti).answer)
    print("time-varying:         ", analyze_controllability(A, B, ltv).answer)
    # the time-varying test is the constant test with every self-loop added
    print("A with self-loops:\n" + render_pattern(with_identity(A)))
    print("G4 witness:", sorted(check_G4(A, B).witness))
    for t1 in (0.5, 1.0, 3.0):
        res = annihilator_residual_ct(annihilator(t1), name, 0.0, t1, samples=201)
        print(f"  t1={t1}: max |p^T e^(A(t1-tau)) B(tau)| = {res:.1e}")

# Where the exponential input comes from: rescaling states by e^{Lt} turns a
# constant system into a time-varying one with the same pattern (plus diagonal).
L = np.diag([-1.0, 0.0])
for t in (0.0, 1.0):
    At, Bt = exp_scaled_coefficients(L, np.zeros((2, 2)), np.ones((2, 1)), t)
    print(f"t={t}: A(t)={At.tolist()}  B(t)={Bt.ravel().round(4).tolist()}")
