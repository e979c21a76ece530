"""Observability through the transposed pattern pair.

At the pattern level, (A, C) is strongly observable iff (A^T, C^T) is
strongly controllable.  For a single time-varying system this duality needs
time reversal: the plain transposed system can be controllable while the
original is not observable.

Run:  python3 demos/04_observability_duality.py
"""
from strongctrl import Query, analyze_observability, dualize, parse_pattern, transpose
from strongctrl.catalog import chain_pair, duality_gap_instantiation, duality_gap_patterns, duality_gap_transposed
from strongctrl.numeric import numeric_rank, observability_matrix_dt, reachability_matrix_dt, time_reversed_adjoint

# Pattern level: the chain, transposed, is an observability problem.
A, B = chain_pair()
At, C = transpose(A), transpose(B)
rep = analyze_observability(At, C, Query("discrete", "time-invariant", "observability"))
print("transposed chain, constant coefficients:", rep.answer)
for note in rep.notes:
    print("  note:", note)

# An output that sees nothing is never observable.
zero = parse_pattern("o o o o o o")
print("zero output:", analyze_observability(At, zero, Query("continuous", "time-varying", "observability")).answer)

# A concrete system on the window [0, 4).
inst = duality_gap_instantiation(0, 4)
print("\nobservability matrix rank on [0, 4):", numeric_rank(observability_matrix_dt(inst, 0, 4)), "of 2")
for t0 in (0, 1, 2):
    tr = duality_gap_transposed(t0, t0 + 2)
    print(f"plain transposed system on [{t0}, {t0 + 2}): reachability rank", numeric_rank(reachability_matrix_dt(tr, t0, t0 + 2)))

# The time-reversed adjoint restores the duality exactly.
adj = time_reversed_adjoint(inst)
print("time-reversed adjoint reachability rank:", numeric_rank(reachability_matrix_dt(adj, adj.t0, adj.t1)))

# And at the pattern level the full 2x2 / 1x2 pattern is correctly rejected.
a, c = duality_gap_patterns()
print("pattern answer, 2 steps:", analyze_observability(a, c, Query("discrete", "time-varying", "observability", 2)).answer)
print("dualized pair shapes:", [p.shape for p in dualize(a, c)])
