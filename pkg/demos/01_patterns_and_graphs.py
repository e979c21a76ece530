"""Zero/nonzero patterns, the system digraph, and the set-reduction algorithm.

Run:  python3 demos/01_patterns_and_graphs.py
"""
from pathlib import Path

import numpy as np

from strongctrl import Pattern, check_G1, check_G2, graph_of, load_pattern, reduce, render_pattern
from strongctrl.sgraph import post_set, pre_set

DATA = Path(__file__).parent / "data"

# A pattern is a boolean mask: '*' for a free nonzero entry, 'o' for a fixed zero.
A = load_pattern(DATA / "chain_A.txt")
B = load_pattern(DATA / "chain_B.txt")
print("A =")
print(render_pattern(A))
print("B =")
print(render_pattern(B))

# Every real matrix has exactly one pattern.
M = np.array([[0.0, 3.1], [-2.0, 0.0]])
print("pattern of", M.tolist(), "->", render_pattern(Pattern.of_matrix(M)).strip().replace("\n", " | "))

# States are vertices 1..n, inputs n+1..n+r; v -> w whenever entry (w, v) of [A B] is nonzero.
g = graph_of(A, B)
print(f"\n{g.n} states, {g.r} inputs, edges:")
print(g.edge_list_text())
print("Post({7}) =", sorted(post_set(g, {7})), "  Pre({3}) =", sorted(pre_set(g, {3})))

# The reduction repeatedly removes vertices from V = {1..n}; an empty residual
# means the condition holds.  Mode 0 only uses "post" steps, mode 1 may also
# drop states that have no predecessor inside V.
for mode in (0, 1):
    trace = []
    residual = reduce(g, mode, trace=trace)
    print(f"\nmode {mode}: residual {sorted(residual) or 'empty'}")
    for k, s in enumerate(trace, 1):
        print(f"  step {k}: T={sorted(s.candidates)} {s.branch} v={s.picked} removes {sorted(s.removed)}")

# Wrapped as verdicts: the two graph conditions for time-invariant systems.
print("\nG1:", check_G1(A, B).holds, " G2:", check_G2(A, B).holds)

# A failing condition always comes with a certified witness set of states.
v = check_G2(A, Pattern.zeros(6, 2))
print("with B = 0, G2 fails with witness", sorted(v.witness))
