"""Reproductions of the reference systems plus randomized oracle batches.

Each criterion is a function ``(seed) -> (passed, detail)``.  The CLI
``selftest`` command and the acceptance test module both run
:data:`CRITERIA`.
"""

from __future__ import annotations

import time
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from . import catalog as cat
from .conditions import (
    brute_check,
    check_G1,
    check_G2,
    check_G3,
    check_G4,
    reduce,
    seeded_pick,
    violates,
)
from .numeric import (
    Instantiation,
    annihilator_residual_ct,
    exp_scaled_coefficients,
    numeric_rank,
    observability_matrix_dt,
    rank_oracle,
    reachability_matrix_dt,
)
from .pattern import Pattern, or_add, with_identity
from .sgraph import graph_of

DEFAULT_SEED = 20240611


def random_pair(
    rng: np.random.Generator, n_max: int = 8, r_max: int = 3, n_min: int = 1
) -> tuple[Pattern, Pattern]:
    """A random (A, B) pattern pair with a sparse state part."""
    n = int(rng.integers(n_min, n_max + 1))
    r = int(rng.integers(0, r_max + 1))
    density = rng.uniform(0.1, 0.45)
    a = Pattern(rng.random((n, n)) < density)
    b = Pattern(rng.random((n, r)) < rng.uniform(0.2, 0.6))
    return a, b


def random_pairs(seed: int, count: int, **kw) -> list[tuple[Pattern, Pattern]]:
    rng = np.random.default_rng(seed)
    return [random_pair(rng, **kw) for _ in range(count)]


def _best_time(fn: Callable[[], object], repeat: int = 5) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


@dataclass(frozen=True)
class Outcome:
    passed: bool
    detail: str


def chain_traces(seed: int) -> Outcome:
    a, b = cat.chain_pair()
    g = graph_of(a, b)
    t0: list = []
    r0 = reduce(g, 0, trace=t0)
    t1: list = []
    r1 = reduce(g, 1, trace=t1)
    removal0 = [v for s in t0 for v in sorted(s.removed)]
    removal1 = [(s.branch, sorted(s.removed)) for s in t1]
    ok = (
        t0[0].candidates == frozenset({1, 2, 4, 5, 6})
        and not r0
        and removal0 == [2, 1, 3, 4, 5, 6]
        and t1[0].candidates == frozenset()
        and t1[0].branch == "drop"
        and t1[0].removed == frozenset({3})
        and removal1
        == [("drop", [3]), ("drop", [4]), ("drop", [5]), ("drop", [6]), ("post", [1]), ("drop", [2])]
        and not r1
        and check_G1(a, b).holds
        and check_G2(a, b).holds
    )
    elapsed = max(_best_time(lambda: reduce(g, 0)), _best_time(lambda: reduce(g, 1)))
    ok = ok and elapsed < 1e-3
    return Outcome(ok, f"first T={sorted(t0[0].candidates)}, L=1 trace {removal1}, {elapsed * 1e3:.3f} ms")


def horizon_split(seed: int) -> Outcome:
    a, b = cat.chain_pair()
    known_witness = frozenset(range(1, 19)) - {3, 4, 9}
    ok = (
        check_G3(a, b, 6).holds
        and not check_G3(a, b, 3).holds
        and violates("G3", a, b, known_witness, horizon=3)
    )
    elapsed = _best_time(lambda: (check_G3(a, b, 6), check_G3(a, b, 3)))
    ok = ok and elapsed < 10e-3
    return Outcome(ok, f"G3(T=6) holds, G3(T=3) fails, known witness certified, {elapsed * 1e3:.2f} ms")


def chain_determinants(seed: int) -> Outcome:
    rng = np.random.default_rng(seed)
    worst_rel = 0.0
    for _ in range(20):
        A = cat.chain_unit_A()
        B = cat.random_of_pattern(rng, cat.chain_pair()[1])
        inst = Instantiation.from_functions(lambda t: A, lambda t: B, 0, 3)
        det = abs(np.linalg.det(reachability_matrix_dt(inst, 0, 3)))
        ref = abs(cat.chain_det_formula(A, B))
        worst_rel = max(worst_rel, abs(det - ref) / ref)
    inst = cat.chain_singular_instantiation(0, 7)
    worst_zero = 0.0
    for t in (3, 4, 5, 6):
        M = reachability_matrix_dt(inst, t - 3, t)
        scale = float(np.prod(np.linalg.norm(M, axis=0)))
        worst_zero = max(worst_zero, abs(np.linalg.det(M)) / scale)
    ok = worst_rel <= 1e-6 and worst_zero <= 1e-9
    return Outcome(ok, f"max rel det error {worst_rel:.2e}, max |det|/scale {worst_zero:.2e}")


def nilpotent_gap(seed: int) -> Outcome:
    a, b = cat.nilpotent_pair()
    res = max(
        annihilator_residual_ct(cat.nilpotent_annihilator(t1), "nilpotent", 0.0, t1, 101)
        for t1 in (1.0, 2.0)
    )
    ok = check_G1(a, b).holds and check_G2(a, b).holds and not check_G4(a, b).holds and res <= 1e-9
    return Outcome(ok, f"G1, G2 hold; G4 fails; residual {res:.2e}")


def diagonal_gap(seed: int) -> Outcome:
    a, b = cat.diagonal_pair()
    res = max(
        annihilator_residual_ct(cat.diagonal_annihilator(t1), "diagonal", 0.0, t1, 101) for t1 in (1.0, 2.0)
    )
    exact = True
    for t in (0.0, 0.5, 1.0):
        A, B = exp_scaled_coefficients(np.diag([-1.0, 0.0]), np.zeros((2, 2)), np.ones((2, 1)), t)
        exact &= np.array_equal(A, cat.diagonal_A()) and np.array_equal(B, cat.diagonal_B(t))
    ok = check_G1(a, b).holds and check_G2(a, b).holds and not check_G4(a, b).holds
    ok = ok and res <= 1e-9 and bool(exact)
    return Outcome(ok, f"G4 fails, residual {res:.2e}, scaled coefficients exact: {bool(exact)}")


def duality_gap(seed: int) -> Outcome:
    inst = cat.duality_gap_instantiation(0, 4)
    obs_rank = numeric_rank(observability_matrix_dt(inst, 0, 4))
    dual_ranks = []
    for t0 in (0, 1, 2):
        dual = cat.duality_gap_transposed(t0, t0 + 2)
        dual_ranks.append(numeric_rank(reachability_matrix_dt(dual, t0, t0 + 2)))
    ok = obs_rank == 1 and dual_ranks == [2, 2, 2]
    return Outcome(ok, f"observability rank {obs_rank}, transposed-system ranks {dual_ranks}")


def oracle_equivalence(seed: int) -> Outcome:
    start = time.perf_counter()
    mismatches = 0
    for a, b in random_pairs(seed, 200, n_max=8, r_max=3):
        for cond, fast in (("G1", check_G1), ("G2", check_G2), ("G4", check_G4)):
            f, s = fast(a, b), brute_check(cond, a, b)
            mismatches += f.holds != s.holds
            if not f.holds:
                mismatches += not violates(cond, a, b, f.witness)
    g3_cases = 0
    for a, b in random_pairs(seed + 1, 50, n_max=6, r_max=3):
        for T in (1, 2, 3):
            if a.rows * T > 18:
                continue
            g3_cases += 1
            mismatches += check_G3(a, b, T).holds != brute_check("G3", a, b, T).holds
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and elapsed < 30
    return Outcome(ok, f"{mismatches} mismatches over 600 + {g3_cases} checks, {elapsed:.1f} s")


def positive_numeric_oracle(seed: int) -> Outcome:
    failures = 0
    lti_patterns = tv_patterns = 0
    for k, (a, b) in enumerate(random_pairs(seed + 2, 150, n_max=8, r_max=3)):
        n = a.rows
        if check_G1(a, b).holds and check_G2(a, b).holds:
            lti_patterns += 1
            ranks = rank_oracle(a, b, n, "constant", 100, seed=seed + k)
            failures += sum(rk != n for rk in ranks)
        for T in (1, 2, 3):
            if check_G3(a, b, T).holds:
                tv_patterns += 1
                ranks = rank_oracle(a, b, T, "per-step", 100, seed=seed + 1000 * T + k)
                failures += sum(rk != n for rk in ranks)
    ok = failures == 0 and lti_patterns > 0 and tv_patterns > 0
    return Outcome(
        ok,
        f"{failures} rank deficits; {lti_patterns} time-invariant and {tv_patterns} "
        "time-varying passing patterns x 100 instantiations",
    )


def pick_independence(seed: int) -> Outcome:
    flips = 0
    for k, (a, b) in enumerate(random_pairs(seed + 3, 100, n_max=8, r_max=3)):
        graphs = (graph_of(a, b), graph_of(with_identity(a), b))
        for g in graphs:
            for mode in (0, 1):
                ref = not reduce(g, mode)
                for j in range(10):
                    flips += (not reduce(g, mode, seeded_pick(seed + 10 * k + j))) != ref
    return Outcome(flips == 0, f"{flips} pick-dependent outcomes over 100 patterns x 10 seeds")


def implication_properties(seed: int) -> Outcome:
    rng = np.random.default_rng(seed + 4)
    broken = []
    for a, b in random_pairs(seed + 4, 200, n_max=8, r_max=3):
        n = a.rows
        g4 = check_G4(a, b).holds
        ai = with_identity(a)
        if g4 and not (check_G1(ai, b).holds and check_G2(ai, b).holds):
            broken.append("G4 => G1,G2 on augmented pair")
        if check_G1(a, b).holds and check_G2(a, b).holds and not check_G3(a, b, n).holds:
            broken.append("G1,G2 => G3(T=n)")
        for T in (1, 2, 3):
            if check_G3(a, b, T).holds and not check_G3(a, b, T + 1).holds:
                broken.append(f"G3(T={T}) => G3(T={T + 1})")
        loops = Pattern(np.diag(rng.random(n) < 0.5))
        if check_G4(or_add(a, loops), b).holds != g4:
            broken.append("G4 loop invariance")
    return Outcome(not broken, "all implications hold" if not broken else "; ".join(sorted(set(broken))))


CRITERIA: list[tuple[str, Callable[[int], Outcome]]] = [
    ("1 reduction traces on the two-input chain", chain_traces),
    ("2 G3 horizon split on the two-input chain", horizon_split),
    ("3 three-step reachability determinants", chain_determinants),
    ("4 nilpotent chain: G1, G2 hold, G4 fails", nilpotent_gap),
    ("5 diagonal pair: analytic counterexample", diagonal_gap),
    ("6 observability vs transposed-system gap", duality_gap),
    ("7 brute-force oracle equivalence", oracle_equivalence),
    ("8 positive numeric rank oracle", positive_numeric_oracle),
    ("9 pick independence", pick_independence),
    ("10 implication properties", implication_properties),
]


def run_all(seed: int = DEFAULT_SEED, echo: Callable[[str], None] | None = print) -> bool:
    all_ok = True
    for name, fn in CRITERIA:
        out = fn(seed)
        all_ok &= out.passed
        if echo is not None:
            echo(f"[{'PASS' if out.passed else 'FAIL'}] {name}: {out.detail}")
    return all_ok
