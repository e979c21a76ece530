"""Graph conditions guaranteeing controllability of every system of a pattern.

G1 and G2 together characterize time-invariant pairs, G3 discrete-time
time-varying systems on a fixed window, and G4 continuous-time
time-varying systems.  Each is decided by the set-reduction routine
:func:`reduce`, and can be cross-checked by the exhaustive
:func:`brute_check`.
"""

from __future__ import annotations

import random
from collections.abc import Callable, Iterable
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .pattern import Pattern, build_K, check_pair, with_identity
from .sgraph import SystemGraph, graph_of, pre_set

Condition = Literal["G1", "G2", "G3", "G4"]
CONDITIONS: tuple[str, ...] = ("G1", "G2", "G3", "G4")

Pick = Callable[[frozenset], int]

BRUTE_FORCE_LIMIT = 20
K_ROW_LIMIT = 4096


class SizeLimitError(ValueError):
    """Raised when an instance is too large for the requested check."""


def smallest_index(candidates: frozenset) -> int:
    return min(candidates)


def seeded_pick(seed: int) -> Pick:
    """A reproducible random choice function with its own generator."""
    rng = random.Random(seed)

    def pick(candidates: frozenset) -> int:
        return rng.choice(sorted(candidates))

    return pick


@dataclass(frozen=True)
class Step:
    """One loop iteration of :func:`reduce`.

    ``candidates`` is the set T after the optional ``T \\ V`` filtering;
    ``branch`` is ``"post"`` when ``Post({picked})`` was removed and
    ``"drop"`` when a vertex without predecessor in V was removed.
    """

    V: frozenset
    candidates: frozenset
    branch: str
    picked: int
    removed: frozenset


@dataclass(frozen=True)
class Verdict:
    condition: str
    holds: bool
    witness: frozenset | None = None
    trace: tuple[Step, ...] | None = None
    horizon: int | None = None

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("a verdict carries a witness exactly when it fails")
        if self.witness is not None and not self.witness:
            raise ValueError("witness must be nonempty")

    def to_dict(self, verbose: bool = False) -> dict:
        d: dict = {"condition": self.condition, "holds": self.holds}
        if self.horizon is not None:
            d["horizon"] = self.horizon
        if self.witness is not None:
            d["witness"] = sorted(self.witness)
        if verbose and self.trace is not None:
            d["trace"] = [
                {
                    "V": sorted(s.V),
                    "T": sorted(s.candidates),
                    "branch": s.branch,
                    "picked": s.picked,
                    "removed": sorted(s.removed),
                }
                for s in self.trace
            ]
        return d


def reduce(
    g: SystemGraph,
    mode: int,
    pick: Pick = smallest_index,
    trace: list[Step] | None = None,
) -> frozenset:
    """Run the set-reduction loop and return the residual vertex set.

    ``mode=0`` decides G1 and ``mode=1`` decides G2; the condition holds iff
    the result is empty, otherwise the result is a set violating it.  Steps
    are appended to ``trace`` when a list is supplied.
    """
    if mode not in (0, 1):
        raise ValueError(f"mode must be 0 or 1, got {mode}")
    V = g.states
    while V:
        pre = pre_set(g, V)
        T = frozenset(v for v in pre if len(V & g.succ[v - 1]) == 1)
        if mode == 1:
            T = T - V
        if mode == 0 or V <= pre:
            if not T:
                break
            v = pick(T)
            removed = V & g.succ[v - 1]
            branch = "post"
        else:
            v = pick(V - pre)
            removed = frozenset({v})
            branch = "drop"
        if trace is not None:
            trace.append(Step(V, T, branch, v, removed))
        V = V - removed
    return V


def _verdict(condition, residual, steps, horizon=None, certify=None) -> Verdict:
    if not residual:
        return Verdict(condition, True, None, steps, horizon)
    if certify is not None and not certify(residual):
        raise AssertionError(f"{condition}: residual set {sorted(residual)} is not a counterexample")
    return Verdict(condition, False, frozenset(residual), steps, horizon)


def _run(condition, g, mode, pick, record, horizon, certify):
    steps: list[Step] | None = [] if record else None
    residual = reduce(g, mode, pick, steps)
    return _verdict(condition, residual, tuple(steps) if record else None, horizon, certify)


def check_G1(a: Pattern, b: Pattern, pick: Pick = smallest_index, record: bool = False) -> Verdict:
    g = graph_of(a, b)
    return _run("G1", g, 0, pick, record, None, lambda V: _violates_g1(g, V))


def check_G2(a: Pattern, b: Pattern, pick: Pick = smallest_index, record: bool = False) -> Verdict:
    g = graph_of(a, b)
    return _run("G2", g, 1, pick, record, None, lambda V: _violates_g2(g, V))


def check_G4(a: Pattern, b: Pattern, pick: Pick = smallest_index, record: bool = False) -> Verdict:
    """G4 is G2 on the loop-augmented pattern; the witness carries over."""
    g = graph_of(a, b)
    g_loops = graph_of(with_identity(a), b)
    return _run("G4", g_loops, 1, pick, record, None, lambda V: _violates_g4(g, V))


def k_graph(a: Pattern, b: Pattern, horizon: int) -> SystemGraph:
    """Graph of the horizon-expanded pattern.

    The first ``n*T`` columns are state vertices and the ``r*T`` input
    columns follow, giving the ``(n + r) * T`` vertex numbering.
    """
    n, _ = check_pair(a, b)
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    if n * horizon > K_ROW_LIMIT:
        raise SizeLimitError(f"n*T = {n * horizon} exceeds the limit of {K_ROW_LIMIT} rows")
    K = build_K(a, b, horizon).mask
    nT = n * horizon
    return graph_of(Pattern(K[:, :nT]), Pattern(K[:, nT:]))


def check_G3(
    a: Pattern, b: Pattern, horizon: int, pick: Pick = smallest_index, record: bool = False
) -> Verdict:
    g = k_graph(a, b, horizon)
    return _run("G3", g, 0, pick, record, horizon, lambda V: _violates_g1(g, V))


def check(condition: str, a: Pattern, b: Pattern, horizon: int | None = None, **kw) -> Verdict:
    if condition == "G1":
        return check_G1(a, b, **kw)
    if condition == "G2":
        return check_G2(a, b, **kw)
    if condition == "G4":
        return check_G4(a, b, **kw)
    if condition == "G3":
        if horizon is None:
            raise ValueError("G3 needs a horizon")
        return check_G3(a, b, horizon, **kw)
    raise ValueError(f"unknown condition {condition!r}")


def _singled_out(g: SystemGraph, V: frozenset, allowed: Iterable[int]) -> bool:
    return any(len(V & g.succ[v - 1]) == 1 for v in allowed)


def _violates_g1(g, V):
    return not _singled_out(g, V, g.vertices)


def _violates_g2(g, V):
    if not V <= pre_set(g, V):
        return False
    return not _singled_out(g, V, (v for v in g.vertices if v not in V))


def _violates_g4(g, V):
    return not _singled_out(g, V, (v for v in g.vertices if v not in V))


def violates(condition: str, a: Pattern, b: Pattern, V: Iterable[int], horizon: int | None = None) -> bool:
    """True iff ``V`` is a counterexample to ``condition`` for the pair."""
    if condition == "G3":
        if horizon is None:
            raise ValueError("G3 needs a horizon")
        g = k_graph(a, b, horizon)
    else:
        g = graph_of(a, b)
    V = frozenset(V)
    if not V:
        raise ValueError("a counterexample set must be nonempty")
    bad = sorted(v for v in V if not 1 <= v <= g.n)
    if bad:
        raise IndexError(f"vertices {bad} outside the state range 1..{g.n}")
    if condition in ("G1", "G3"):
        return _violates_g1(g, V)
    if condition == "G2":
        return _violates_g2(g, V)
    if condition == "G4":
        return _violates_g4(g, V)
    raise ValueError(f"unknown condition {condition!r}")


def brute_check(condition: str, a: Pattern, b: Pattern, horizon: int | None = None) -> Verdict:
    """Decide a condition by enumerating every nonempty state subset.

    Returns the smallest violating set (by size, then lexicographically) as
    witness.  Subsets are encoded as bitmasks and tested in one vectorized
    sweep per vertex.
    """
    if condition == "G3":
        if horizon is None:
            raise ValueError("G3 needs a horizon")
        n, _ = check_pair(a, b)
        if n * horizon > BRUTE_FORCE_LIMIT:
            raise SizeLimitError(
                f"brute force limited to {BRUTE_FORCE_LIMIT} state vertices, got {n * horizon}"
            )
        g = k_graph(a, b, horizon)
    elif condition in ("G1", "G2", "G4"):
        g = graph_of(a, b)
    else:
        raise ValueError(f"unknown condition {condition!r}")
    if g.n > BRUTE_FORCE_LIMIT:
        raise SizeLimitError(f"brute force limited to {BRUTE_FORCE_LIMIT} state vertices, got {g.n}")

    n = g.n
    subsets = np.arange(1, 1 << n, dtype=np.int64)
    succ_bits = [sum(1 << (w - 1) for w in g.succ[v - 1]) for v in g.vertices]

    singled = np.zeros(subsets.shape, dtype=bool)
    closed = np.ones(subsets.shape, dtype=bool)  # V <= Pre(V)
    for v, bits in enumerate(succ_bits, start=1):
        hit = subsets & bits
        one = (hit != 0) & ((hit & (hit - 1)) == 0)
        if condition in ("G2", "G4") and v <= n:
            outside = ((subsets >> (v - 1)) & 1) == 0
            one &= outside
        singled |= one
        if condition == "G2" and v <= n:
            in_v = ((subsets >> (v - 1)) & 1) == 1
            closed &= ~in_v | (hit != 0)

    bad = ~singled
    if condition == "G2":
        bad &= closed
    hits = subsets[bad]
    if hits.size == 0:
        return Verdict(condition, True, None, None, horizon)
    witness = min((_members(int(m)) for m in hits), key=lambda s: (len(s), s))
    return Verdict(condition, False, frozenset(witness), None, horizon)


def _members(bits: int) -> tuple[int, ...]:
    out = []
    i = 1
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return tuple(out)
