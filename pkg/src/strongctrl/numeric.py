"""Numeric counterpart of the pattern conditions.

Instantiates patterns with concrete coefficients and computes transition,
reachability and observability matrices together with their ranks.  These
serve as an independent check of the graph verdicts and reproduce the reference
systems (constant-``A`` matrix exponentials for the continuous ones).
"""

from __future__ import annotations

from collections.abc import Callable, Sequence
from dataclasses import dataclass

import numpy as np

from .pattern import Pattern, check_pair

RANK_TOL = 1e-9


@dataclass(frozen=True)
class Instantiation:
    """Coefficients ``A(t), B(t)`` (and optionally ``C(t)``) for ``t`` in ``[t0, t1)``."""

    t0: int
    A: tuple[np.ndarray, ...]
    B: tuple[np.ndarray, ...]
    C: tuple[np.ndarray, ...] | None = None

    def __post_init__(self):
        if len(self.A) != len(self.B) or (self.C is not None and len(self.C) != len(self.A)):
            raise ValueError("coefficient sequences must cover the same window")
        for M in (*self.A, *self.B, *(self.C or ())):
            if not np.all(np.isfinite(M)):
                raise ValueError("coefficients must be finite")

    @property
    def t1(self) -> int:
        return self.t0 + len(self.A)

    @property
    def n(self) -> int:
        return self.A[0].shape[0]

    @property
    def r(self) -> int:
        return self.B[0].shape[1]

    @property
    def m(self) -> int | None:
        return None if self.C is None else self.C[0].shape[0]

    def _idx(self, t: int) -> int:
        if not self.t0 <= t < self.t1:
            raise IndexError(f"time {t} outside the window [{self.t0}, {self.t1})")
        return t - self.t0

    def A_at(self, t: int) -> np.ndarray:
        return self.A[self._idx(t)]

    def B_at(self, t: int) -> np.ndarray:
        return self.B[self._idx(t)]

    def C_at(self, t: int) -> np.ndarray:
        if self.C is None:
            raise ValueError("instantiation has no output matrices")
        return self.C[self._idx(t)]

    def is_of_pattern(self, a: Pattern, b: Pattern, c: Pattern | None = None) -> bool:
        ok = all(a.contains(M) for M in self.A) and all(b.contains(M) for M in self.B)
        if c is not None:
            ok = ok and self.C is not None and all(c.contains(M) for M in self.C)
        return ok

    @classmethod
    def from_functions(
        cls,
        A: Callable[[int], np.ndarray],
        B: Callable[[int], np.ndarray],
        t0: int,
        t1: int,
        C: Callable[[int], np.ndarray] | None = None,
    ) -> Instantiation:
        ts = range(t0, t1)

        def grab(f):
            return tuple(np.atleast_2d(np.asarray(f(t), dtype=float)) for t in ts)

        return cls(t0, grab(A), grab(B), None if C is None else grab(C))


def _draw(rng: np.random.Generator, mask: np.ndarray) -> np.ndarray:
    mag = rng.uniform(0.5, 2.0, size=mask.shape)
    sign = rng.choice([-1.0, 1.0], size=mask.shape)
    return np.where(mask, mag * sign, 0.0)


def sample_instantiation(
    a: Pattern,
    b: Pattern,
    window: tuple[int, int],
    variation: str = "per-step",
    seed=None,
    c: Pattern | None = None,
) -> Instantiation:
    """Random coefficients of the given pattern.

    Nonzero cells get magnitudes uniform in [0.5, 2] with random sign; zero
    cells are exactly 0.  ``variation="constant"`` reuses one draw for every
    time step.
    """
    check_pair(a, b)
    if c is not None and c.cols != a.rows:
        raise ValueError(f"output pattern has {c.cols} columns, expected {a.rows}")
    t0, t1 = window
    if t1 - t0 < 1:
        raise ValueError("window must contain at least one step")
    if variation not in ("constant", "per-step"):
        raise ValueError(f"unknown variation {variation!r}")
    rng = np.random.default_rng(seed)
    steps = t1 - t0
    draws = 1 if variation == "constant" else steps
    As, Bs, Cs = [], [], []
    for _ in range(draws):
        As.append(_draw(rng, a.mask))
        Bs.append(_draw(rng, b.mask))
        if c is not None:
            Cs.append(_draw(rng, c.mask))
    if variation == "constant":
        As, Bs, Cs = As * steps, Bs * steps, Cs * steps
    return Instantiation(t0, tuple(As), tuple(Bs), tuple(Cs) if c is not None else None)


def transition_matrix_dt(inst: Instantiation, t: int, t0: int) -> np.ndarray:
    """``A(t-1) @ ... @ A(t0)``; the identity when ``t == t0``."""
    if t < t0:
        raise ValueError(f"need t0 <= t, got t0={t0}, t={t}")
    if not inst.t0 <= t0 <= inst.t1 or t > inst.t1:
        raise IndexError(f"[{t0}, {t}] not inside the window [{inst.t0}, {inst.t1}]")
    Phi = np.eye(inst.n)
    for s in range(t0, t):
        Phi = inst.A_at(s) @ Phi
    return Phi


def reachability_matrix_dt(inst: Instantiation, t0: int, t1: int) -> np.ndarray:
    """Columns ``Phi(t1, s+1) @ B(s)`` for ``s = t0, ..., t1-1``."""
    if t1 <= t0:
        raise ValueError("empty interval")
    blocks = []
    Phi = np.eye(inst.n)  # Phi(t1, s+1), built backwards from s = t1-1
    for s in range(t1 - 1, t0 - 1, -1):
        blocks.append(Phi @ inst.B_at(s))
        Phi = Phi @ inst.A_at(s)
    return np.hstack(blocks[::-1])


def observability_matrix_dt(inst: Instantiation, t0: int, t1: int) -> np.ndarray:
    """Rows ``C(s) @ Phi(s, t0)`` for ``s = t0, ..., t1-1``."""
    if t1 <= t0:
        raise ValueError("empty interval")
    blocks = []
    Phi = np.eye(inst.n)
    for s in range(t0, t1):
        blocks.append(inst.C_at(s) @ Phi)
        Phi = inst.A_at(s) @ Phi
    return np.vstack(blocks)


def numeric_K(inst: Instantiation, t0: int, t1: int) -> np.ndarray:
    """Numeric matrix of the horizon-expanded block pattern on ``[t0, t1)``.

    Block row ``i`` uses ``A(t0+i-1)`` and ``B(t0+i-1)``.  It has full row
    rank exactly when the reachability matrix on the same window does.
    """
    n, r = inst.n, inst.r
    T = t1 - t0
    if T < 1:
        raise ValueError("empty interval")
    K = np.zeros((n * T, (n + r) * T))
    for i in range(T):
        rs = slice(i * n, (i + 1) * n)
        if i >= 1:
            K[rs, i * n:(i + 1) * n] = inst.A_at(t0 + i)
        if i <= T - 2:
            K[rs, (i + 1) * n:(i + 2) * n] = np.eye(n)
        c0 = n * T + i * r
        K[rs, c0:c0 + r] = inst.B_at(t0 + i)
    return K


def time_reversed_adjoint(inst: Instantiation) -> Instantiation:
    """Adjoint system whose controllability matches observability of ``inst``.

    For ``inst`` on ``[t0, t1)`` the result lives on ``[t0+1, t1+1)`` with
    ``A~(u) = A(t0+t1-u)^T`` and ``B~(u) = C(t0+t1-u)^T``, so that
    ``rank observability(inst, t0, t1) == rank reachability(adj, t0+1, t1+1)``.
    """
    if inst.C is None:
        raise ValueError("instantiation has no output matrices")
    t0, t1 = inst.t0, inst.t1
    us = range(t0 + 1, t1 + 1)
    A = tuple(inst.A_at(t0 + t1 - u).T.copy() for u in us)
    B = tuple(inst.C_at(t0 + t1 - u).T.copy() for u in us)
    return Instantiation(t0 + 1, A, B)


def numeric_rank(m, rel_tol: float = RANK_TOL) -> int:
    """Rank by Gaussian elimination with partial pivoting.

    A pivot counts when its magnitude exceeds ``rel_tol`` times the largest
    entry magnitude of the input.
    """
    if rel_tol <= 0:
        raise ValueError("rel_tol must be positive")
    M = np.array(m, dtype=float, copy=True)
    if M.size == 0:
        return 0
    thresh = rel_tol * np.abs(M).max()
    if thresh == 0:
        return 0
    rows, cols = M.shape
    rank = 0
    for j in range(cols):
        if rank == rows:
            break
        p = rank + int(np.argmax(np.abs(M[rank:, j])))
        if abs(M[p, j]) <= thresh:
            continue
        if p != rank:
            M[[rank, p]] = M[[p, rank]]
        below = M[rank + 1:, j] / M[rank, j]
        M[rank + 1:, j:] -= np.outer(below, M[rank, j:])
        rank += 1
    return rank


def matrix_exponential(a, scale: float = 1.0) -> np.ndarray:
    """``exp(a * scale)`` by scaling and squaring of a truncated Taylor series."""
    X = np.asarray(a, dtype=float) * scale
    if X.ndim != 2 or X.shape[0] != X.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {X.shape}")
    n = X.shape[0]
    norm = np.abs(X).sum(axis=1).max() if n else 0.0
    squarings = max(0, int(np.ceil(np.log2(norm / 0.5)))) if norm > 0.5 else 0
    Y = X / 2.0**squarings
    E = np.eye(n)
    term = np.eye(n)
    for k in range(1, 30):
        term = term @ Y / k
        E = E + term
        if np.abs(term).max() <= 1e-18 * np.abs(E).max():
            break
    for _ in range(squarings):
        E = E @ E
    return E


# Constant-A continuous-time systems with explicit input functions.
CT_FAMILIES: dict[str, tuple[np.ndarray, Callable[[float], np.ndarray]]] = {
    "diagonal": (
        np.diag([1.0, 0.0]),
        lambda t: np.array([[np.exp(t)], [1.0]]),
    ),
    "nilpotent": (
        np.array([[0.0, 1.0, 0.0], [0.0, 0.0, 1.0], [0.0, 0.0, 0.0]]),
        lambda t: np.array([[t * t + 1.0], [0.0], [-2.0]]),
    ),
}


def annihilator_residual_ct(
    p: Sequence[float], family: str, t0: float, t1: float, samples: int = 101
) -> float:
    """Largest ``|p^T exp(A (t1 - tau)) B(tau)|`` over a uniform grid on ``[t0, t1]``."""
    if family not in CT_FAMILIES:
        raise KeyError(f"unknown family {family!r}; known: {sorted(CT_FAMILIES)}")
    if samples < 2:
        raise ValueError("need at least two samples")
    A, B = CT_FAMILIES[family]
    p = np.asarray(p, dtype=float).reshape(1, -1)
    worst = 0.0
    for tau in np.linspace(t0, t1, samples):
        val = p @ matrix_exponential(A, t1 - tau) @ B(tau)
        worst = max(worst, float(np.abs(val).max()))
    return worst


def exp_scaled_coefficients(lambda_diag, a0, b0, t: float) -> tuple[np.ndarray, np.ndarray]:
    """``A(t) = e^{-Lt} A0 e^{Lt} - L`` and ``B(t) = e^{-Lt} B0`` for diagonal ``L``."""
    L = np.asarray(lambda_diag, dtype=float)
    if L.ndim != 2 or L.shape[0] != L.shape[1] or np.any(L - np.diag(np.diag(L))):
        raise ValueError("scaling matrix must be diagonal")
    lam = np.diag(L)
    fwd = np.exp(lam * t)
    back = np.exp(-lam * t)
    A0 = np.asarray(a0, dtype=float)
    B0 = np.asarray(b0, dtype=float)
    A = back[:, None] * A0 * fwd[None, :] - L
    B = back[:, None] * B0
    return A, B


def rank_oracle(
    a: Pattern,
    b: Pattern,
    horizon: int,
    variation: str,
    count: int = 100,
    seed: int = 0,
) -> list[int]:
    """Reachability ranks of ``count`` random instantiations over ``horizon`` steps.

    Each instantiation gets its own child seed, so results do not depend on
    evaluation order.
    """
    children = np.random.SeedSequence(seed).spawn(count)
    ranks = []
    for child in children:
        inst = sample_instantiation(a, b, (0, horizon), variation, child)
        ranks.append(numeric_rank(reachability_matrix_dt(inst, 0, horizon)))
    return ranks
