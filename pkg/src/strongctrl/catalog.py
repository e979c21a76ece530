"""Reference patterns and systems with known answers.

``chain_pair``
    Six states, two inputs.  Every time-invariant pair of the pattern is
    controllable, yet time-varying systems need at least five steps.
``nilpotent_pair``
    Three-state chain with one input.  Time-invariant pairs are all
    controllable, but some continuous time-varying systems are not.
``diagonal_pair``
    Two states, one input; same gap as ``nilpotent_pair`` with an analytic
    (exponential) input coefficient.
``duality_gap_*``
    A discrete system that is not observable although the system with
    transposed coefficients (no time reversal) is controllable.
"""

from __future__ import annotations

import numpy as np

from .numeric import Instantiation
from .pattern import Pattern, parse_pattern

CHAIN_A = """\
o * o o o o
* o o o o o
o o o * o o
o o o o * o
o o o o o *
o o o o o o
"""

CHAIN_B = """\
* *
* o
o o
* o
o o
o *
"""


def chain_pair() -> tuple[Pattern, Pattern]:
    return parse_pattern(CHAIN_A), parse_pattern(CHAIN_B)


def chain_unit_A() -> np.ndarray:
    """Chain state matrix with every nonzero set to 1."""
    return chain_pair()[0].mask.astype(float)


def chain_det_formula(A: np.ndarray, B: np.ndarray) -> float:
    """Closed form (up to sign) of the 6x6 three-step reachability determinant."""
    return (
        A[0, 1] ** 2 * A[1, 0] ** 2 * A[2, 3] * A[4, 5]
        * B[0, 1] * B[1, 0] * B[3, 0] ** 2 * B[5, 1] ** 2
    )


def chain_singular_B(t: int) -> np.ndarray:
    return np.array(
        [
            [-1.0, 3.0 ** (t / 2), 0.0, 1.0, 0.0, 0.0],
            [2.0, 0.0, 0.0, 0.0, 0.0, 1.0],
        ]
    ).T


def chain_singular_instantiation(t0: int, t1: int) -> Instantiation:
    """Unit chain ``A`` with a time-varying ``B`` making every 3-step window singular."""
    A = chain_unit_A()
    return Instantiation.from_functions(lambda t: A, chain_singular_B, t0, t1)


def random_of_pattern(rng: np.random.Generator, p: Pattern) -> np.ndarray:
    mag = rng.uniform(0.5, 2.0, size=p.shape) * rng.choice([-1.0, 1.0], size=p.shape)
    return np.where(p.mask, mag, 0.0)


def nilpotent_pair() -> tuple[Pattern, Pattern]:
    a = parse_pattern("o * o\no o *\no o o")
    b = parse_pattern("*\no\n*")
    return a, b


def nilpotent_annihilator(t1: float) -> np.ndarray:
    """Row vector cancelling ``exp(A (t1 - tau)) B(tau)`` for every ``tau``."""
    return np.array([2.0, -2.0 * t1, t1 * t1 + 1.0])


def diagonal_pair() -> tuple[Pattern, Pattern]:
    return parse_pattern("* o\no o"), parse_pattern("*\n*")


def diagonal_A() -> np.ndarray:
    return np.diag([1.0, 0.0])


def diagonal_B(t: float) -> np.ndarray:
    return np.array([[np.exp(t)], [1.0]])


def diagonal_annihilator(t1: float) -> np.ndarray:
    return np.array([1.0, -np.exp(t1)])


def duality_gap_A(t: int) -> np.ndarray:
    e = np.e
    return np.array([[-2.0, np.exp(1.0 - t)], [-3.0 * np.exp(t), 2.0 * e]])


def duality_gap_C(t: int) -> np.ndarray:
    return np.array([[np.exp(t), -np.e]])


def duality_gap_instantiation(t0: int, t1: int) -> Instantiation:
    """The observed system on ``[t0, t1)`` (single dummy input column of zeros)."""
    return Instantiation.from_functions(
        duality_gap_A, lambda t: np.zeros((2, 1)), t0, t1, C=duality_gap_C
    )


def duality_gap_transposed(t0: int, t1: int) -> Instantiation:
    """``x(t+1) = A(t)^T x(t) + C(t)^T u(t)`` without time reversal."""
    return Instantiation.from_functions(
        lambda t: duality_gap_A(t).T, lambda t: duality_gap_C(t).T, t0, t1
    )


def duality_gap_patterns() -> tuple[Pattern, Pattern]:
    """Output pattern ``(A, C)`` of the duality-gap system: both full."""
    return Pattern.of_matrix(duality_gap_A(0)), Pattern.of_matrix(duality_gap_C(0))
