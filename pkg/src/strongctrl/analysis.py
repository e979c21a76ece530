"""Map a controllability/observability question to the matching conditions."""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace

from .conditions import Verdict, check_G1, check_G2, check_G3, check_G4
from .pattern import Pattern, check_pair, transpose

GUARANTEED = "guaranteed"
NOT_GUARANTEED = "not-guaranteed"
UNDECIDED = "undecided"

EXIT_CODES = {GUARANTEED: 0, NOT_GUARANTEED: 2, UNDECIDED: 3}

DUALITY_NOTE = (
    "pattern-level duality: the verdict quantifies over every system of the pattern; "
    "a single system and its transposed counterpart need not share the property"
)


@dataclass(frozen=True)
class Query:
    time_domain: str = "discrete"  # discrete | continuous
    variation: str = "time-invariant"  # time-invariant | time-varying
    direction: str = "controllability"  # controllability | observability
    horizon: int | None = None

    def __post_init__(self):
        if self.time_domain not in ("discrete", "continuous"):
            raise ValueError(f"unknown time domain {self.time_domain!r}")
        if self.variation not in ("time-invariant", "time-varying"):
            raise ValueError(f"unknown variation {self.variation!r}")
        if self.direction not in ("controllability", "observability"):
            raise ValueError(f"unknown direction {self.direction!r}")
        if self.horizon is not None:
            if self.time_domain != "discrete":
                raise ValueError("a horizon only applies to discrete time")
            if self.horizon < 1:
                raise ValueError("horizon must be a positive step count")
        elif self.time_domain == "discrete" and self.variation == "time-varying":
            raise ValueError("discrete time-varying questions need a horizon")

    def to_dict(self) -> dict:
        return {
            "time_domain": self.time_domain,
            "variation": self.variation,
            "direction": self.direction,
            "horizon": self.horizon,
        }


@dataclass(frozen=True)
class Report:
    query: Query
    answer: str
    verdicts: tuple[Verdict, ...]
    notes: tuple[str, ...] = field(default=())

    def to_dict(self, verbose: bool = False) -> dict:
        return {
            "query": self.query.to_dict(),
            "answer": self.answer,
            "verdicts": [v.to_dict(verbose) for v in self.verdicts],
            "notes": list(self.notes),
        }

    def to_json(self, verbose: bool = False) -> str:
        return json.dumps(self.to_dict(verbose), indent=2)

    @property
    def exit_code(self) -> int:
        return EXIT_CODES[self.answer]


def dualize(a: Pattern, c: Pattern) -> tuple[Pattern, Pattern]:
    """``(A^T, C^T)``: an observability pair turned into a controllability pair."""
    if a.rows != a.cols:
        raise ValueError(f"state pattern must be square, got {a.shape}")
    if c.cols != a.rows:
        raise ValueError(f"output pattern has {c.cols} columns, state dimension is {a.rows}")
    return transpose(a), transpose(c)


def _answer(ok: bool) -> str:
    return GUARANTEED if ok else NOT_GUARANTEED


def analyze_controllability(a: Pattern, b: Pattern, q: Query, record: bool = False) -> Report:
    if q.direction != "controllability":
        raise ValueError("use analyze_observability for observability questions")
    n, _ = check_pair(a, b)
    notes: list[str] = []

    if q.variation == "time-varying" and q.time_domain == "continuous":
        g4 = check_G4(a, b, record=record)
        notes.append(
            "continuous time-varying: decided by G4 (G2 on the pattern with all diagonal "
            "entries added); the answer is the same for every interval t0 < t1"
        )
        return Report(q, _answer(g4.holds), (g4,), tuple(notes))

    if q.variation == "time-varying":
        T = q.horizon
        g3 = check_G3(a, b, T, record=record)
        verdicts = [g3]
        notes.append(f"discrete time-varying on a window of {T} steps: decided by G3")
        if T >= n:
            g1, g2 = check_G1(a, b, record=record), check_G2(a, b, record=record)
            verdicts += [g1, g2]
            notes.append(
                f"horizon {T} >= n = {n}: G3 coincides with G1 and G2 "
                "(time-varying and time-invariant answers agree)"
            )
            if g3.holds != (g1.holds and g2.holds):
                raise AssertionError("G3 disagrees with G1 and G2 on a long horizon")
        return Report(q, _answer(g3.holds), tuple(verdicts), tuple(notes))

    g1, g2 = check_G1(a, b, record=record), check_G2(a, b, record=record)
    lti_ok = g1.holds and g2.holds
    notes.append("time-invariant: every pair of the pattern is controllable iff G1 and G2 hold")
    if q.horizon is None or q.horizon >= n:
        if q.horizon is not None:
            notes.append(f"horizon {q.horizon} >= n = {n}: the window length does not matter")
        return Report(q, _answer(lti_ok), (g1, g2), tuple(notes))

    # Discrete time-invariant on a window shorter than n.
    T = q.horizon
    if not lti_ok:
        notes.append("some time-invariant pair of the pattern is not controllable at all")
        return Report(q, NOT_GUARANTEED, (g1, g2), tuple(notes))
    g3 = check_G3(a, b, T, record=record)
    if g3.holds:
        notes.append(f"G3 holds for {T} steps, covering time-invariant systems as a special case")
        return Report(q, GUARANTEED, (g1, g2, g3), tuple(notes))
    notes.append(
        f"horizon {T} < n = {n} with G1 and G2 holding but G3 failing: no graph "
        "characterization is known for time-invariant systems on such short windows"
    )
    return Report(q, UNDECIDED, (g1, g2, g3), tuple(notes))


def analyze_observability(a: Pattern, c: Pattern, q: Query, record: bool = False) -> Report:
    """Decide observability through the transposed pair.

    Witness vertices in the returned verdicts refer to the graph of
    ``(A^T, C^T)``.
    """
    if q.direction != "observability":
        raise ValueError("use analyze_controllability for controllability questions")
    at, ct = dualize(a, c)
    inner = analyze_controllability(at, ct, replace(q, direction="controllability"), record)
    notes = (
        "observability decided as controllability of the transposed pair (A^T, C^T) "
        "with the output count in place of the input count",
        *inner.notes,
        DUALITY_NOTE,
    )
    return Report(q, inner.answer, inner.verdicts, notes)


def analyze(a: Pattern, other: Pattern, q: Query, record: bool = False) -> Report:
    if q.direction == "observability":
        return analyze_observability(a, other, q, record)
    return analyze_controllability(a, other, q, record)
