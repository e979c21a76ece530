"""Digraph of a pattern pair and its predecessor/successor queries.

Vertices are numbered from 1.  Vertices ``1..n`` are states, ``n+1..n+r``
are inputs.  There is an edge ``v -> w`` when column ``v`` of the stacked
pattern ``(A, B)`` is nonzero in row ``w``; hence edges always end in a
state vertex.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .pattern import Pattern, check_pair, hstack

VertexSet = frozenset


@dataclass(frozen=True)
class SystemGraph:
    n: int
    r: int
    succ: tuple[frozenset[int], ...]  # succ[v - 1] = Post({v})

    def __post_init__(self):
        if len(self.succ) != self.n + self.r:
            raise ValueError("successor table does not cover every vertex")
        for targets in self.succ:
            if any(not 1 <= w <= self.n for w in targets):
                raise ValueError("edge target outside the state vertices")

    @property
    def vertices(self) -> range:
        return range(1, self.n + self.r + 1)

    @property
    def states(self) -> frozenset[int]:
        return frozenset(range(1, self.n + 1))

    def post(self, v: int) -> frozenset[int]:
        self._check(v)
        return self.succ[v - 1]

    def edges(self) -> list[tuple[int, int]]:
        return [(v, w) for v in self.vertices for w in sorted(self.succ[v - 1])]

    def edge_list_text(self) -> str:
        """One ``v w`` line per edge, sorted by source then target."""
        return "".join(f"{v} {w}\n" for v, w in self.edges())

    def _check(self, v: int) -> None:
        if not 1 <= v <= self.n + self.r:
            raise IndexError(f"vertex {v} outside 1..{self.n + self.r}")


def graph_of(a: Pattern, b: Pattern) -> SystemGraph:
    n, r = check_pair(a, b)
    ab = hstack(a, b).mask
    succ = tuple(
        frozenset(int(w) + 1 for w in ab[:, v].nonzero()[0]) for v in range(n + r)
    )
    return SystemGraph(n, r, succ)


def post_set(g: SystemGraph, vs: Iterable[int]) -> frozenset[int]:
    out: set[int] = set()
    for v in vs:
        out |= g.post(v)
    return frozenset(out)


def pre_set(g: SystemGraph, vs: Iterable[int]) -> frozenset[int]:
    """Vertices with an edge into ``vs``.

    Input vertices in ``vs`` are accepted but contribute nothing, since no
    edge ends in an input vertex.
    """
    targets = set()
    for v in vs:
        g._check(v)
        targets.add(v)
    return frozenset(u for u in g.vertices if g.succ[u - 1] & targets)
