"""Nonzero patterns of matrices.

A pattern records only where a matrix has nonzero entries.  Patterns are
immutable; every operation returns a new object.
"""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np

ZERO_TOKENS = frozenset({"o", "0", "."})
NONZERO_TOKEN = "*"


class PatternParseError(ValueError):
    """Raised for malformed pattern text."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = []
        if source is not None:
            where.append(str(source))
        if line is not None:
            where.append(f"line {line}")
        prefix = ":".join(where)
        super().__init__(f"{prefix}: {message}" if prefix else message)


class PatternShapeError(ValueError):
    """Raised when pattern dimensions are incompatible."""


class Pattern:
    """Boolean nonzero mask of a ``rows x cols`` matrix.

    ``mask[i, j]`` is True where the entry is nonzero.  Indices into the mask
    are 0-based; the text format and graph vertices use 1-based numbering.
    """

    __slots__ = ("_mask",)

    def __init__(self, mask):
        arr = np.array(mask, dtype=bool)
        if arr.ndim != 2:
            raise PatternShapeError(f"pattern mask must be 2-D, got shape {arr.shape}")
        arr.setflags(write=False)
        self._mask = arr

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Pattern:
        return cls(np.zeros((rows, cols), dtype=bool))

    @classmethod
    def identity(cls, n: int) -> Pattern:
        return cls(np.eye(n, dtype=bool))

    @classmethod
    def from_cells(cls, rows: int, cols: int, cells: Iterable[tuple[int, int]]) -> Pattern:
        """Build a pattern from 1-based ``(row, col)`` nonzero positions."""
        mask = np.zeros((rows, cols), dtype=bool)
        for i, j in cells:
            if not (1 <= i <= rows and 1 <= j <= cols):
                raise PatternShapeError(f"cell ({i}, {j}) outside {rows}x{cols}")
            mask[i - 1, j - 1] = True
        return cls(mask)

    @classmethod
    def of_matrix(cls, matrix) -> Pattern:
        """The pattern of a numeric matrix (exact zero test)."""
        return cls(np.asarray(matrix) != 0)

    @property
    def mask(self) -> np.ndarray:
        return self._mask

    @property
    def rows(self) -> int:
        return self._mask.shape[0]

    @property
    def cols(self) -> int:
        return self._mask.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._mask.shape

    def cells(self) -> set[tuple[int, int]]:
        """1-based positions of the nonzero entries."""
        return {(int(i) + 1, int(j) + 1) for i, j in zip(*np.nonzero(self._mask))}

    def nnz(self) -> int:
        return int(self._mask.sum())

    def contains(self, matrix) -> bool:
        """True if ``matrix`` has exactly this zero/nonzero layout."""
        m = np.asarray(matrix)
        return m.shape == self.shape and bool(np.array_equal(m != 0, self._mask))

    def render(self) -> str:
        return render_pattern(self)

    def __eq__(self, other):
        if not isinstance(other, Pattern):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._mask, other._mask))

    def __hash__(self):
        return hash((self.shape, self._mask.tobytes()))

    def __repr__(self):
        return f"Pattern({self.rows}x{self.cols}, cells={sorted(self.cells())})"

    def __str__(self):
        return self.render()


def parse_pattern(text: str, source: str | None = None) -> Pattern:
    """Parse a whitespace-separated grid of ``*`` and ``o``/``0``/``.`` tokens.

    Blank lines and lines starting with ``#`` are skipped.  A pattern with zero
    columns is written as one line holding the single token ``-`` per row.
    """
    grid: list[list[bool]] = []
    width = None
    first_line = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens == ["-"]:
            row: list[bool] = []
        else:
            row = []
            for tok in tokens:
                if tok == NONZERO_TOKEN:
                    row.append(True)
                elif tok in ZERO_TOKENS:
                    row.append(False)
                else:
                    raise PatternParseError(f"unknown token {tok!r}", lineno, source)
        if width is None:
            width, first_line = len(row), lineno
        elif len(row) != width:
            raise PatternParseError(
                f"ragged row: {len(row)} tokens, expected {width} (as on line {first_line})",
                lineno,
                source,
            )
        grid.append(row)
    if not grid:
        raise PatternParseError("empty pattern", None, source)
    return Pattern(np.array(grid, dtype=bool).reshape(len(grid), width))


def render_pattern(p: Pattern) -> str:
    if p.rows == 0:
        raise PatternShapeError("a pattern without rows has no text form")
    if p.cols == 0:
        return "\n".join("-" for _ in range(p.rows)) + "\n"
    lines = [" ".join(NONZERO_TOKEN if x else "o" for x in row) for row in p.mask]
    return "\n".join(lines) + "\n"


def load_pattern(path) -> Pattern:
    with open(path, encoding="utf-8") as fh:
        return parse_pattern(fh.read(), source=str(path))


def transpose(p: Pattern) -> Pattern:
    return Pattern(p.mask.T)


def hstack(p: Pattern, q: Pattern) -> Pattern:
    if p.rows != q.rows:
        raise PatternShapeError(f"row mismatch: {p.rows} vs {q.rows}")
    return Pattern(np.hstack([p.mask, q.mask]))


def or_add(p: Pattern, q: Pattern) -> Pattern:
    """Entrywise union: the pattern of ``|X| + |Y|``."""
    if p.shape != q.shape:
        raise PatternShapeError(f"shape mismatch: {p.shape} vs {q.shape}")
    return Pattern(p.mask | q.mask)


def with_identity(a: Pattern) -> Pattern:
    if a.rows != a.cols:
        raise PatternShapeError(f"expected a square pattern, got {a.shape}")
    return or_add(a, Pattern.identity(a.rows))


def check_pair(a: Pattern, b: Pattern) -> tuple[int, int]:
    """Validate an (n x n, n x r) pair and return ``(n, r)``."""
    if a.rows != a.cols:
        raise PatternShapeError(f"state pattern must be square, got {a.shape}")
    if b.rows != a.rows:
        raise PatternShapeError(f"input pattern has {b.rows} rows, state pattern has {a.rows}")
    return a.rows, b.cols


def build_K(a: Pattern, b: Pattern, horizon: int) -> Pattern:
    """Horizon-expanded block pattern for a window of ``horizon`` steps.

    Layout (block row ``i``, 1-based, ``T = horizon``): state group ``i`` holds
    ``a`` for ``i >= 2``, state group ``i + 1`` holds the identity for
    ``i <= T - 1`` and input group ``i`` holds ``b``.  The ``n*T`` state
    columns come first, then the ``r*T`` input columns.
    """
    n, r = check_pair(a, b)
    if horizon < 1:
        raise ValueError(f"horizon must be >= 1, got {horizon}")
    T = horizon
    mask = np.zeros((n * T, (n + r) * T), dtype=bool)
    eye = np.eye(n, dtype=bool)
    for i in range(T):
        rs = slice(i * n, (i + 1) * n)
        if i >= 1:
            mask[rs, i * n:(i + 1) * n] = a.mask
        if i <= T - 2:
            mask[rs, (i + 1) * n:(i + 2) * n] = eye
        c0 = n * T + i * r
        mask[rs, c0:c0 + r] = b.mask
    return Pattern(mask)
