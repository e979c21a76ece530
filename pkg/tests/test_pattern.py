import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import patterns

from naive import naive_K
from strongctrl.pattern import (
    Pattern,
    PatternParseError,
    PatternShapeError,
    build_K,
    hstack,
    or_add,
    parse_pattern,
    render_pattern,
    transpose,
    with_identity,
)

CHAIN_A_CELLS = {(1, 2), (2, 1), (3, 4), (4, 5), (5, 6)}
CHAIN_B_CELLS = {(1, 1), (1, 2), (2, 1), (4, 1), (6, 2)}


def test_parse_identity():
    p = parse_pattern("* o\no *")
    assert p.shape == (2, 2)
    assert p.cells() == {(1, 1), (2, 2)}


def test_parse_chain(chain):
    a, b = chain
    assert a.shape == (6, 6) and b.shape == (6, 2)
    assert a.cells() == CHAIN_A_CELLS
    assert b.cells() == CHAIN_B_CELLS


@pytest.mark.parametrize("zero", ["o", "0", "."])
def test_zero_tokens(zero):
    assert parse_pattern(f"* {zero}").cells() == {(1, 1)}


def test_parse_rejects_unknown_token():
    with pytest.raises(PatternParseError, match="'x'"):
        parse_pattern("* *\n* x")


def test_parse_rejects_ragged_rows():
    with pytest.raises(PatternParseError) as info:
        parse_pattern("* o\n* o o\n")
    assert info.value.line == 2
    assert "line 2" in str(info.value)


def test_parse_skips_comments_and_blanks():
    assert parse_pattern("# comment\n\n* o\n\no *\n") == Pattern.identity(2)


def test_zero_column_round_trip():
    p = Pattern.zeros(3, 0)
    assert parse_pattern(render_pattern(p)) == p


def test_render_uses_circles():
    assert render_pattern(parse_pattern("* 0\n. *")) == "* o\no *\n"


@given(patterns())
def test_render_parse_round_trip(p):
    assert parse_pattern(render_pattern(p)) == p


def test_transpose_row_vector():
    p = Pattern.from_cells(1, 3, [(1, 2)])
    t = transpose(p)
    assert t.shape == (3, 1) and t.cells() == {(2, 1)}


def test_transpose_chain_inputs(chain):
    t = transpose(chain[1])
    assert t.shape == (2, 6)
    assert t.cells() == {(1, 1), (1, 2), (1, 4), (2, 1), (2, 6)}


@given(patterns())
def test_transpose_involution(p):
    assert transpose(transpose(p)) == p


def test_hstack_empty_right():
    eye = Pattern.identity(2)
    assert hstack(eye, Pattern.zeros(2, 0)) == eye


def test_hstack_chain_column7(chain):
    ab = hstack(*chain)
    assert ab.shape == (6, 8)
    assert {i for (i, j) in ab.cells() if j == 7} == {1, 2, 4}


def test_hstack_row_mismatch():
    with pytest.raises(PatternShapeError):
        hstack(Pattern.zeros(2, 2), Pattern.zeros(3, 1))


@given(st.data())
def test_hstack_width(data):
    p = data.draw(patterns())
    q = data.draw(patterns(rows=p.rows))
    assert hstack(p, q).cols == p.cols + q.cols


def test_or_add_examples(diagonal):
    a = diagonal[0]
    assert or_add(Pattern.identity(2), a).cells() == {(1, 1), (2, 2)}
    assert or_add(a, Pattern.zeros(2, 2)) == a
    assert or_add(a, a) == a


def test_or_add_shape_mismatch():
    with pytest.raises(PatternShapeError):
        or_add(Pattern.zeros(2, 2), Pattern.zeros(2, 3))


@given(st.data())
def test_or_add_laws(data):
    p = data.draw(patterns())
    q = data.draw(patterns(rows=p.rows, cols=p.cols))
    s = data.draw(patterns(rows=p.rows, cols=p.cols))
    assert or_add(p, q) == or_add(q, p)
    assert or_add(or_add(p, q), s) == or_add(p, or_add(q, s))
    assert or_add(p, p) == p


def test_with_identity_examples(diagonal, chain):
    assert with_identity(diagonal[0]).cells() == {(1, 1), (2, 2)}
    assert with_identity(Pattern.zeros(3, 3)) == Pattern.identity(3)
    a = chain[0]
    expected = set()
    for i in range(1, 7):
        for j in range(1, 7):
            if (i, j) in CHAIN_A_CELLS or i == j:
                expected.add((i, j))
    assert with_identity(a).cells() == expected


def test_with_identity_rejects_rectangular():
    with pytest.raises(PatternShapeError):
        with_identity(Pattern.zeros(2, 3))


@given(st.integers(1, 5).flatmap(lambda n: patterns(n, n)))
def test_with_identity_idempotent(a):
    assert with_identity(with_identity(a)) == with_identity(a)


def test_build_K_two_step_diagonal(diagonal):
    K = build_K(*diagonal, 2)
    assert K.shape == (4, 6)
    assert K.cells() == {(1, 3), (2, 4), (3, 3), (1, 5), (2, 5), (3, 6), (4, 6)}


def test_build_K_horizon_one(chain):
    a, b = chain
    assert build_K(a, b, 1) == hstack(Pattern.zeros(6, 6), b)


def test_build_K_chain_three_steps(chain):
    a, b = chain
    K = build_K(a, b, 3)
    assert K.shape == (18, 24)
    assert np.array_equal(K.mask, np.array(naive_K(a.mask.tolist(), b.mask.tolist(), 3)))


@pytest.mark.parametrize(
    "a, b, T",
    [
        (Pattern.zeros(2, 3), Pattern.zeros(2, 1), 2),
        (Pattern.zeros(2, 2), Pattern.zeros(3, 1), 2),
        (Pattern.zeros(2, 2), Pattern.zeros(2, 1), 0),
    ],
)
def test_build_K_errors(a, b, T):
    with pytest.raises(ValueError):
        build_K(a, b, T)


@given(st.data())
def test_build_K_matches_naive(data):
    n = data.draw(st.integers(1, 4))
    r = data.draw(st.integers(0, 3))
    T = data.draw(st.integers(1, 4))
    a = data.draw(patterns(n, n))
    b = data.draw(patterns(n, r))
    K = build_K(a, b, T)
    assert K.shape == (n * T, (n + r) * T)
    b_rows = b.mask.tolist() if r else [[] for _ in range(n)]
    assert np.array_equal(K.mask, np.array(naive_K(a.mask.tolist(), b_rows, T), dtype=bool).reshape(K.shape))


def test_patterns_are_immutable(chain):
    with pytest.raises(ValueError):
        chain[0].mask[0, 0] = True


def test_contains():
    p = parse_pattern("* o\no *")
    assert p.contains(np.diag([2.0, -1.0]))
    assert not p.contains(np.array([[1.0, 0.0], [0.0, 0.0]]))
