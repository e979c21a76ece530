import pytest
from hypothesis import given
from strategies import pairs

from strongctrl.pattern import Pattern, hstack, transpose
from strongctrl.sgraph import graph_of, post_set, pre_set

CHAIN_EDGES = [(1, 2), (2, 1), (4, 3), (5, 4), (6, 5), (7, 1), (7, 2), (7, 4), (8, 1), (8, 6)]


def test_chain_edges(chain):
    g = graph_of(*chain)
    assert (g.n, g.r) == (6, 2)
    assert g.edges() == CHAIN_EDGES


def test_edge_list_text(chain):
    text = graph_of(*chain).edge_list_text()
    assert text.splitlines()[0] == "1 2"
    assert len(text.splitlines()) == len(CHAIN_EDGES)


def test_edgeless():
    g = graph_of(Pattern.zeros(3, 3), Pattern.zeros(3, 2))
    assert g.edges() == []


@given(pairs())
def test_edge_count_is_nonzero_count(pair):
    a, b = pair
    assert len(graph_of(a, b).edges()) == hstack(a, b).nnz()


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        graph_of(Pattern.zeros(2, 2), Pattern.zeros(3, 1))
    with pytest.raises(ValueError):
        graph_of(Pattern.zeros(2, 3), Pattern.zeros(2, 1))


def test_post_set(chain):
    g = graph_of(*chain)
    assert post_set(g, {8}) == {1, 6}
    assert post_set(g, set()) == frozenset()
    expected = set()
    ab = hstack(*chain).mask
    for v in (7, 8):
        for w in range(6):
            if ab[w, v - 1]:
                expected.add(w + 1)
    assert post_set(g, {7, 8}) == expected == {1, 2, 4, 6}


def test_pre_set(chain):
    g = graph_of(*chain)
    assert pre_set(g, {1}) == {2, 7, 8}
    states = set(range(1, 7))
    pre = pre_set(g, states)
    assert pre == {1, 2, 4, 5, 6, 7, 8}
    assert states - pre == {3}
    assert pre_set(g, set()) == frozenset()


def test_pre_set_tolerates_inputs(chain):
    g = graph_of(*chain)
    assert pre_set(g, {1, 7, 8}) == pre_set(g, {1})


def test_out_of_range(chain):
    g = graph_of(*chain)
    with pytest.raises(IndexError):
        post_set(g, {9})
    with pytest.raises(IndexError):
        pre_set(g, {0})


@given(pairs())
def test_pre_post_adjoint(pair):
    g = graph_of(*pair)
    for v in g.vertices:
        for w in g.vertices:
            assert (w in post_set(g, {v})) == (v in pre_set(g, {w}))


@given(pairs())
def test_union_distributes(pair):
    g = graph_of(*pair)
    X, Y = {1}, set(range(1, g.n + 1, 2))
    assert post_set(g, X | Y) == post_set(g, X) | post_set(g, Y)
    assert pre_set(g, X | Y) == pre_set(g, X) | pre_set(g, Y)
    assert post_set(g, X) <= post_set(g, X | Y)


@given(pairs(max_r=0))
def test_transpose_swaps_pre_and_post(pair):
    a, _ = pair
    n = a.rows
    g = graph_of(a, Pattern.zeros(n, 0))
    gt = graph_of(transpose(a), Pattern.zeros(n, 0))
    for v in range(1, n + 1):
        assert post_set(gt, {v}) == pre_set(g, {v})
