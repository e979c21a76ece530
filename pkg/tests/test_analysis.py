import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from strategies import pairs

from strongctrl import catalog
from strongctrl.analysis import (
    GUARANTEED,
    NOT_GUARANTEED,
    UNDECIDED,
    Query,
    analyze_controllability,
    analyze_observability,
    dualize,
)
from strongctrl.conditions import brute_check, violates
from strongctrl.pattern import Pattern, parse_pattern, transpose, with_identity

DTV = lambda T: Query("discrete", "time-varying", "controllability", T)  # noqa: E731
LTI = Query("discrete", "time-invariant", "controllability")
CTV = Query("continuous", "time-varying", "controllability")


def obs(q):
    return Query(q.time_domain, q.variation, "observability", q.horizon)


def test_query_validation():
    with pytest.raises(ValueError):
        Query("discrete", "time-varying", "controllability")
    with pytest.raises(ValueError):
        Query("continuous", "time-varying", "controllability", 3)
    with pytest.raises(ValueError):
        Query("discrete", "time-varying", "controllability", 0)
    with pytest.raises(ValueError):
        Query("sampled", "time-invariant", "controllability")


def test_dualize(diagonal):
    a = diagonal[0]
    c = parse_pattern("* o")
    at, ct = dualize(a, c)
    assert at == transpose(a)
    assert ct.shape == (2, 1) and ct.cells() == {(1, 1)}
    back = dualize(at, transpose(ct))
    assert back == (a, transpose(c))


def test_dualize_full_output():
    a, c = catalog.duality_gap_patterns()
    assert c.shape == (1, 2)
    _, ct = dualize(a, c)
    assert ct.cells() == {(1, 1), (2, 1)}


def test_dualize_shape_checks():
    with pytest.raises(ValueError):
        dualize(Pattern.zeros(2, 2), Pattern.zeros(1, 3))


def test_chain_long_horizon(chain):
    rep = analyze_controllability(*chain, DTV(6))
    assert rep.answer == GUARANTEED
    assert [v.condition for v in rep.verdicts] == ["G3", "G1", "G2"]


def test_chain_short_horizon(chain):
    rep = analyze_controllability(*chain, DTV(3))
    assert rep.answer == NOT_GUARANTEED
    (g3,) = rep.verdicts
    assert g3.condition == "G3" and g3.witness


def test_nilpotent_gap(nilpotent):
    assert analyze_controllability(*nilpotent, CTV).answer == NOT_GUARANTEED
    assert analyze_controllability(*nilpotent, LTI).answer == GUARANTEED
    q = Query("continuous", "time-invariant", "controllability")
    assert analyze_controllability(*nilpotent, q).answer == GUARANTEED


def test_short_window_time_invariant(chain):
    q = Query("discrete", "time-invariant", "controllability", 3)
    assert analyze_controllability(*chain, q).answer == UNDECIDED
    q = Query("discrete", "time-invariant", "controllability", 6)
    assert analyze_controllability(*chain, q).answer == GUARANTEED
    q = Query("discrete", "time-invariant", "controllability", 5)
    assert analyze_controllability(*chain, q).answer == GUARANTEED  # G3 holds at T=5


def test_short_window_uncontrollable_pattern(nilpotent):
    a = nilpotent[0]
    q = Query("discrete", "time-invariant", "controllability", 1)
    assert analyze_controllability(a, Pattern.zeros(3, 1), q).answer == NOT_GUARANTEED


def test_duality_gap_pattern_observability():
    # the full pattern admits unobservable systems already for constant
    # coefficients, so no window is guaranteed
    a, c = catalog.duality_gap_patterns()
    for T in (1, 2, 3, 5):
        assert analyze_observability(a, c, obs(DTV(T))).answer == NOT_GUARANTEED
    rep = analyze_observability(a, c, obs(DTV(2)))
    at, ct = dualize(a, c)
    assert violates("G3", at, ct, rep.verdicts[0].witness, horizon=2)
    assert brute_check("G3", at, ct, 2).witness == {3, 4}


def test_zero_output_never_observable(chain):
    a = chain[0]
    for q in (LTI, CTV, DTV(4)):
        assert analyze_observability(a, Pattern.zeros(1, 6), obs(q)).answer == NOT_GUARANTEED
        assert analyze_observability(a, Pattern.zeros(0, 6), obs(q)).answer == NOT_GUARANTEED


def test_transposed_chain_observable(chain):
    a, b = chain
    rep = analyze_observability(transpose(a), transpose(b), obs(LTI))
    assert rep.answer == GUARANTEED
    assert any("duality" in n for n in rep.notes)


def test_direction_guard(chain):
    with pytest.raises(ValueError):
        analyze_controllability(*chain, obs(LTI))
    with pytest.raises(ValueError):
        analyze_observability(chain[0], transpose(chain[1]), LTI)


QUERIES = st.sampled_from(
    [LTI, CTV, Query("continuous", "time-invariant", "controllability")]
    + [DTV(T) for T in (1, 2, 3, 4)]
    + [Query("discrete", "time-invariant", "controllability", T) for T in (1, 2, 5)]
)


@settings(max_examples=150, deadline=None)
@given(pairs(max_n=5, max_r=3), QUERIES)
def test_observability_duality(pair, q):
    a, b = pair
    c = transpose(b)
    assert analyze_observability(a, c, obs(q)).answer == analyze_controllability(transpose(a), b, q).answer


@settings(max_examples=100, deadline=None)
@given(pairs(max_n=6, max_r=3))
def test_implication_lattice(pair):
    a, b = pair
    n = a.rows
    if analyze_controllability(a, b, CTV).answer == GUARANTEED:
        assert analyze_controllability(with_identity(a), b, LTI).answer == GUARANTEED
    if analyze_controllability(a, b, LTI).answer == GUARANTEED:
        for T in (n, n + 1, n + 3):
            assert analyze_controllability(a, b, DTV(T)).answer == GUARANTEED


def test_json_is_stable(chain):
    rep = analyze_controllability(*chain, DTV(3))
    text = rep.to_json()
    assert text == analyze_controllability(*chain, DTV(3)).to_json()
    d = json.loads(text)
    assert list(d) == ["query", "answer", "verdicts", "notes"]
    assert d["verdicts"][0]["witness"] == sorted(d["verdicts"][0]["witness"])
    assert "trace" not in d["verdicts"][0]


def test_verbose_json_has_trace(chain):
    rep = analyze_controllability(*chain, LTI, record=True)
    d = rep.to_dict(verbose=True)
    assert d["verdicts"][0]["trace"][0]["T"] == [1, 2, 4, 5, 6]
