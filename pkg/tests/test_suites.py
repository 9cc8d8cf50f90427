"""Run-length suite codec and the move correspondence."""
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dispersion import (
    BudgetExceededError,
    DomainError,
    MalformedStateError,
    SuiteState,
    apply_move,
    apply_suite_move,
    available_moves,
    flat_clusteron,
    from_suites,
    parse_state,
    parse_suite_state,
    state_from_positions,
    suite_move_for,
    suite_moves,
    to_suites,
    verify_move_correspondence,
)
from dispersion.suites import suite_centroid, suite_sumtroid

single_states = st.builds(
    state_from_positions, st.sets(st.integers(-9, 9), min_size=1, max_size=9)
)


def test_codec_on_the_documented_example():
    assert to_suites(parse_state("1011001")).cells == (1, 2, 0, 1)
    assert to_suites(parse_state("1011001")).text() == "1201"
    assert from_suites(parse_suite_state("1201")).pattern() == "1011001"


def test_codec_keeps_the_offset():
    ss = to_suites(parse_state("110011@-2"))
    assert ss.offset == -2
    assert ss.text() == "202@-2"
    assert from_suites(ss).text() == "110011@-2"


def test_multiple_occupancy_has_no_suite_view():
    with pytest.raises(DomainError):
        to_suites(parse_state("12"))


def test_suite_windows_must_end_in_blocks():
    assert parse_suite_state("012").offset == 1
    with pytest.raises(MalformedStateError):
        parse_suite_state("0")
    with pytest.raises(MalformedStateError):
        SuiteState(0, (1, 2, 0))


@given(single_states)
def test_codec_roundtrip_is_identity(s):
    assert from_suites(to_suites(s)) == s


def test_splits_of_the_flat_four_suite():
    ss = to_suites(flat_clusteron(4))
    assert ss.cells == (4,)
    results = {apply_suite_move(ss, m).text() for m in suite_moves(ss)}
    assert results == {"103@-1", "202@-1", "301@-1"}


@given(single_states)
def test_suite_moves_mirror_room_moves(s):
    ss = to_suites(s)
    room_moves = available_moves(s)
    assert len(suite_moves(ss)) == len(room_moves)
    for m in room_moves:
        t = apply_move(s, m)
        tt = apply_suite_move(ss, suite_move_for(s, m))
        assert tt == to_suites(t)
        assert suite_sumtroid(tt) - suite_sumtroid(ss) == m.sumtroid_delta
        assert suite_centroid(tt) - suite_centroid(ss) == Fraction(
            m.sumtroid_delta, s.total
        )


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_move_graphs_are_isomorphic(n):
    rep = verify_move_correspondence(flat_clusteron(n))
    assert rep.ok, rep.mismatches
    assert rep.room_nodes == rep.suite_nodes
    assert rep.room_edges == rep.suite_edges


def test_correspondence_respects_its_node_budget():
    with pytest.raises(BudgetExceededError):
        verify_move_correspondence(flat_clusteron(6), node_budget=10)
