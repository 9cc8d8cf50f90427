"""Exhaustive exploration, final classification, and locked-in structure."""
import pytest
from hypothesis import given, strategies as st

from dispersion import (
    BudgetExceededError,
    FinalShadowId,
    TheoremViolationError,
    apply_move,
    available_moves,
    clusteron,
    displacements,
    earliest_gap_decrease,
    explore,
    export_dot,
    final_shadow_family,
    final_shadow_set,
    flat_clusteron,
    flat_final_placements,
    gap_delta_class,
    gaps,
    is_final,
    is_locked_in,
    is_spacious,
    max_displacement,
    merge_shadows_check,
    parse_state,
    placement_of,
    run_policy,
    state_from_positions,
    sumtroid,
    verify_locked_in_equivalence,
)


def test_flat_four_graph_has_known_shape(flat_graphs):
    g = flat_graphs[4]
    assert len(g.nodes) == 18
    assert len(g.finals) == 5
    assert g.depths()[g.initial] == 0
    assert all(is_final(f) for f in g.finals)
    assert sum(len(e) for e in g.edges.values()) == sum(
        len(available_moves(s)) for s in g.nodes
    )


def test_explore_respects_its_node_budget():
    with pytest.raises(BudgetExceededError) as exc:
        explore(flat_clusteron(7), node_budget=25)
    assert exc.value.budget == 25


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_flat_starts_reach_every_final_shadow(n):
    assert final_shadow_set(flat_clusteron(n)) == final_shadow_family(n)


def test_the_two_smallest_crowded_starts_reach_one_shadow_each():
    assert final_shadow_set(clusteron((1, 2))) == frozenset({FinalShadowId(3, 1)})
    assert final_shadow_set(clusteron((2, 1))) == frozenset({FinalShadowId(3, 2)})


def test_width_one_crowded_starts_are_stuck():
    s = clusteron((3,))
    assert available_moves(s) == ()
    with pytest.raises(TheoremViolationError):
        final_shadow_set(s)


def test_placement_of_reads_shadow_and_leftmost():
    p = placement_of(parse_state("10100101@-2"))
    assert p.shadow_id == FinalShadowId(4, 2)
    assert p.leftmost_room == -2
    assert p.to_state() == parse_state("10100101@-2")


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_predicted_flat_placements_match_exploration(n, flat_graphs):
    observed = frozenset(placement_of(f) for f in flat_graphs[n].finals if n > 1)
    if n == 1:
        assert flat_graphs[1].finals == (flat_clusteron(1),)
        assert flat_final_placements(1) == frozenset()
    else:
        assert flat_final_placements(n) == observed


def test_placement_count_follows_the_quadratic_formula():
    for n in range(5, 9):
        assert len(flat_final_placements(n)) == (n - 3) * (n - 1) + 2


def test_spaciousness_on_samples():
    assert is_spacious(parse_state("10101"))
    assert is_spacious(parse_state("110011"))
    assert is_spacious(parse_state("11"))
    assert not is_spacious(parse_state("111"))
    assert not is_spacious(parse_state("11011"))
    assert not is_spacious(parse_state("1101011"))


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_locked_in_equals_spacious_everywhere(n, flat_graphs):
    rep = verify_locked_in_equivalence(flat_clusteron(n))
    assert rep.ok, rep.mismatches
    g = flat_graphs[n]
    for f in g.finals:
        assert is_locked_in(g, f)
    assert not is_locked_in(g, g.initial) or n <= 2


def test_locked_in_states_keep_their_sumtroid(flat_graphs):
    g = flat_graphs[5]
    for s in g.nodes:
        if not is_locked_in(g, s):
            continue
        k = sumtroid(s)
        stack = [s]
        seen = {s}
        while stack:
            u = stack.pop()
            assert sumtroid(u) == k
            for _, t in g.edges[u]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)


@given(st.builds(state_from_positions, st.sets(st.integers(-8, 8), min_size=2, max_size=7)))
def test_gap_deltas_are_limited_to_three_classes(s):
    for m in available_moves(s):
        delta = gap_delta_class(s, m)
        assert delta in (-1, 0, 1)
        assert len(gaps(apply_move(s, m))) - len(gaps(s)) == delta


def test_gap_decreases_start_at_move_three():
    assert earliest_gap_decrease(explore(clusteron((2, 1, 1)))) == 3
    assert earliest_gap_decrease(explore(flat_clusteron(5))) == 4
    assert earliest_gap_decrease(explore(flat_clusteron(2))) is None


def test_adjacent_final_shadows_merge_into_one():
    rep = merge_shadows_check(3, 1, 2, 1)
    assert rep.ok
    assert rep.expected == FinalShadowId(5, 2)
    rep = merge_shadows_check(2, 1, 3, 2)
    assert rep.ok and rep.expected == FinalShadowId(5, 3)


def test_displacements_are_rank_aligned():
    start = flat_clusteron(3)
    final = parse_state("101001@-1")
    assert displacements(final, start) == (-1, 0, 2)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_no_occupant_moves_farther_than_n_minus_one(n):
    assert max_displacement(n) == n - 1


def test_extreme_policies_reach_the_extreme_corners():
    n = 5
    start = flat_clusteron(n)
    left_play = run_policy(start, "leftmost")
    right_play = run_policy(start, "rightmost")
    assert is_final(left_play[-1]) and is_final(right_play[-1])
    d_left = displacements(left_play[-1], start)
    d_right = displacements(right_play[-1], start)
    assert d_left[-1] == n - 1
    assert d_right[0] == -(n - 1)
    assert placement_of(left_play[-1]).shadow_id == FinalShadowId(n, n - 1)
    assert placement_of(right_play[-1]).shadow_id == FinalShadowId(n, 1)


def test_random_policy_is_seed_deterministic():
    a = run_policy(flat_clusteron(6), "random", seed=11)
    b = run_policy(flat_clusteron(6), "random", seed=11)
    assert a == b
    assert is_final(a[-1])


def test_dot_export_modes():
    full = export_dot(flat_clusteron(4), mode="dag")
    assert full.startswith("digraph")
    assert full.count("label=") == 18
    tree = export_dot(flat_clusteron(4), mode="tree", labels="sumtroid")
    assert tree.count("->") == 19
    pruned = export_dot(flat_clusteron(5), mode="dag", prune_locked_in=True)
    assert pruned.count("label=") < export_dot(flat_clusteron(5), mode="dag").count(
        "label="
    )
    half = export_dot(flat_clusteron(4), mode="tree", half="left")
    assert half.count("->") < tree.count("->")
