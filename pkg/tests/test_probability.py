"""Exact final-sumtroid distributions, scaled rows, and their serialization."""
import json
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dispersion import (
    BudgetExceededError,
    DomainError,
    TheoremViolationError,
    clusteron,
    final_distribution,
    flat_clusteron,
    golden_flat4_finals,
    golden_scaled_rows,
    lx_to_sumtroid,
    monte_carlo,
    monte_carlo_counts,
    parse_state,
    row_from_json,
    row_half_width,
    row_to_csv,
    row_to_json,
    scaled_row,
    shadow_of_sumtroid,
    shadow_probabilities,
    sumtroid_to_lx,
    window_bounds,
    window_recurrence_step,
    zero_pattern_check,
    zero_residue,
)


def test_flat_four_distribution_matches_the_frozen_masses():
    dist = final_distribution(flat_clusteron(4))
    expected = {
        int(f["sumtroid"]): Fraction(f["mass"]) for f in golden_flat4_finals()
    }
    assert dist.mass == expected
    assert dist.prob(0) == Fraction(1, 3)
    assert dist.prob(99) == 0
    assert dist.support() == (-3, -1, 0, 1, 3)


def test_distribution_keys_are_translation_invariant():
    here = final_distribution(flat_clusteron(4))
    there = final_distribution(flat_clusteron(4, start=37))
    assert here.mass == there.mass
    padded = final_distribution(parse_state("0001111000"))
    assert padded.mass == here.mass


def test_forced_play_gives_a_point_mass():
    dist = final_distribution(clusteron((1, 2)))
    assert dist.mass == {0: Fraction(1)}


def test_fast_and_generic_paths_agree():
    for n in range(2, 7):
        fast = final_distribution(flat_clusteron(n))
        slow = final_distribution(parse_state("0" + flat_clusteron(n).pattern()))
        assert fast.mass == slow.mass


def test_rows_match_the_frozen_goldens(rows):
    golden = golden_scaled_rows()
    for n in range(3, 10):
        assert rows[n].half_sequence() == golden[n]


def test_rows_are_symmetric_and_sum_to_factorials(rows):
    for n, row in rows.items():
        row.check_symmetry()
        assert sum(row.sequence()) == math.factorial(n - 1)
        assert len(row.sequence()) == 2 * row_half_width(n) + 1


def test_row_support_and_zeros_follow_the_residue_rule(rows):
    for n, row in rows.items():
        rep = zero_pattern_check(row)
        assert rep.ok, rep
    assert zero_residue(4) == 2
    assert zero_residue(7) == 0
    assert rows[4].value(2) == 0 and rows[4].value(-2) == 0
    assert rows[5].value(0) == 0 and rows[5].value(-1) == 4


def test_shadows_of_a_flat_start_are_uniform():
    for n in range(2, 9):
        probs = shadow_probabilities(n)
        assert set(probs) == set(range(1, n))
        assert all(p == Fraction(1, n - 1) for p in probs.values())


def test_shadow_of_sumtroid_rejects_the_zero_residue():
    with pytest.raises(DomainError):
        shadow_of_sumtroid(4, 2)
    assert shadow_of_sumtroid(4, 1) == 1
    assert shadow_of_sumtroid(4, -3) == 1
    assert shadow_of_sumtroid(4, 3) == 3
    assert shadow_of_sumtroid(4, 0) == 2
    golden = {int(f["sumtroid"]): int(f["shadow_k"]) for f in golden_flat4_finals()}
    assert {k: shadow_of_sumtroid(4, k) for k in golden} == golden


def test_lx_coordinates_roundtrip_on_the_full_support(rows):
    for n in range(3, 9):
        row = rows[n]
        for k in range(-row_half_width(n), row_half_width(n) + 1):
            if row.value(k) == 0:
                continue
            ell, x = sumtroid_to_lx(n, k)
            assert 2 <= ell <= n - 1
            assert 1 <= x <= n - 1
            assert lx_to_sumtroid(n, ell, x) == k
    with pytest.raises(DomainError):
        sumtroid_to_lx(4, 2)


def test_window_bounds_reproduce_the_documented_sums(rows):
    assert window_bounds(5, -1) == (-2, 1)
    assert sum(rows[4].value(k) for k in range(-2, 2)) == 4 == rows[5].value(-1)
    assert window_bounds(6, -2) == (-4, 0)
    assert sum(rows[5].value(k) for k in range(-4, 1)) == 11 == rows[6].value(-2)
    assert window_bounds(6, -4) == (-5, -1)


def test_window_recurrence_rebuilds_each_row(rows):
    for n in range(4, 11):
        stepped = window_recurrence_step(rows[n - 1])
        assert stepped.n == n
        assert stepped.values == rows[n].values


def test_monte_carlo_is_seed_and_shard_deterministic():
    a = monte_carlo_counts(5, 400, seed=7)
    b = monte_carlo_counts(5, 400, seed=7)
    assert a == b
    assert sum(a.values()) == 400
    c = monte_carlo_counts(5, 150, seed=7)
    assert sum(c.values()) == 150
    for k, v in c.items():
        assert v <= a.get(k, 0)
    probs = monte_carlo(5, 400, seed=7)
    assert sum(probs.values()) == 1


def test_monte_carlo_hits_only_legal_sumtroids(rows):
    counts = monte_carlo_counts(6, 300, seed=3)
    legal = {k for k in rows[6].values if rows[6].value(k)}
    assert set(counts) <= legal


def test_row_serialization_roundtrip(rows):
    text = row_to_json(rows[5])
    again = row_from_json(text)
    assert again == rows[5]
    payload = json.loads(text)
    assert payload["n"] == 5
    assert "sha256" in payload


def test_tampered_payloads_are_rejected(rows):
    payload = json.loads(row_to_json(rows[4]))
    payload["values"][0]["v"] = str(int(payload["values"][0]["v"]) + 1)
    with pytest.raises(TheoremViolationError):
        row_from_json(json.dumps(payload))


def test_distribution_serialization_roundtrip():
    dist = final_distribution(flat_clusteron(4))
    assert row_from_json(row_to_json(dist)) == dist


def test_csv_export_shape(rows):
    lines = row_to_csv(rows[3]).strip().splitlines()
    assert lines[0] == "K,value"
    assert len(lines) == 2 * row_half_width(3) + 2
    assert lines[1] == "-1,1"


def test_cache_roundtrip_and_corruption_recovery(tmp_path):
    first = scaled_row(5, cache_dir=tmp_path)
    cached = list(tmp_path.glob("*.json"))
    assert len(cached) == 1
    second = scaled_row(5, cache_dir=tmp_path)
    assert second == first
    cached[0].write_text("{ not json")
    third = scaled_row(5, cache_dir=tmp_path)
    assert third == first
    tampered = json.loads(row_to_json(first))
    tampered["values"][0]["v"] = "999"
    cached[0].write_text(json.dumps(tampered))
    fourth = scaled_row(5, cache_dir=tmp_path)
    assert fourth == first


def test_cache_dir_can_come_from_the_environment(tmp_path, monkeypatch):
    monkeypatch.setenv("DISPERSION_CACHE_DIR", str(tmp_path))
    row = scaled_row(4)
    assert list(tmp_path.glob("*.json"))
    assert scaled_row(4) == row


def test_node_budget_is_enforced():
    with pytest.raises(BudgetExceededError):
        final_distribution(flat_clusteron(9), node_budget=50)
    with pytest.raises(BudgetExceededError):
        final_distribution(parse_state("011110"), node_budget=4)


@settings(max_examples=25, deadline=None)
@given(st.integers(3, 8), st.data())
def test_row_values_scale_the_exact_distribution(n, data):
    row = scaled_row(n)
    dist = final_distribution(flat_clusteron(n))
    k = data.draw(st.integers(-row_half_width(n), row_half_width(n)))
    assert Fraction(row.value(k), math.factorial(n - 1)) == dist.prob(k)
