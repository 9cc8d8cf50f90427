"""Verification suites: every structural claim of the package, checked.

Each suite bundles related checks (exact rows, bijections, coverage
theorems, counting identities) and reports pass/fail per check with a
plain-language statement of the claim.  Default budgets are chosen so
that a full run finishes in well under a minute; raising them tightens
the same checks on larger instances.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from itertools import product
from typing import Callable, Iterator, Mapping

from .errors import DispersionError
from .perms import perm_count_checks, perm_stats, roundtrip_check
from .probability import (
    final_distribution,
    lx_to_sumtroid,
    row_from_json,
    row_half_width,
    row_to_json,
    scaled_row,
    shadow_probabilities,
    sumtroid_to_lx,
    window_bounds,
    window_recurrence_step,
    zero_pattern_check,
    zero_residue,
)
from .reachability import (
    DEFAULT_NODE_BUDGET,
    earliest_gap_decrease,
    explore,
    final_shadow_set,
    flat_final_placements,
    gap_delta_class,
    max_displacement,
    merge_shadows_check,
    placement_of,
    run_policy,
    verify_locked_in_equivalence,
)
from .states import (
    FinalShadowId,
    apply_move_labeled,
    available_moves,
    clusteron,
    entropy,
    final_shadow_family,
    flat_clusteron,
    is_final,
    has_crowded_isolated_room,
    LabeledState,
    parse_state,
    sumtroid,
)
from .suites import from_suites, parse_suite_state, to_suites, verify_move_correspondence
from .trees import (
    ab_identities_check,
    eulerian_check,
    r_table_bruteforce,
    r_table_recursive,
    t_values,
    total_trees,
)

DEFAULT_MAX_N = {
    "states": 7,
    "suites-bijection": 6,
    "finals": 6,
    "locked-in": 7,
    "probability": 10,
    "window": 10,
    "trees": 9,
    "perms": 9,
    "bridge": 9,
}


@dataclass(frozen=True)
class CheckResult:
    """One verified claim: id, pass/fail/skip, details, and the claim."""

    check_id: str
    status: str
    detail: str
    claim: str


@dataclass(frozen=True)
class VerifyReport:
    suite: str
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    @property
    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "skip": 0}
        for c in self.checks:
            out[c.status] += 1
        return out


@dataclass(frozen=True)
class RunConfig:
    """Budgets for a verification run; max_n is keyed by suite name."""

    max_n: Mapping[str, int] = field(default_factory=lambda: dict(DEFAULT_MAX_N))
    node_budget: int = DEFAULT_NODE_BUDGET
    seed: int = 0
    cache_dir: str | None = None

    def __post_init__(self) -> None:
        if self.node_budget <= 0 or any(v <= 0 for v in self.max_n.values()):
            raise ValueError("budgets must be positive")

    def limit(self, suite: str) -> int:
        return self.max_n.get(suite, DEFAULT_MAX_N[suite])


def config_with_max_n(max_n: int | None = None, **kwargs) -> RunConfig:
    """Default config, optionally clamping every suite to one max_n."""
    budgets = dict(DEFAULT_MAX_N)
    if max_n is not None:
        budgets = {k: max_n for k in budgets}
    return RunConfig(max_n=budgets, **kwargs)


# ---------------------------------------------------------------------------
# shipped goldens


def golden_scaled_rows() -> dict[int, list[int]]:
    """Frozen scaled half rows (K <= 0) shipped with the package."""
    text = resources.files("dispersion").joinpath("data/scaled_rows.json").read_text()
    return {int(k): v for k, v in json.loads(text).items() if not k.startswith("_")}


def golden_flat4_finals() -> list[dict]:
    """Frozen final placements and masses of the flat 4-clusteron."""
    text = resources.files("dispersion").joinpath("data/flat4_finals.json").read_text()
    return json.loads(text)["finals"]


def compositions(n: int) -> Iterator[tuple[int, ...]]:
    """All 2^(n-1) ordered ways to write n as a sum of positive parts."""
    for cuts in product((0, 1), repeat=n - 1):
        parts, cur = [], 1
        for c in cuts:
            if c:
                parts.append(cur)
                cur = 1
            else:
                cur += 1
        parts.append(cur)
        yield tuple(parts)


# ---------------------------------------------------------------------------
# suite machinery


def _run(
    checks: list[CheckResult], check_id: str, claim: str, fn: Callable[[], str | None]
) -> None:
    try:
        detail = fn()
    except AssertionError as e:
        checks.append(CheckResult(check_id, "fail", str(e) or "assertion failed", claim))
    except DispersionError as e:
        checks.append(
            CheckResult(check_id, "fail", f"{type(e).__name__}: {e}", claim)
        )
    else:
        checks.append(CheckResult(check_id, "pass", detail or "", claim))


def suite_states(cfg: RunConfig) -> VerifyReport:
    top = cfg.limit("states")
    checks: list[CheckResult] = []

    def parse_roundtrip() -> str:
        for text in ("11", "12", "1011001", "1[12]01@-2", "0001111000", "2"):
            s = parse_state(text)
            assert parse_state(s.text()) == s, text
        return "6 sample patterns"

    _run(checks, "states.parse-roundtrip", "pattern -> state -> text -> state is the identity", parse_roundtrip)

    def chain() -> str:
        path = run_policy(parse_state("12"), "leftmost")
        got = [p.pattern() for p in path]
        assert got == ["12", "1011", "11001", "100101"], got
        return " -> ".join(got)

    _run(checks, "states.forced-chain", "the 12 start admits exactly one play, of three moves", chain)

    def entropy_increases() -> str:
        edges = 0
        for n in range(2, top + 1):
            g = explore(flat_clusteron(n), cfg.node_budget)
            for s in g.nodes:
                for _, t in g.edges[s]:
                    assert entropy(t) > entropy(s), (s.text(), t.text())
                    edges += 1
        return f"{edges} edges, flat starts up to {top}"

    _run(checks, "states.entropy-increase", "entropy strictly increases along every move (termination)", entropy_increases)

    def labeled_agrees() -> str:
        moves = 0
        for n in range(2, min(top, 5) + 1):
            g = explore(flat_clusteron(n), cfg.node_budget)
            for s in g.nodes:
                ls = LabeledState.from_state(s)
                for m, t in g.edges[s]:
                    pushed = apply_move_labeled(ls, m, state=s)
                    assert pushed.to_state() == t, (s.text(), m)
                    assert pushed.positions == tuple(sorted(pushed.positions))
                    moves += 1
        return f"{moves} labeled moves cross-checked"

    _run(checks, "states.labeled-pushing", "the order-preserving labeled move matches the room move", labeled_agrees)

    def displacement() -> str:
        for n in range(2, top + 1):
            assert max_displacement(n, cfg.node_budget) == n - 1, n
            start = flat_clusteron(n)
            left = run_policy(start, "leftmost")[-1]
            right = run_policy(start, "rightmost")[-1]
            dl = LabeledState.from_state(left).positions[-1] - (n - 1)
            dr = LabeledState.from_state(right).positions[0] - 0
            assert dl == n - 1, (n, "all-leftmost play, rightmost occupant", dl)
            assert dr == -(n - 1), (n, "all-rightmost play, leftmost occupant", dr)
        return f"bound n-1 attained for n up to {top}"

    _run(
        checks,
        "states.displacement-bound",
        "no occupant ever moves more than n-1 rooms; extreme plays attain it",
        displacement,
    )

    return VerifyReport("states", tuple(checks))


def suite_suites_bijection(cfg: RunConfig) -> VerifyReport:
    top = cfg.limit("suites-bijection")
    checks: list[CheckResult] = []

    def codec() -> str:
        assert to_suites(parse_state("1011001")).pattern() == "1201"
        assert from_suites(parse_suite_state("1201")).pattern() == "1011001"
        for text in ("11", "101", "110011001", "10010101"):
            s = parse_state(text)
            assert from_suites(to_suites(s)) == s, text
        return "codec round trip on samples"

    _run(checks, "suites.codec", "run-length encoding to suites is invertible", codec)

    def correspondence() -> str:
        nodes = 0
        for n in range(2, top + 1):
            rep = verify_move_correspondence(flat_clusteron(n), cfg.node_budget)
            assert rep.ok, (n, rep.mismatches[:3])
            assert rep.room_nodes == rep.suite_nodes
            assert rep.room_edges == rep.suite_edges
            nodes += rep.room_nodes
        return f"{nodes} states, flat starts up to {top}"

    _run(
        checks,
        "suites.move-correspondence",
        "room moves and suite splits generate isomorphic graphs with equal centroid changes",
        correspondence,
    )

    return VerifyReport("suites-bijection", tuple(checks))


def suite_finals(cfg: RunConfig) -> VerifyReport:
    top = cfg.limit("finals")
    checks: list[CheckResult] = []

    def coverage() -> str:
        starts = 0
        for n in range(2, top + 1):
            fam = frozenset(final_shadow_family(n))
            for parts in compositions(n):
                s = clusteron(parts)
                if len(parts) == 1:
                    assert available_moves(s) == () and is_final(s)
                    continue
                got = final_shadow_set(s, cfg.node_budget)
                if parts == (1, 2):
                    assert got == {FinalShadowId(3, 1)}, got
                elif parts == (2, 1):
                    assert got == {FinalShadowId(3, 2)}, got
                else:
                    assert got == fam, (parts, sorted(got ^ fam))
                starts += 1
        return f"{starts} movable clusterons up to size {top}; 12/21 exceptions confirmed"

    _run(
        checks,
        "finals.family-coverage",
        "every movable clusteron reaches exactly the n final shadows, except 12 and 21",
        coverage,
    )

    def placements() -> str:
        assert flat_final_placements(1) == frozenset()
        g1 = explore(flat_clusteron(1), cfg.node_budget)
        assert g1.finals == (flat_clusteron(1),)
        for n in range(2, top + 2):
            g = explore(flat_clusteron(n), cfg.node_budget)
            got = frozenset(placement_of(f) for f in g.finals)
            want = flat_final_placements(n)
            assert got == want, (n, sorted(got ^ want))
            if n >= 5:
                assert len(want) == (n - 3) * (n - 1) + 2, n
        return f"exhaustive match for flat starts up to {top + 1}"

    _run(
        checks,
        "finals.flat-placements",
        "the predicted set of final placements of a flat start is exhaustive and exact",
        placements,
    )

    def distinct_sumtroids() -> str:
        for n in range(2, top + 2):
            ks = [sumtroid(p.to_state()) for p in flat_final_placements(n)]
            assert len(ks) == len(set(ks)), n
        return f"flat starts up to {top + 1}"

    _run(
        checks,
        "finals.sumtroid-determines",
        "final placements of a flat start have pairwise distinct sumtroids",
        distinct_sumtroids,
    )

    def merged() -> str:
        cases = [(2, 1, 2, 1), (3, 1, 2, 1), (3, 2, 3, 1), (3, 2, 2, 1)]
        for n1, x, n2, y in cases:
            rep = merge_shadows_check(n1, x, n2, y, cfg.node_budget)
            assert rep.ok, (n1, x, n2, y, rep)
        return f"{len(cases)} adjacent-shadow merges"

    _run(
        checks,
        "finals.merge-shadows",
        "two adjacent final shadows settle into their merged shadow at constant sumtroid",
        merged,
    )

    return VerifyReport("finals", tuple(checks))


def suite_locked_in(cfg: RunConfig) -> VerifyReport:
    top = cfg.limit("locked-in")
    checks: list[CheckResult] = []

    def equivalence() -> str:
        nodes = 0
        for n in range(2, top + 1):
            rep = verify_locked_in_equivalence(flat_clusteron(n), cfg.node_budget)
            assert rep.ok, (n, rep.mismatches[:3])
            nodes += rep.nodes
        return f"{nodes} states, flat starts up to {top}"

    _run(
        checks,
        "locked.spacious-equivalence",
        "a state keeps its sumtroid forever exactly when it is spacious",
        equivalence,
    )

    def gap_classes() -> str:
        edges = 0
        for n in range(2, top + 1):
            g = explore(flat_clusteron(n), cfg.node_budget)
            for s in g.nodes:
                for m, _ in g.edges[s]:
                    gap_delta_class(s, m)  # self-verifying
                    edges += 1
        return f"{edges} classified moves, flat starts up to {top}"

    _run(
        checks,
        "locked.gap-classes",
        "each move changes the gap count by +1, 0 or -1 as read off the bounding gaps",
        gap_classes,
    )

    def decrease_bound() -> str:
        earliest = {}
        for n in range(2, min(top, 6) + 1):
            for parts in compositions(n):
                if len(parts) == 1:
                    continue
                e = earliest_gap_decrease(explore(clusteron(parts), cfg.node_budget))
                if e is not None:
                    earliest[parts] = e
        assert min(earliest.values()) == 3, min(earliest.values())
        assert earliest[(2, 1, 1)] == 3
        path = [parse_state("1001111")]
        for pattern in ("10110011", "101101001", "110011001"):
            g = explore(path[-1], cfg.node_budget)
            step = [t for _, t in g.edges[path[-1]] if t.pattern() == pattern]
            assert step, pattern
            path.append(step[0])
        return "tight at move 3; worked three-move path drops 3 gaps to 2"

    _run(
        checks,
        "locked.gap-decrease-bound",
        "the gap count can first decrease at move 3, never earlier",
        decrease_bound,
    )

    def no_crowded() -> str:
        states = 0
        for n in range(2, min(top, 6) + 1):
            for parts in compositions(n):
                s0 = clusteron(parts)
                for s in explore(s0, cfg.node_budget).nodes:
                    if s != s0:
                        assert not has_crowded_isolated_room(s), (parts, s.text())
                        states += 1
        return f"{states} reached states, clusterons up to size {min(top, 6)}"

    _run(
        checks,
        "locked.no-crowded-isolated-room",
        "no play from a clusteron ever strands several occupants in an isolated room",
        no_crowded,
    )

    return VerifyReport("locked-in", tuple(checks))


def suite_probability(cfg: RunConfig) -> VerifyReport:
    top = cfg.limit("probability")
    checks: list[CheckResult] = []

    def golden_rows() -> str:
        golden = golden_scaled_rows()
        hi = min(max(golden), top)
        for n in range(3, hi + 1):
            got = scaled_row(n, node_budget=cfg.node_budget).half_sequence()
            assert got == golden[n], (n, got)
        return f"rows 3..{hi} equal the shipped goldens"

    _run(
        checks,
        "prob.golden-rows",
        "exact scaled distributions reproduce the frozen row data",
        golden_rows,
    )

    def uniform_shadows() -> str:
        for n in range(2, top + 1):
            probs = shadow_probabilities(n, cfg.node_budget)
            assert set(probs) == set(range(1, n))
            assert all(p == Fraction(1, n - 1) for p in probs.values()), (n, probs)
        return f"each of the n-1 shadows has probability 1/(n-1), n up to {top}"

    _run(
        checks,
        "prob.uniform-shadows",
        "all final shadows of a flat start are equally likely",
        uniform_shadows,
    )

    def flat4_table() -> str:
        dist = final_distribution(flat_clusteron(4), cfg.node_budget)
        want = {
            int(row["sumtroid"]): Fraction(row["mass"])
            for row in golden_flat4_finals()
        }
        assert dict(dist.mass) == want, dist.mass
        g = explore(flat_clusteron(4), cfg.node_budget)
        got_placements = {
            (p.shadow_id.k, p.leftmost_room)
            for p in map(placement_of, g.finals)
        }
        want_placements = {
            (int(r["shadow_k"]), int(r["leftmost"])) for r in golden_flat4_finals()
        }
        assert got_placements == want_placements
        return "5 placements, masses 1/6,1/6,1/3,1/6,1/6"

    _run(
        checks,
        "prob.flat4-finals",
        "the flat 4-clusteron lands in its five placements with the frozen masses",
        flat4_table,
    )

    def zero_pattern() -> str:
        for n in range(3, top + 1):
            row = scaled_row(n, node_budget=cfg.node_budget)
            rep = zero_pattern_check(row)
            assert rep.ok, (n, rep.mismatches[:3])
        return f"support and zero residues exact for rows 3..{top}"

    _run(
        checks,
        "prob.zero-pattern",
        "row support is |K| within the half-width, zero exactly on one residue class mod n",
        zero_pattern,
    )

    def symmetry_and_total() -> str:
        from math import factorial

        for n in range(3, top + 1):
            row = scaled_row(n, node_budget=cfg.node_budget)
            row.check_symmetry()
            assert sum(row.values.values()) == factorial(n - 1), n
        return f"rows 3..{top} symmetric, each summing to (n-1)!"

    _run(
        checks,
        "prob.row-symmetry",
        "rows are mirror-symmetric and total (n-1)!",
        symmetry_and_total,
    )

    def serialization() -> str:
        row = scaled_row(min(6, top), node_budget=cfg.node_budget)
        blob = row_to_json(row)
        back = row_from_json(blob)
        assert back == row
        corrupt = blob.replace('"v": "2"', '"v": "3"', 1)
        try:
            row_from_json(corrupt)
        except DispersionError:
            pass
        else:
            raise AssertionError("tampered payload was accepted")
        return "round trip exact; tampering detected by content hash"

    _run(
        checks,
        "prob.serialization",
        "row JSON round-trips exactly and rejects corrupted payloads",
        serialization,
    )

    return VerifyReport("probability", tuple(checks))


def suite_window(cfg: RunConfig) -> VerifyReport:
    top = cfg.limit("window")
    checks: list[CheckResult] = []

    def worked_sums() -> str:
        row5 = scaled_row(5, node_budget=cfg.node_budget)
        lo, hi = window_bounds(5, -1)
        assert (lo, hi) == (-2, 1), (lo, hi)
        got5 = sum(scaled_row(4, node_budget=cfg.node_budget).value(i) for i in range(lo, hi + 1))
        assert got5 == 4, got5
        lo6, hi6 = window_bounds(6, -2)
        assert (lo6, hi6) == (-4, 0), (lo6, hi6)
        got6 = sum(row5.value(i) for i in range(lo6, hi6 + 1))
        assert got6 == 11, got6
        lo6b, hi6b = window_bounds(6, -4)
        assert (lo6b, hi6b) == (-5, -1), (lo6b, hi6b)
        got6b = sum(row5.value(i) for i in range(lo6b, hi6b + 1))
        assert got6b == 11, got6b
        return "0+1+2+1=4 and 1+2+4+4+0=11 reproduced"

    _run(
        checks,
        "window.worked-sums",
        "the documented sliding-window sums come out of the stated bounds",
        worked_sums,
    )

    def recurrence() -> str:
        prev = scaled_row(3, node_budget=cfg.node_budget)
        for n in range(4, top + 1):
            stepped = window_recurrence_step(prev)
            direct = scaled_row(n, node_budget=cfg.node_budget)
            assert stepped == direct, n
            prev = direct
        return f"row n built from row n-1 for n = 4..{top}"

    _run(
        checks,
        "window.recurrence",
        "each scaled row is the sliding-window sum of the previous one",
        recurrence,
    )

    return VerifyReport("window", tuple(checks))


def suite_trees(cfg: RunConfig) -> VerifyReport:
    top = cfg.limit("trees")
    checks: list[CheckResult] = []

    def tables_agree() -> str:
        for n in range(2, top + 1):
            assert r_table_recursive(n).r == r_table_bruteforce(n).r, n
        return f"sizes 2..{top}"

    _run(
        checks,
        "trees.recursion-vs-bruteforce",
        "the size/leaves/path-end recursion reproduces exhaustive enumeration",
        tables_agree,
    )

    def row_sums() -> str:
        for n in range(2, top + 1):
            table = r_table_bruteforce(n)
            assert sum(table.r.values()) == total_trees(n), n
            for x in range(1, n):
                col = sum(table.value(l, x) for l in range(2, n + 1))
                assert col == total_trees(n - 1), (n, x, col)
        return f"column sums (n-2)! and totals (n-1)!, sizes 2..{top}"

    _run(
        checks,
        "trees.column-sums",
        "every path-end column of the tree table sums to (n-2)!",
        row_sums,
    )

    def ab() -> str:
        for n in range(3, top + 1):
            rep = ab_identities_check(n)
            assert rep.ok, (n, rep.mismatches[:3])
        return f"sizes 3..{top}"

    _run(
        checks,
        "trees.root-leaf-split",
        "the root-is-leaf split satisfies its four cell-wise identities",
        ab,
    )

    def t_vals() -> str:
        assert t_values(3) == {2: 2}
        got = t_values(5)
        assert got == {2: 8, 3: 14, 4: 2}, got
        assert sorted(got.values()) == [2, 8, 14]
        return "t(5) = {2: 8, 3: 14, 4: 2}"

    _run(
        checks,
        "trees.leaf-totals",
        "leaf-count totals match enumeration (value multiset 8, 14, 2 at size 5)",
        t_vals,
    )

    def eulerian() -> str:
        rep = eulerian_check(top)
        assert rep.ok, rep.mismatches[:3]
        t5 = r_table_bruteforce(5)
        assert [t5.value(l, 1) for l in (2, 3, 4)] == [1, 4, 1]
        return f"x=1 column matches Eulerian numbers, sizes 3..{top}"

    _run(
        checks,
        "trees.eulerian-column",
        "the path-end-1 column obeys the Eulerian recurrence and alignment",
        eulerian,
    )

    return VerifyReport("trees", tuple(checks))


def suite_perms(cfg: RunConfig) -> VerifyReport:
    top = cfg.limit("perms")
    checks: list[CheckResult] = []

    def examples() -> str:
        st = perm_stats((2, 3, 4, 1))
        assert (st.descents, st.special_descents, st.last) == (1, 1, 1)
        st = perm_stats((1, 2, 3, 4))
        assert (st.descents, st.special_descents, st.last) == (0, 1, 4)
        st = perm_stats((4, 3, 2, 1))
        assert (st.descents, st.special_descents, st.big_descents, st.last) == (3, 3, 0, 1)
        return "3 documented stat examples"

    _run(checks, "perms.stat-examples", "descent statistics match their definitions on samples", examples)

    def roundtrip() -> str:
        hi = min(top - 1, 8)
        for n in range(2, hi + 1):
            assert roundtrip_check(n), n
        return f"all trees with up to {hi} vertices"

    _run(
        checks,
        "perms.tree-bijection",
        "largest-child-first reading is a bijection carrying leaves and path end",
        roundtrip,
    )

    def counts() -> str:
        for n in range(3, top + 1):
            rep = perm_count_checks(n)
            assert rep.ok, (n, rep.mismatches[:3])
        return f"tallies at sizes 3..{top}"

    _run(
        checks,
        "perms.count-identities",
        "descent, special-descent, start-with-2 and relabeling tallies match the tree table",
        counts,
    )

    return VerifyReport("perms", tuple(checks))


def suite_bridge(cfg: RunConfig) -> VerifyReport:
    top = cfg.limit("bridge")
    checks: list[CheckResult] = []

    def lx_roundtrip() -> str:
        cells = 0
        for n in range(3, top + 1):
            w = row_half_width(n)
            res = zero_residue(n)
            for k in range(-w, w + 1):
                if k % n == res:
                    continue
                ell, x = sumtroid_to_lx(n, k)
                assert lx_to_sumtroid(n, ell, x) == k, (n, k)
                cells += 1
        return f"{cells} nonzero cells, sizes 3..{top}"

    _run(
        checks,
        "bridge.coordinates-roundtrip",
        "sumtroid to (leaves, path end) coordinates and back is the identity off the zeros",
        lx_roundtrip,
    )

    def cells_match() -> str:
        for n in range(3, top + 1):
            row = scaled_row(n, node_budget=cfg.node_budget)
            table = r_table_bruteforce(n)
            w = row_half_width(n)
            for leaves in range(2, n):
                for x in range(1, n):
                    k = lx_to_sumtroid(n, leaves, x)
                    want = row.value(k) if abs(k) <= w else 0
                    assert table.value(leaves, x) == want, (n, leaves, x, k)
        return f"every (leaves, path end) cell equals its row value, sizes 3..{top}"

    _run(
        checks,
        "bridge.tree-counts-equal-row",
        "tree-table cells equal the scaled row at the mapped sumtroid",
        cells_match,
    )

    return VerifyReport("bridge", tuple(checks))


SUITES: dict[str, Callable[[RunConfig], VerifyReport]] = {
    "states": suite_states,
    "suites-bijection": suite_suites_bijection,
    "finals": suite_finals,
    "locked-in": suite_locked_in,
    "probability": suite_probability,
    "window": suite_window,
    "trees": suite_trees,
    "perms": suite_perms,
    "bridge": suite_bridge,
}


def run_suites(
    cfg: RunConfig | None = None, names: list[str] | None = None
) -> tuple[VerifyReport, ...]:
    """Run the named suites (default: all) in canonical name order."""
    cfg = cfg or RunConfig()
    selected = sorted(SUITES) if names is None else names
    unknown = [s for s in selected if s not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites: {unknown}")
    return tuple(SUITES[name](cfg) for name in sorted(selected))


def reports_to_json(reports: tuple[VerifyReport, ...]) -> str:
    payload = [
        {
            "suite": r.suite,
            "ok": r.ok,
            "counts": r.counts,
            "checks": [
                {
                    "id": c.check_id,
                    "status": c.status,
                    "claim": c.claim,
                    "detail": c.detail,
                }
                for c in r.checks
            ],
        }
        for r in reports
    ]
    return json.dumps(payload, indent=2) + "\n"


def reports_to_text(reports: tuple[VerifyReport, ...]) -> str:
    lines = []
    for r in reports:
        for c in r.checks:
            mark = {"pass": "PASS", "fail": "FAIL", "skip": "SKIP"}[c.status]
            lines.append(f"{mark}  {c.check_id}: {c.claim}")
            if c.detail:
                lines.append(f"      {c.detail}")
    total = {"pass": 0, "fail": 0, "skip": 0}
    for r in reports:
        for k, v in r.counts.items():
            total[k] += v
    lines.append(
        f"{sum(total.values())} checks: "
        f"{total['pass']} passed, {total['fail']} failed, {total['skip']} skipped"
    )
    return "\n".join(lines) + "\n"
