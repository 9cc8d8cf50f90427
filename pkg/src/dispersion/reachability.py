"""Exhaustive exploration of the move graph and its structural checks.

Everything here is exact and deterministic: breadth-first discovery
with canonical deduplication, final-state classification, the
spacious/locked-in equivalence, gap counting, displacement tracking,
and DOT export of move trees and graphs.
"""
from __future__ import annotations

import random
import re
from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .errors import BudgetExceededError, DomainError, TheoremViolationError
from .states import (
    FinalShadowId,
    Move,
    RoomState,
    apply_move,
    available_moves,
    centered_sumtroid,
    classify_final_shadow,
    entropy,
    final_shadow_family,
    flat_clusteron,
    gaps,
    is_final,
    shadow,
    sumtroid,
)

DEFAULT_NODE_BUDGET = 10_000_000


@dataclass(frozen=True)
class ReachGraph:
    """All states reachable from ``initial``, with one edge per move.

    ``nodes`` lists states in breadth-first discovery order; ``edges``
    maps each state to its (move, successor) pairs in move order.  The
    graph is acyclic because entropy strictly increases along edges.
    """

    initial: RoomState
    nodes: tuple[RoomState, ...]
    edges: dict[RoomState, tuple[tuple[Move, RoomState], ...]]
    finals: tuple[RoomState, ...]

    def __contains__(self, s: RoomState) -> bool:
        return s in self.edges

    def successors(self, s: RoomState) -> tuple[RoomState, ...]:
        return tuple(t for _, t in self.edges[s])

    def depths(self) -> dict[RoomState, int]:
        """Minimum number of moves from the initial state to each node."""
        depth = {self.initial: 0}
        queue = deque([self.initial])
        while queue:
            s = queue.popleft()
            for _, t in self.edges[s]:
                if t not in depth:
                    depth[t] = depth[s] + 1
                    queue.append(t)
        return depth


def explore(initial: RoomState, node_budget: int = DEFAULT_NODE_BUDGET) -> ReachGraph:
    """Breadth-first exploration with canonical deduplication."""
    nodes: list[RoomState] = []
    edges: dict[RoomState, tuple[tuple[Move, RoomState], ...]] = {}
    finals: list[RoomState] = []
    seen = {initial}
    queue = deque([initial])
    while queue:
        s = queue.popleft()
        if len(nodes) >= node_budget:
            raise BudgetExceededError(node_budget)
        nodes.append(s)
        outgoing = []
        for m in available_moves(s):
            t = apply_move(s, m)
            outgoing.append((m, t))
            if t not in seen:
                seen.add(t)
                queue.append(t)
        edges[s] = tuple(outgoing)
        if not outgoing:
            finals.append(s)
    return ReachGraph(initial, tuple(nodes), edges, tuple(finals))


def final_shadow_set(
    initial: RoomState, node_budget: int = DEFAULT_NODE_BUDGET
) -> frozenset[FinalShadowId]:
    """Shadows of all reachable final states.

    Raises :class:`TheoremViolationError` when a reachable final state
    is not a member of the final shadow family (crowded room, gap wider
    than 2, ...), since every movable clusteron is expected to land in
    the family.
    """
    g = explore(initial, node_budget)
    out = set()
    bad = []
    for f in g.finals:
        fid = classify_final_shadow(shadow(f))
        if fid is None:
            bad.append(f.text())
        else:
            out.add(fid)
    if bad:
        raise TheoremViolationError(
            f"finals outside the shadow family from {initial.text()}: {bad}"
        )
    return frozenset(out)


class FinalPlacement(NamedTuple):
    """A final shadow together with its leftmost occupied room."""

    shadow_id: FinalShadowId
    leftmost_room: int

    def to_state(self) -> RoomState:
        return self.shadow_id.to_state(self.leftmost_room)


def placement_of(final_state: RoomState) -> FinalPlacement:
    fid = classify_final_shadow(shadow(final_state))
    if fid is None:
        raise DomainError(f"not a family final: {final_state.text()}")
    return FinalPlacement(fid, final_state.offset)


def flat_final_placements(n: int) -> frozenset[FinalPlacement]:
    """Predicted final placements of the flat clusteron at rooms 0..n-1.

    The two extreme shadows appear once more, at leftmost rooms -n+1 and
    -1; every shadow appears at each leftmost room -n+2..-2.  For n = 1
    the start state is already final and carries no 2-gap, so the set is
    empty.  Placement count for n >= 5 is (n-3)(n-1) + 2.
    """
    if n < 2:
        return frozenset()
    out = {
        FinalPlacement(FinalShadowId(n, 1), -n + 1),
        FinalPlacement(FinalShadowId(n, n - 1), -1),
    }
    for k in range(1, n):
        for leftmost in range(-n + 2, -1):
            out.add(FinalPlacement(FinalShadowId(n, k), leftmost))
    return frozenset(out)


def is_spacious(s: RoomState) -> bool:
    """No run of three occupied rooms; 2-runs separated by a wide gap.

    Wide means two or more empty rooms.  Defined for single-occupancy
    states only.
    """
    if not s.single_occupancy:
        raise DomainError(f"spaciousness needs single occupancy: {s.text()}")
    occ = s.occupancy
    run = 0
    pending_pair = False  # a 2-run seen, no wide gap since
    gap = 0
    for c in occ + (0, 0):  # sentinel flushes the last run
        if c:
            if gap >= 2:
                pending_pair = False
            gap = 0
            run += 1
            if run >= 3:
                return False
        else:
            if run == 2:
                if pending_pair:
                    return False
                pending_pair = True
            run = 0
            gap += 1
    return True


def locked_in_map(g: ReachGraph) -> dict[RoomState, bool]:
    """For each node: do all continuations keep the sumtroid fixed?

    Processed in decreasing entropy, a reverse topological order; BFS
    discovery order is not one, since path lengths to a state differ.
    """
    locked: dict[RoomState, bool] = {}
    for s in sorted(g.nodes, key=entropy, reverse=True):
        k = sumtroid(s)
        locked[s] = all(
            sumtroid(t) == k and locked[t] for _, t in g.edges[s]
        )
    return locked


def is_locked_in(g: ReachGraph, s: RoomState) -> bool:
    """True when every state reachable from s has the same sumtroid."""
    k = sumtroid(s)
    seen = {s}
    stack = [s]
    while stack:
        u = stack.pop()
        for _, t in g.edges[u]:
            if sumtroid(t) != k:
                return False
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return True


@dataclass(frozen=True)
class LockedInReport:
    nodes: int
    mismatches: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_locked_in_equivalence(
    initial: RoomState, node_budget: int = DEFAULT_NODE_BUDGET
) -> LockedInReport:
    """Check locked-in == spacious on every reachable state."""
    g = explore(initial, node_budget)
    locked = locked_in_map(g)
    mismatches = []
    for s in g.nodes:
        if locked[s] != is_spacious(s):
            mismatches.append(
                f"{s.text()}: locked_in={locked[s]} spacious={is_spacious(s)}"
            )
    return LockedInReport(len(g.nodes), tuple(mismatches))


def _side_is_narrow(s: RoomState, room: int, step: int) -> bool:
    """Walk from the fired pair past its run; is the bounding gap size 1?

    ``room`` is the first room beyond the pair, ``step`` is -1 or +1.
    A border (no further occupant) and any gap of two or more count as
    wide.  The run containing the pair extends one room into the gap
    when fired, so only 1-gaps disappear.
    """
    r = room
    while s.count(r) > 0:
        r += step
    # r is the first empty room; the gap runs until the next occupant
    size = 0
    while s.leftmost <= r <= s.rightmost:
        if s.count(r) > 0:
            return size == 1
        size += 1
        r += step
    return False  # border


def gap_delta_class(s: RoomState, m: Move) -> int:
    """Classify how the move changes the gap count: +1, 0 or -1.

    The fired pair always opens one new 2-gap; each side of its run
    either merges away a 1-gap or shrinks a wider gap (or extends the
    span at a border).  The predicted class is verified against the
    actual gap count of the successor.
    """
    if not s.single_occupancy:
        raise DomainError("gap classes are defined on single-occupancy states")
    j = m.left_room - s.offset
    if not (0 <= j < len(s.occupancy) - 1) or not (
        s.occupancy[j] and s.occupancy[j + 1]
    ):
        raise DomainError(f"move {m} not available in {s.text()}")
    narrow_sides = _side_is_narrow(s, m.left_room - 1, -1) + _side_is_narrow(
        s, m.left_room + 2, +1
    )
    predicted = 1 - narrow_sides
    actual = len(gaps(apply_move(s, m))) - len(gaps(s))
    if predicted != actual:
        raise TheoremViolationError(
            f"gap delta of {s.text()} at {m.pair}: predicted {predicted}, got {actual}"
        )
    return predicted


def earliest_gap_decrease(g: ReachGraph) -> int | None:
    """Smallest move number (1-based) at which a -1 gap event can occur."""
    depth = g.depths()
    best: int | None = None
    for s in g.nodes:
        if not s.single_occupancy:
            continue
        for m, _ in g.edges[s]:
            if gap_delta_class(s, m) == -1:
                move_number = depth[s] + 1
                if best is None or move_number < best:
                    best = move_number
    return best


@dataclass(frozen=True)
class MergeReport:
    """Outcome of running two adjacent final shadows to completion."""

    expected: FinalShadowId
    finals: tuple[FinalPlacement, ...]
    sumtroid_constant: bool
    nodes: int

    @property
    def ok(self) -> bool:
        return (
            len(self.finals) == 1
            and self.finals[0].shadow_id == self.expected
            and self.sumtroid_constant
        )


def merge_shadows_check(
    n1: int, x: int, n2: int, y: int, node_budget: int = DEFAULT_NODE_BUDGET
) -> MergeReport:
    """Place F(n1, x) directly left of F(n2, y) and explore.

    The combined state is spacious except for the touching pair, and the
    expectation is a single final placement with shadow F(n1+n2, x+y)
    and an unchanged sumtroid everywhere.
    """
    left = FinalShadowId(n1, x).to_state(leftmost=0)
    right = FinalShadowId(n2, y).to_state(leftmost=2 * n1)
    occ = left.occupancy + right.occupancy
    initial = RoomState(0, occ)
    g = explore(initial, node_budget)
    k0 = sumtroid(initial)
    constant = all(sumtroid(s) == k0 for s in g.nodes)
    finals = tuple(sorted(placement_of(f) for f in g.finals))
    return MergeReport(FinalShadowId(n1 + n2, x + y), finals, constant, len(g.nodes))


def displacements(s: RoomState, start: RoomState) -> tuple[int, ...]:
    """Per-occupant room change between two states of equal size.

    Occupants are identified by left-to-right rank, which pushing
    preserves, so the k-th occupant always sits at the k-th smallest
    occupied room.
    """
    a = start.positions()
    b = s.positions()
    if len(a) != len(b):
        raise DomainError("states have different occupant counts")
    return tuple(q - p for p, q in zip(a, b))


def max_displacement(n: int, node_budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Largest |room change| any occupant of a flat clusteron ever shows."""
    start = flat_clusteron(n)
    g = explore(start, node_budget)
    return max(
        (abs(d) for s in g.nodes for d in displacements(s, start)),
        default=0,
    )


def run_policy(
    initial: RoomState,
    policy: str = "leftmost",
    seed: int | None = None,
    max_steps: int | None = None,
) -> list[RoomState]:
    """Play moves to a final state; returns the full trajectory.

    Policies: "leftmost" and "rightmost" take the extreme available
    move, "random" draws uniformly with a seeded generator.
    """
    if policy not in ("leftmost", "rightmost", "random"):
        raise DomainError(f"unknown policy {policy!r}")
    rng = random.Random(seed)
    path = [initial]
    s = initial
    while max_steps is None or len(path) <= max_steps:
        moves = available_moves(s)
        if not moves:
            break
        if policy == "leftmost":
            m = moves[0]
        elif policy == "rightmost":
            m = moves[-1]
        else:
            m = moves[rng.randrange(len(moves))]
        s = apply_move(s, m)
        path.append(s)
    return path


_ID_RE = re.compile(r"[^0-9A-Za-z]")


def _dot_id(text: str, taken: dict[str, int] | None = None) -> str:
    base = "s_" + _ID_RE.sub("_", text)
    if taken is None:
        return base
    serial = taken.get(base, 0)
    taken[base] = serial + 1
    return base if serial == 0 else f"{base}_x{serial}"


def _half_slice(edges: tuple, half: str) -> tuple:
    if half == "full" or len(edges) <= 1:
        return edges
    cut = (len(edges) + 1) // 2
    return edges[:cut] if half == "left" else edges[len(edges) - cut:]


def export_dot(
    initial: RoomState,
    mode: str = "tree",
    labels: str = "pattern",
    half: str = "full",
    prune_locked_in: bool = False,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> str:
    """Render the move tree or deduplicated move graph as DOT text.

    ``labels`` chooses between state patterns and centered sumtroids.
    ``half`` restricts the root to the left or right half of its moves
    (mirror symmetry makes the other half redundant for flat starts).
    ``prune_locked_in`` drops all children of locked-in states, which
    keep their sumtroid forever and add no information.
    """
    if mode not in ("tree", "dag"):
        raise DomainError(f"unknown mode {mode!r}")
    if labels not in ("pattern", "sumtroid"):
        raise DomainError(f"unknown labels {labels!r}")
    if half not in ("full", "left", "right"):
        raise DomainError(f"unknown half {half!r}")

    g = explore(initial, node_budget)
    locked = locked_in_map(g) if prune_locked_in else {}

    def label(s: RoomState) -> str:
        if labels == "sumtroid":
            return str(centered_sumtroid(s))
        return s.text()

    def children(s: RoomState) -> tuple[tuple[Move, RoomState], ...]:
        if prune_locked_in and locked[s]:
            return ()
        edges = g.edges[s]
        return _half_slice(edges, half) if s == initial else edges

    lines = ["digraph dispersion {", "  node [shape=box];"]
    if mode == "dag":
        kept: list[RoomState] = []
        seen = {initial}
        queue = deque([initial])
        while queue:
            s = queue.popleft()
            kept.append(s)
            for _, t in children(s):
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
        for s in kept:
            lines.append(f'  {_dot_id(s.text())} [label="{label(s)}"];')
        for s in kept:
            for _, t in children(s):
                lines.append(f"  {_dot_id(s.text())} -> {_dot_id(t.text())};")
    else:
        taken: dict[str, int] = {}
        budget = [node_budget]

        def emit(s: RoomState, parent_id: str | None) -> None:
            budget[0] -= 1
            if budget[0] < 0:
                raise BudgetExceededError(node_budget)
            node_id = _dot_id(s.text(), taken)
            lines.append(f'  {node_id} [label="{label(s)}"];')
            if parent_id is not None:
                lines.append(f"  {parent_id} -> {node_id};")
            for _, t in children(s):
                emit(t, node_id)

        emit(initial, None)
    lines.append("}")
    return "\n".join(lines) + "\n"
