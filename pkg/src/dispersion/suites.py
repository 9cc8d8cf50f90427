"""Suite codec: the run-length view of single-occupancy states.

A suite is a maximal block of consecutively occupied rooms.  The codec
writes each block as its size and each gap of g empty rooms as g-1
zero cells, so the room pattern "1011001" becomes the suite pattern
"1201".  On single-occupancy states the translation is a bijection; a
move splitting a suite of size k into x and k-x mirrors the room move
fired at the x-th adjacent pair of the block, and both change the
centroid by the same amount.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    BudgetExceededError,
    DomainError,
    InvalidMoveError,
    MalformedStateError,
)
from .states import (
    Move,
    RoomState,
    apply_move,
    available_moves,
    parse_pattern,
)


@dataclass(frozen=True)
class SuiteState:
    """Cell counts of the suite view; ``cells[j]`` sits at ``offset + j``.

    The first and last cells are always positive; zero cells act as
    spacers for gaps wider than one room.
    """

    offset: int
    cells: tuple[int, ...]

    def __post_init__(self) -> None:
        c = self.cells
        if not c or c[0] <= 0 or c[-1] <= 0 or any(v < 0 for v in c):
            raise MalformedStateError(f"bad suite cells {c!r}")

    @property
    def total(self) -> int:
        return sum(self.cells)

    def pattern(self) -> str:
        return "".join(str(v) if v < 10 else f"[{v}]" for v in self.cells)

    def text(self) -> str:
        if self.offset:
            return f"{self.pattern()}@{self.offset}"
        return self.pattern()

    def __str__(self) -> str:  # pragma: no cover - convenience
        return self.text()


def parse_suite_state(text: str) -> SuiteState:
    counts, offset = parse_pattern(text)
    lo = 0
    while lo < len(counts) and counts[lo] == 0:
        lo += 1
    if lo == len(counts):
        raise MalformedStateError(f"no occupied suites in {text!r}")
    hi = len(counts)
    while counts[hi - 1] == 0:
        hi -= 1
    return SuiteState(offset + lo, tuple(counts[lo:hi]))


def to_suites(s: RoomState) -> SuiteState:
    """Encode a single-occupancy state as suites.

    The suite window keeps the room offset, which makes the encoding a
    bijection on positioned states, not only on shadows.
    """
    if not s.single_occupancy:
        raise DomainError(f"suite view needs single occupancy: {s.text()}")
    cells: list[int] = []
    run = 0
    gap = 0
    for c in s.occupancy:
        if c:
            if run == 0 and cells:
                cells.extend([0] * (gap - 1))
            gap = 0
            run += 1
        else:
            if run:
                cells.append(run)
            run = 0
            gap += 1
    cells.append(run)
    return SuiteState(s.offset, tuple(cells))


def from_suites(ss: SuiteState) -> RoomState:
    """Decode suites back to rooms; inverse of :func:`to_suites`."""
    occ: list[int] = []
    zeros = 0
    for v in ss.cells:
        if v == 0:
            zeros += 1
            continue
        if occ:
            occ.extend([0] * (zeros + 1))
        zeros = 0
        occ.extend([1] * v)
    return RoomState(ss.offset, tuple(occ))


@dataclass(frozen=True)
class SuiteMove:
    """Split the suite at absolute cell ``position``: x left, rest right."""

    position: int
    split: int


def suite_moves(ss: SuiteState) -> list[SuiteMove]:
    """All splits, ordered by cell position then split size."""
    out = []
    for j, v in enumerate(ss.cells):
        if v >= 2:
            out.extend(SuiteMove(ss.offset + j, x) for x in range(1, v))
    return out


def apply_suite_move(ss: SuiteState, m: SuiteMove) -> SuiteState:
    j = m.position - ss.offset
    if not (0 <= j < len(ss.cells)) or ss.cells[j] < 2:
        raise InvalidMoveError(f"no splittable suite at {m.position} in {ss.text()}")
    k = ss.cells[j]
    if not (1 <= m.split <= k - 1):
        raise InvalidMoveError(f"split {m.split} out of range for suite of {k}")
    cells = list(ss.cells)
    offset = ss.offset
    cells[j] = 0
    if j == 0:
        cells.insert(0, m.split)
        offset -= 1
        j += 1
    else:
        cells[j - 1] += m.split
    if j == len(cells) - 1:
        cells.append(k - m.split)
    else:
        cells[j + 1] += k - m.split
    while cells[0] == 0:  # defensive; boundary cells stay positive
        cells.pop(0)
        offset += 1
    while cells[-1] == 0:
        cells.pop()
    return SuiteState(offset, tuple(cells))


def suite_sumtroid(ss: SuiteState) -> int:
    return sum(v * (ss.offset + j) for j, v in enumerate(ss.cells))


def suite_centroid(ss: SuiteState) -> Fraction:
    return Fraction(suite_sumtroid(ss), ss.total)


def suite_move_for(s: RoomState, m: Move) -> SuiteMove:
    """The suite move mirroring a room move of a single-occupancy state."""
    ss = to_suites(s)
    # locate the run containing the fired pair and the pair's index in it
    run_index = -1
    run_start = None
    prev = 0
    for room, c in zip(s.rooms(), s.occupancy):
        if c and not prev:
            run_index += 1
            run_start = room
        prev = c
        if room == m.left_room:
            break
    positive = [j for j, v in enumerate(ss.cells) if v > 0]
    return SuiteMove(ss.offset + positive[run_index], m.left_room - run_start + 1)


@dataclass(frozen=True)
class CorrespondenceReport:
    """Outcome of the room/suite graph comparison."""

    room_nodes: int
    suite_nodes: int
    room_edges: int
    suite_edges: int
    mismatches: tuple[str, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_move_correspondence(
    initial: RoomState, node_budget: int = 1_000_000
) -> CorrespondenceReport:
    """Explore both views from one start and compare them edge by edge.

    Checks that encoding is a graph isomorphism: every room node maps to
    a distinct suite node, every room move to a suite move reaching the
    encoded successor, and each mirrored pair of moves shifts the
    centroid identically.  Raises :class:`BudgetExceededError` if either
    exploration would grow past ``node_budget`` states.
    """
    mismatches: list[str] = []
    n = initial.total

    room_nodes: list[RoomState] = []
    seen = {initial}
    queue = [initial]
    room_edges = 0
    while queue:
        s = queue.pop(0)
        room_nodes.append(s)
        for m in available_moves(s):
            room_edges += 1
            t = apply_move(s, m)
            if t not in seen:
                if len(seen) >= node_budget:
                    raise BudgetExceededError(node_budget)
                seen.add(t)
                queue.append(t)

    start = to_suites(initial)
    suite_seen = {start}
    squeue = [start]
    suite_edges = 0
    while squeue:
        ss = squeue.pop(0)
        for sm in suite_moves(ss):
            suite_edges += 1
            tt = apply_suite_move(ss, sm)
            if tt not in suite_seen:
                if len(suite_seen) >= node_budget:
                    raise BudgetExceededError(node_budget)
                suite_seen.add(tt)
                squeue.append(tt)

    encoded = {to_suites(s) for s in room_nodes}
    if len(encoded) != len(room_nodes):
        mismatches.append("suite encoding is not injective on reachable states")
    if encoded != suite_seen:
        mismatches.append(
            f"encoded room nodes ({len(encoded)}) differ from suite nodes "
            f"({len(suite_seen)})"
        )
    if room_edges != suite_edges:
        mismatches.append(f"edge counts differ: {room_edges} rooms vs {suite_edges} suites")

    for s in room_nodes:
        ss = to_suites(s)
        for m in available_moves(s):
            t = apply_move(s, m)
            sm = suite_move_for(s, m)
            try:
                tt = apply_suite_move(ss, sm)
            except InvalidMoveError:
                mismatches.append(f"{s.text()}: move {m.pair} has no suite mirror")
                continue
            if tt != to_suites(t):
                mismatches.append(
                    f"{s.text()}: move {m.pair} maps to {to_suites(t).text()} "
                    f"but suite move gives {tt.text()}"
                )
            room_delta = Fraction(m.sumtroid_delta, n)
            suite_delta = suite_centroid(tt) - suite_centroid(ss)
            if room_delta != suite_delta:
                mismatches.append(
                    f"{s.text()}: centroid delta {room_delta} vs suite {suite_delta}"
                )
    return CorrespondenceReport(
        room_nodes=len(room_nodes),
        suite_nodes=len(suite_seen),
        room_edges=room_edges,
        suite_edges=suite_edges,
        mismatches=tuple(mismatches),
    )
