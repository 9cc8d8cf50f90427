"""Exact distribution of final sumtroids and the structure of its rows.

Moves are drawn uniformly at random among the available ones.  The
distribution over final centered sumtroids is computed exactly with
rational arithmetic: no float enters any published number.

Flat starts get a fast path: a single-occupancy state is a bit mask,
and because entropy is the mask value itself, processing masks in
increasing numeric order is a topological order of the move graph.
"""
from __future__ import annotations

import csv
import hashlib
import heapq
import io
import json
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from pathlib import Path
from typing import NamedTuple

from .errors import BudgetExceededError, DomainError, TheoremViolationError
from .reachability import DEFAULT_NODE_BUDGET, explore
from .states import RoomState, entropy, flat_clusteron, sumtroid

CACHE_ENV_VAR = "DISPERSION_CACHE_DIR"


def row_half_width(n: int) -> int:
    """Largest centered sumtroid a final state of n occupants can have."""
    return (n - 1) * (n - 2) // 2


def zero_residue(n: int) -> int:
    """Centered sumtroids congruent to this mod n carry no mass."""
    return n // 2 if n % 2 == 0 else 0


def shadow_of_sumtroid(n: int, k: int) -> int:
    """Which final shadow F(n, k') a centered sumtroid k belongs to."""
    kp = (zero_residue(n) - k) % n
    if kp == 0:
        raise DomainError(f"sumtroid {k} is a structural zero for n={n}")
    return kp


# ---------------------------------------------------------------------------
# mask engine: single-occupancy states as bit masks


def _mask_successors(mask: int) -> list[int]:
    """One mask per available move; bit j is room floor+j for any floor."""
    out = []
    pairs = mask & (mask >> 1)
    while pairs:
        low = pairs & -pairs
        j = low.bit_length() - 1
        pairs ^= low
        below = ~mask & ((1 << j) - 1)
        jl = below.bit_length() - 1
        x = mask >> (j + 2)
        z = (x + 1) & ~x  # lowest zero bit of x
        jr = j + 2 + z.bit_length() - 1
        out.append((mask ^ (3 << j)) | (1 << jl) | (1 << jr))
    return out


def _mask_sumtroid(mask: int, floor: int) -> int:
    total = 0
    count = 0
    while mask:
        low = mask & -mask
        total += low.bit_length() - 1
        count += 1
        mask ^= low
    return total + count * floor


def _flat_mask_distribution(
    n: int, node_budget: int = DEFAULT_NODE_BUDGET
) -> dict[int, Fraction]:
    """Centered sumtroid -> probability for the flat clusteron of size n.

    Forward pass in increasing mask order (= increasing entropy, a
    topological order), keeping one pending probability per frontier
    state.  No occupant ever leaves rooms -(n-1)..2n-2, so two spare
    bits below the start window are margin enough.
    """
    floor = -(n + 1)
    start = ((1 << n) - 1) << -floor
    center = n * (n - 1) // 2
    pending: dict[int, Fraction] = {start: Fraction(1)}
    heap = [start]
    out: dict[int, Fraction] = {}
    processed = 0
    while heap:
        mask = heapq.heappop(heap)
        p = pending.pop(mask)
        processed += 1
        if processed > node_budget:
            raise BudgetExceededError(node_budget)
        succ = _mask_successors(mask)
        if not succ:
            k = _mask_sumtroid(mask, floor) - center
            out[k] = out.get(k, Fraction(0)) + p
            continue
        share = p / len(succ)
        for t in succ:
            if t in pending:
                pending[t] += share
            else:
                pending[t] = share
                heapq.heappush(heap, t)
    return out


# ---------------------------------------------------------------------------
# distributions and scaled rows


@dataclass(frozen=True)
class SumtroidDistribution:
    """Exact probability of each final sumtroid change.

    Keys are sumtroid(final) - sumtroid(initial), which is invariant
    under translating the start state.
    """

    n: int
    mass: dict[int, Fraction]

    def prob(self, k: int) -> Fraction:
        return self.mass.get(k, Fraction(0))

    def support(self) -> tuple[int, ...]:
        return tuple(sorted(k for k, p in self.mass.items() if p))

    def check_total(self) -> None:
        total = sum(self.mass.values(), Fraction(0))
        if total != 1:
            raise TheoremViolationError(f"masses sum to {total}, not 1")


def final_distribution(
    initial: RoomState, node_budget: int = DEFAULT_NODE_BUDGET
) -> SumtroidDistribution:
    """Distribution of the final sumtroid change under uniform play.

    Flat clusterons use the mask fast path; any other start falls back
    to explicit exploration ordered by entropy, which is a topological
    order of the move graph.
    """
    n = initial.total
    if initial.occupancy == (1,) * n:
        mass = _flat_mask_distribution(n, node_budget)
        dist = SumtroidDistribution(n, mass)
        dist.check_total()
        return dist
    g = explore(initial, node_budget)
    k0 = sumtroid(initial)
    order = sorted(g.nodes, key=entropy)
    pending: dict[RoomState, Fraction] = {initial: Fraction(1)}
    mass: dict[int, Fraction] = {}
    for s in order:
        p = pending.pop(s, None)
        if p is None:  # unreachable duplicates cannot occur, defensive
            continue
        edges = g.edges[s]
        if not edges:
            k = sumtroid(s) - k0
            mass[k] = mass.get(k, Fraction(0)) + p
            continue
        share = p / len(edges)
        for _, t in edges:
            pending[t] = pending.get(t, Fraction(0)) + share
    dist = SumtroidDistribution(n, mass)
    dist.check_total()
    return dist


@dataclass(frozen=True)
class ScaledRow:
    """Final-sumtroid probabilities times (n-1)!, all integers.

    ``values`` covers every k with |k| <= row_half_width(n), zeros
    included.
    """

    n: int
    values: dict[int, int]

    def value(self, k: int) -> int:
        return self.values.get(k, 0)

    def sequence(self) -> list[int]:
        w = row_half_width(self.n)
        return [self.values[k] for k in range(-w, w + 1)]

    def half_sequence(self) -> list[int]:
        """Values for k from -row_half_width(n) up to 0."""
        w = row_half_width(self.n)
        return [self.values[k] for k in range(-w, 1)]

    def check_symmetry(self) -> None:
        if any(self.values[k] != self.values[-k] for k in self.values):
            raise TheoremViolationError(f"row {self.n} is not mirror-symmetric")


def _row_from_distribution(dist: SumtroidDistribution) -> ScaledRow:
    n = dist.n
    scale = factorial(n - 1)
    w = row_half_width(n)
    values: dict[int, int] = {}
    for k in range(-w, w + 1):
        v = dist.prob(k) * scale
        if v.denominator != 1:
            raise TheoremViolationError(
                f"scaled mass at n={n}, k={k} is not integral: {v}"
            )
        values[k] = int(v)
    stray = [k for k in dist.mass if abs(k) > w and dist.mass[k]]
    if stray:
        raise TheoremViolationError(f"mass outside the row window at {stray}")
    return ScaledRow(n, values)


def scaled_row(
    n: int,
    cache_dir: str | Path | None = None,
    node_budget: int = DEFAULT_NODE_BUDGET,
) -> ScaledRow:
    """Scaled distribution row for the flat clusteron of size n.

    When a cache directory is given (or set via DISPERSION_CACHE_DIR),
    rows are stored as JSON and reused only if their content hash still
    matches; anything corrupt is recomputed.
    """
    if n < 2:
        raise DomainError("rows are defined for n >= 2")
    cache = _resolve_cache_dir(cache_dir)
    if cache is not None:
        cached = _load_cached_row(cache / f"row_N{n}_scaled.json", n)
        if cached is not None:
            return cached
    row = _row_from_distribution(final_distribution(flat_clusteron(n), node_budget))
    row.check_symmetry()
    if cache is not None:
        cache.mkdir(parents=True, exist_ok=True)
        (cache / f"row_N{n}_scaled.json").write_text(row_to_json(row))
    return row


def shadow_probabilities(
    n: int, node_budget: int = DEFAULT_NODE_BUDGET
) -> dict[int, Fraction]:
    """Exact probability of finishing in each final shadow F(n, k).

    Final states with the same sumtroid residue mod n share a shadow,
    so the distribution is grouped by residue.
    """
    dist = final_distribution(flat_clusteron(n), node_budget)
    out = {k: Fraction(0) for k in range(1, n)}
    for k, p in dist.mass.items():
        if p:
            out[shadow_of_sumtroid(n, k)] += p
    return out


@dataclass(frozen=True)
class ZeroPatternReport:
    n: int
    mismatches: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def zero_pattern_check(row: ScaledRow) -> ZeroPatternReport:
    """Zeros sit exactly on the residue class of zero_residue(n)."""
    n = row.n
    res = zero_residue(n)
    w = row_half_width(n)
    bad = []
    for k in range(-w, w + 1):
        expected_zero = k % n == res
        if expected_zero and row.values[k] != 0:
            bad.append(f"k={k}: expected 0, got {row.values[k]}")
        if not expected_zero and row.values[k] <= 0:
            bad.append(f"k={k}: expected positive, got {row.values[k]}")
    return ZeroPatternReport(n, tuple(bad))


# ---------------------------------------------------------------------------
# sumtroid <-> (leaves, path end) coordinates


class LxPair(NamedTuple):
    """Tree coordinates of a nonzero row cell: leaf count and path end."""

    ell: int
    x: int


def sumtroid_to_lx(n: int, k: int) -> LxPair:
    """Map a nonzero centered sumtroid to its (leaves, path end) cell."""
    if abs(k) > row_half_width(n):
        raise DomainError(f"|k| > {row_half_width(n)} for n={n}")
    if k % n == zero_residue(n):
        raise DomainError(f"sumtroid {k} is a structural zero for n={n}")
    shifted = k + (n - 2) * (n - 1) // 2
    ell = shifted // n + 2
    x = shifted % n
    if x == 0:
        x = 1
    return LxPair(ell, x)


def lx_to_sumtroid(n: int, ell: int, x: int) -> int:
    """Inverse of :func:`sumtroid_to_lx` on its image."""
    if not (1 <= x <= n - 1):
        raise DomainError(f"x={x} out of range for n={n}")
    return -(n - 2) * (n - 1) // 2 + (ell - 2) * n + (x - 1) + min(x - 1, 1)


# ---------------------------------------------------------------------------
# window recurrence


def window_bounds(n: int, k: int) -> tuple[int, int]:
    """Inclusive window of previous-row sumtroids feeding cell k of row n."""
    m = zero_residue(n)
    a = Fraction((k + m) // n) - Fraction(1 + (-1) ** n, 4)
    lo = Fraction(k) - Fraction(n - 1, 2) - a
    hi = Fraction(k) + Fraction(n - 1, 2) - a - 1
    if lo.denominator != 1 or hi.denominator != 1:
        raise TheoremViolationError(f"window bounds not integral at n={n}, k={k}")
    return int(lo), int(hi)


def window_recurrence_step(prev: ScaledRow) -> ScaledRow:
    """Build row n = prev.n + 1 by sliding-window sums over the previous row.

    Structural zeros are written directly; every other cell is the sum
    of a window of n-1 consecutive previous-row cells.
    """
    n = prev.n + 1
    w = row_half_width(n)
    res = zero_residue(n)
    values: dict[int, int] = {}
    for k in range(-w, w + 1):
        if k % n == res:
            values[k] = 0
            continue
        lo, hi = window_bounds(n, k)
        values[k] = sum(prev.value(i) for i in range(lo, hi + 1))
    return ScaledRow(n, values)


# ---------------------------------------------------------------------------
# Monte Carlo


def _playout_sumtroid(n: int, rng: random.Random) -> int:
    """One uniform random playout of the flat clusteron; centered result."""
    shift = n + 1
    mask = ((1 << n) - 1) << shift
    k = 0
    while True:
        pairs = mask & (mask >> 1)
        if not pairs:
            return k
        count = pairs.bit_count()
        idx = rng.randrange(count) if count > 1 else 0
        for _ in range(idx):
            pairs &= pairs - 1
        low = pairs & -pairs
        j = low.bit_length() - 1
        below = ~mask & (low - 1)
        jl = below.bit_length() - 1
        x = mask >> (j + 2)
        z = (x + 1) & ~x
        jr = j + 2 + z.bit_length() - 1
        k += jl + jr - 2 * j - 1  # right reach minus left reach
        mask = (mask ^ (3 << j)) | (1 << jl) | (1 << jr)


def monte_carlo_counts(n: int, samples: int, seed: int) -> dict[int, int]:
    """Sampled final sumtroids; sample i uses Random(seed*1000003 + i).

    Per-sample seeding makes shards independent of evaluation order: any
    partition of the index range gives the same totals.
    """
    counts: dict[int, int] = {}
    for i in range(samples):
        rng = random.Random(seed * 1_000_003 + i)
        k = _playout_sumtroid(n, rng)
        counts[k] = counts.get(k, 0) + 1
    return dict(sorted(counts.items()))


def monte_carlo(n: int, samples: int, seed: int) -> dict[int, Fraction]:
    """Empirical distribution of final sumtroids, exact fractions."""
    return {
        k: Fraction(c, samples) for k, c in monte_carlo_counts(n, samples, seed).items()
    }


# ---------------------------------------------------------------------------
# serialization and caching


def _row_payload(row: ScaledRow) -> dict:
    w = row_half_width(row.n)
    return {
        "n": row.n,
        "scaled": True,
        "values": [{"k": k, "v": str(row.values[k])} for k in range(-w, w + 1)],
    }


def _dist_payload(dist: SumtroidDistribution) -> dict:
    return {
        "n": dist.n,
        "scaled": False,
        "values": [
            {"k": k, "v": str(dist.mass[k])} for k in sorted(dist.mass) if dist.mass[k]
        ],
    }


def _payload_hash(payload: dict) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def row_to_json(row: ScaledRow | SumtroidDistribution) -> str:
    payload = (
        _row_payload(row) if isinstance(row, ScaledRow) else _dist_payload(row)
    )
    payload["sha256"] = _payload_hash(
        {k: v for k, v in payload.items() if k != "sha256"}
    )
    return json.dumps(payload, indent=2) + "\n"


def row_from_json(text: str) -> ScaledRow | SumtroidDistribution:
    payload = json.loads(text)
    body = {k: v for k, v in payload.items() if k != "sha256"}
    if payload.get("sha256") != _payload_hash(body):
        raise TheoremViolationError("row payload hash mismatch")
    n = payload["n"]
    if payload["scaled"]:
        return ScaledRow(n, {cell["k"]: int(cell["v"]) for cell in payload["values"]})
    return SumtroidDistribution(
        n, {cell["k"]: Fraction(cell["v"]) for cell in payload["values"]}
    )


def row_to_csv(row: ScaledRow | SumtroidDistribution) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["K", "value"])
    if isinstance(row, ScaledRow):
        w = row_half_width(row.n)
        for k in range(-w, w + 1):
            writer.writerow([k, row.values[k]])
    else:
        for k in sorted(row.mass):
            writer.writerow([k, str(row.mass[k])])
    return buf.getvalue()


def _resolve_cache_dir(cache_dir: str | Path | None) -> Path | None:
    if cache_dir is not None:
        return Path(cache_dir)
    env = os.environ.get(CACHE_ENV_VAR)
    return Path(env) if env else None


def _load_cached_row(path: Path, n: int) -> ScaledRow | None:
    if not path.is_file():
        return None
    try:
        row = row_from_json(path.read_text())
    except (OSError, ValueError, KeyError, TheoremViolationError):
        return None  # corrupt caches are recomputed, never trusted
    if not isinstance(row, ScaledRow) or row.n != n:
        return None
    return row
