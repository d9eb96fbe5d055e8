"""Exact influence computation by exhaustive profile enumeration.

A player's unnormalized influence is the probability that replacing their
ranking with a uniformly random different one at a uniformly random profile
changes the winner; every ranking and every profile is equally likely.  The
normalized index divides by a dictator's value (m! - (m-1)!) / (m! - 1), so
dictators score 1 and null players 0.

Enumeration memoizes all (m!)^n winners in an outcome table, then counts
swings per player with a per-slice coincidence identity; see
``count_swings`` in the kernel modules.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

import numpy as np

from . import backend
from .core import DEFAULT_ENUM_CAP, Committee, Profile, Ranking, winner
from .errors import EnumerationCapError, ValidationError

TABLE_CHUNK = 1 << 16


@dataclass(frozen=True, eq=False)
class OutcomeTable:
    """Winner of every profile, indexed by profile code."""

    committee: Committee
    winners: np.ndarray  # int8, length (m!)^n


@dataclass(frozen=True)
class ExactPowerReport:
    """Per-player swing counts and exact influence values."""

    committee: Committee
    swing_counts: tuple[int, ...]
    unnormalized: tuple[Fraction, ...]
    normalized: tuple[Fraction, ...]

    @property
    def unnormalized_floats(self) -> tuple[float, ...]:
        return tuple(float(x) for x in self.unnormalized)

    @property
    def normalized_floats(self) -> tuple[float, ...]:
        return tuple(float(x) for x in self.normalized)


def normalization_factor(m: int) -> Fraction:
    """Dictator's unnormalized influence: (m! - (m-1)!) / (m! - 1)."""
    f = factorial(m)
    return Fraction(f - factorial(m - 1), f - 1)


def delta_indicator(committee: Committee, profile: Profile, player: int,
                    replacement: Ranking) -> bool:
    """True iff replacing `player`'s ranking by `replacement` moves the winner."""
    if not 0 <= player < committee.n:
        raise ValidationError(f"player index {player} out of range")
    if replacement == profile.rankings[player]:
        raise ValidationError("replacement ranking equals the current one")
    return winner(committee, profile) != winner(
        committee, profile.replace(player, replacement))


def swing_rankings(committee: Committee, profile: Profile,
                   player: int) -> tuple[Ranking, ...]:
    """All replacement rankings for `player` that change the winner."""
    current = profile.rankings[player]
    out = []
    for code in range(factorial(committee.m)):
        candidate = Ranking.from_code(code, committee.m)
        if candidate == current:
            continue
        if delta_indicator(committee, profile, player, candidate):
            out.append(candidate)
    return tuple(out)


def build_outcome_table(committee: Committee, *, cap: int = DEFAULT_ENUM_CAP,
                        workers: int = 1) -> OutcomeTable:
    """Evaluate the winner of every profile; errors out beyond `cap` entries."""
    total = factorial(committee.m) ** committee.n
    if total > cap:
        raise EnumerationCapError(
            f"enumeration too large: {total} profiles exceed the cap {cap}; "
            "use Monte Carlo estimation (influence_mc) instead"
        )
    kern = backend.get_kernels()
    weights = np.asarray(committee.weights, dtype=np.int64)
    args = (committee.m, committee.n, weights, committee.rule_id)
    out = np.empty(total, dtype=np.int8)
    if workers <= 1 or total <= TABLE_CHUNK:
        out[:] = kern.eval_winners(*args, 0, total)
        return OutcomeTable(committee, out)
    # Fixed-size chunks into disjoint slices: identical for any worker count.
    starts = range(0, total, TABLE_CHUNK)

    def fill(start: int) -> None:
        stop = min(total, start + TABLE_CHUNK)
        out[start:stop] = kern.eval_winners(*args, start, stop)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        list(pool.map(fill, starts))
    return OutcomeTable(committee, out)


def influence_exact(committee: Committee, *, cap: int = DEFAULT_ENUM_CAP,
                    workers: int = 1) -> ExactPowerReport:
    """Exact per-player influence by full enumeration."""
    table = build_outcome_table(committee, cap=cap, workers=workers)
    kern = backend.get_kernels()
    swings = kern.count_swings(table.winners, committee.m, committee.n)
    f = factorial(committee.m)
    total = f ** committee.n
    unnorm_den = total * (f - 1)
    norm_den = total * (f - factorial(committee.m - 1))
    swing_counts = tuple(int(s) for s in swings)
    return ExactPowerReport(
        committee=committee,
        swing_counts=swing_counts,
        unnormalized=tuple(Fraction(s, unnorm_den) for s in swing_counts),
        normalized=tuple(Fraction(s, norm_den) for s in swing_counts),
    )


_PBI_MAX_PLAYERS = 30
_PBI_LOW_BITS = 20


def _subset_sums(weights: list[int]) -> np.ndarray:
    sums = np.zeros(1, dtype=np.int64)
    for w in weights:
        sums = np.concatenate([sums, sums + w])
    return sums


def pbi_binary(weights) -> tuple[Fraction, ...]:
    """Penrose-Banzhaf index of the induced binary majority game.

    Player i is critical for S (not containing i) when w(S) < W/2 but
    w(S) + w_i >= W/2; the index counts critical coalitions over 2^(n-1).
    """
    ws = [int(w) for w in weights]
    n = len(ws)
    if n < 1:
        raise ValidationError("need at least one player")
    if any(w < 0 for w in ws):
        raise ValidationError("weights must be nonnegative integers")
    if n > _PBI_MAX_PLAYERS:
        raise ValidationError(
            f"subset enumeration supports at most {_PBI_MAX_PLAYERS} players, got {n}"
        )
    total = sum(ws)
    denom = 1 << (n - 1)
    out = []
    for i, w_i in enumerate(ws):
        others = ws[:i] + ws[i + 1:]
        low = _subset_sums(others[:_PBI_LOW_BITS])
        high = others[_PBI_LOW_BITS:]
        critical = 0
        for mask in range(1 << len(high)):
            base = sum(w for b, w in enumerate(high) if mask >> b & 1)
            sums = low + base
            critical += int(np.count_nonzero(
                (2 * sums < total) & (2 * (sums + w_i) >= total)))
        out.append(Fraction(critical, denom))
    return tuple(out)


def verify_pbi_coincidence(weights, rule: str) -> bool:
    """Check that the two-alternative influence index equals the binary PBI.

    Every rule in scope reduces to weighted majority with ties to the first
    alternative when m=2, so both sides must agree exactly.
    """
    committee = Committee(2, tuple(weights), rule)
    report = influence_exact(committee)
    return report.normalized == pbi_binary(weights)
