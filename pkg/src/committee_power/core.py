"""Committee domain model and the five weighted voting rules.

A committee couples a set of alternatives with nonnegative integer player
weights and one of five anonymous rules: plurality, plurality runoff, Borda,
Copeland, Schulze.  A player of weight w counts like w identical ballots,
but tallies are weighted directly; ballot copies are never materialized.

All tallies are exact integers and every argmax breaks ties in favor of the
smallest alternative index: final winner selection, runoff top-two seeding,
the runoff pairwise tie, Copeland score ties, and the Schulze winner set.

This module holds the readable single-profile implementations.  Bulk
enumeration and sampling go through the kernel backends (see ``backend``),
which must agree with these functions exactly.
"""

from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, NamedTuple

import numpy as np

from .errors import EnumerationCapError, ValidationError
from .tables import MAX_ALTERNATIVES, decode_ranking, encode_ranking

DEFAULT_LABELS = "abcde"

PLURALITY = "plurality"
PLURALITY_RUNOFF = "plurality-runoff"
BORDA = "borda"
COPELAND = "copeland"
SCHULZE = "schulze"

#: Canonical rule order used everywhere (tables, maps, CSV output).
RULES = (PLURALITY, PLURALITY_RUNOFF, BORDA, COPELAND, SCHULZE)
RULE_IDS = {name: i for i, name in enumerate(RULES)}

#: Cap on total weight; keeps every tally product inside int64.
MAX_TOTAL_WEIGHT = 1 << 40

#: Default cap on (m!)^n for exhaustive enumeration.
DEFAULT_ENUM_CAP = 10 ** 8


class Alternative(NamedTuple):
    index: int
    label: str


@dataclass(frozen=True)
class Ranking:
    """Strict preference order over alternatives, most preferred first."""

    order: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(int(a) for a in self.order))
        if sorted(self.order) != list(range(len(self.order))):
            raise ValidationError(
                f"ranking order {self.order} is not a permutation of 0..{len(self.order) - 1}"
            )

    @property
    def m(self) -> int:
        return len(self.order)

    @property
    def code(self) -> int:
        """Factorial-base rank in [0, m!); bijective with the order."""
        return encode_ranking(self.order)

    @property
    def top(self) -> int:
        return self.order[0]

    @classmethod
    def from_code(cls, code: int, m: int) -> "Ranking":
        return cls(decode_ranking(code, m))

    def to_string(self, labels: Iterable[str] = DEFAULT_LABELS) -> str:
        labels = tuple(labels)
        return "".join(labels[a] for a in self.order)


def ranking_from_string(s: str, m: int, labels: Iterable[str] | None = None) -> Ranking:
    """Parse a ranking like ``"bca"``, best first, against single-char labels."""
    labels = tuple(labels) if labels is not None else tuple(DEFAULT_LABELS[:m])
    index = {lab: i for i, lab in enumerate(labels)}
    seen: set[str] = set()
    order = []
    for ch in s:
        if ch not in index:
            raise ValidationError(f"unknown label {ch!r} in ranking {s!r}")
        if ch in seen:
            raise ValidationError(f"duplicate label {ch!r} in ranking {s!r}")
        seen.add(ch)
        order.append(index[ch])
    if len(order) != m:
        missing = "".join(lab for lab in labels if lab not in seen)
        raise ValidationError(
            f"ranking {s!r} must list all {m} labels exactly once; missing {missing!r}"
        )
    return Ranking(tuple(order))


@dataclass(frozen=True)
class Profile:
    """One ranking per player."""

    rankings: tuple[Ranking, ...]

    def __post_init__(self):
        object.__setattr__(self, "rankings", tuple(self.rankings))
        if not self.rankings:
            raise ValidationError("profile needs at least one ranking")
        if len({r.m for r in self.rankings}) != 1:
            raise ValidationError("profile rankings must share one alternative set")

    @property
    def n(self) -> int:
        return len(self.rankings)

    @property
    def m(self) -> int:
        return self.rankings[0].m

    @property
    def code(self) -> int:
        """Mixed-radix code over [0, (m!)^n); player 0 is the least significant digit."""
        f = factorial(self.m)
        code = 0
        for r in reversed(self.rankings):
            code = code * f + r.code
        return code

    @classmethod
    def from_code(cls, code: int, m: int, n: int) -> "Profile":
        f = factorial(m)
        if not 0 <= code < f ** n:
            raise ValidationError(f"profile code {code} out of range for m={m}, n={n}")
        rankings = []
        for _ in range(n):
            code, digit = divmod(code, f)
            rankings.append(Ranking.from_code(digit, m))
        return cls(tuple(rankings))

    @classmethod
    def from_strings(cls, strings: Iterable[str], m: int,
                     labels: Iterable[str] | None = None) -> "Profile":
        return cls(tuple(ranking_from_string(s, m, labels) for s in strings))

    def replace(self, player: int, ranking: Ranking) -> "Profile":
        rankings = list(self.rankings)
        rankings[player] = ranking
        return Profile(tuple(rankings))


@dataclass(frozen=True)
class Committee:
    """Weighted committee: m alternatives, integer player weights, a rule name.

    Weights may be zero (null participants); the total weight must be at
    least 1 and at most 2**40 so weighted tallies stay inside 64-bit
    integers.  Labels default to "a".."e" and must be unique single
    characters (ranking strings are parsed character by character).
    """

    m: int
    weights: tuple[int, ...]
    rule: str
    labels: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not 2 <= self.m <= MAX_ALTERNATIVES:
            raise ValidationError(
                f"committees support 2..{MAX_ALTERNATIVES} alternatives, got {self.m}"
            )
        if not self.labels:
            object.__setattr__(self, "labels", tuple(DEFAULT_LABELS[: self.m]))
        else:
            object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        if len(self.labels) != self.m:
            raise ValidationError(
                f"expected {self.m} labels, got {len(self.labels)}"
            )
        if len(set(self.labels)) != self.m or any(len(x) != 1 for x in self.labels):
            raise ValidationError("labels must be unique single characters")
        weights = tuple(int(w) for w in self.weights)
        object.__setattr__(self, "weights", weights)
        if not weights:
            raise ValidationError("committee needs at least one player")
        if any(w < 0 for w in weights):
            raise ValidationError("weights must be nonnegative integers")
        total = sum(weights)
        if total < 1:
            raise ValidationError("total weight must be at least 1")
        if total > MAX_TOTAL_WEIGHT:
            raise ValidationError(f"total weight exceeds the cap 2**40 ({total})")
        if self.rule not in RULE_IDS:
            raise ValidationError(
                f"unknown rule {self.rule!r}; valid rules: {', '.join(RULES)}"
            )

    @property
    def n(self) -> int:
        return len(self.weights)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    @property
    def rule_id(self) -> int:
        return RULE_IDS[self.rule]

    @property
    def alternatives(self) -> tuple[Alternative, ...]:
        return tuple(Alternative(i, lab) for i, lab in enumerate(self.labels))

    def label(self, index: int) -> str:
        return self.labels[index]

    def with_rule(self, rule: str) -> "Committee":
        return Committee(self.m, self.weights, rule, self.labels)

    def with_weights(self, weights: Iterable[int]) -> "Committee":
        return Committee(self.m, tuple(weights), self.rule, self.labels)

    def parse_profile(self, strings: Iterable[str]) -> Profile:
        strings = tuple(strings)
        if len(strings) != self.n:
            raise ValidationError(
                f"profile has {len(strings)} rankings but the committee has {self.n} players"
            )
        return Profile.from_strings(strings, self.m, self.labels)


def weighted_ballot_counts(committee: Committee, profile: Profile) -> dict[int, int]:
    """Anonymous ballot multiset as {ranking code: total weight}.

    Conceptually each player casts w_i copies of their ranking; the multiset
    is represented by weight totals, never by materialized copies.
    """
    _check_pair(committee, profile)
    counts: dict[int, int] = {}
    for w, r in zip(committee.weights, profile.rankings):
        if w == 0:
            continue
        code = r.code
        counts[code] = counts.get(code, 0) + w
    return counts


def _check_pair(committee: Committee, profile: Profile) -> None:
    if profile.n != committee.n:
        raise ValidationError(
            f"profile has {profile.n} rankings, committee has {committee.n} players"
        )
    if profile.m != committee.m:
        raise ValidationError(
            f"profile ranks {profile.m} alternatives, committee has {committee.m}"
        )


def _argmax_lex(values) -> int:
    """Index of the maximum; ties go to the smallest index."""
    best = 0
    for i in range(1, len(values)):
        if values[i] > values[best]:
            best = i
    return best


def plurality_scores(committee: Committee, profile: Profile) -> list[int]:
    _check_pair(committee, profile)
    scores = [0] * committee.m
    for w, r in zip(committee.weights, profile.rankings):
        scores[r.top] += w
    return scores


def plurality_winner(committee: Committee, profile: Profile) -> int:
    return _argmax_lex(plurality_scores(committee, profile))


def plurality_runoff_winner(committee: Committee, profile: Profile) -> int:
    """Two-stage rule: a strict first-stage majority wins outright, otherwise
    the two best plurality scorers meet in a weighted pairwise vote.

    The first-stage test is strict (score > total/2): a score of exactly
    half the weight goes to the runoff.  Top-two seeding and the runoff
    itself break ties by smallest index.
    """
    scores = plurality_scores(committee, profile)
    first = _argmax_lex(scores)
    if 2 * scores[first] > committee.total_weight:
        return first
    second = -1
    for a in range(committee.m):
        if a != first and (second == -1 or scores[a] > scores[second]):
            second = a
    v_first = 0
    for w, r in zip(committee.weights, profile.rankings):
        if r.order.index(first) < r.order.index(second):
            v_first += w
    v_second = committee.total_weight - v_first
    if v_first > v_second:
        return first
    if v_second > v_first:
        return second
    return min(first, second)


def borda_scores(committee: Committee, profile: Profile) -> list[int]:
    _check_pair(committee, profile)
    m = committee.m
    scores = [0] * m
    for w, r in zip(committee.weights, profile.rankings):
        for pos, a in enumerate(r.order):
            scores[a] += w * (m - 1 - pos)
    return scores


def borda_winner(committee: Committee, profile: Profile) -> int:
    return _argmax_lex(borda_scores(committee, profile))


def pairwise_tally(committee: Committee, profile: Profile) -> list[list[int]]:
    """Weighted pairwise matrix d with d[x][y] = weight ranking x above y.

    For x != y, d[x][y] + d[y][x] equals the total weight (strict rankings
    split all weight); the diagonal is zero.
    """
    _check_pair(committee, profile)
    m = committee.m
    d = [[0] * m for _ in range(m)]
    for w, r in zip(committee.weights, profile.rankings):
        order = r.order
        for i in range(m):
            for j in range(i + 1, m):
                d[order[i]][order[j]] += w
    return d


def copeland_scores(committee: Committee, profile: Profile) -> list[int]:
    d = pairwise_tally(committee, profile)
    m = committee.m
    return [sum(1 for y in range(m) if x != y and d[x][y] > d[y][x]) for x in range(m)]


def copeland_winner(committee: Committee, profile: Profile) -> int:
    return _argmax_lex(copeland_scores(committee, profile))


def schulze_strengths(d: list[list[int]]) -> list[list[int]]:
    """Widest-path strengths over the positive-margin graph.

    Link strength is the pairwise margin d[x][y] - d[y][x] when positive
    (no link otherwise); p[x][y] is the maximum over directed paths x -> y
    of the weakest link, 0 when no all-positive path exists.
    """
    m = len(d)
    p = [[max(d[x][y] - d[y][x], 0) if x != y else 0 for y in range(m)]
         for x in range(m)]
    for k in range(m):
        for x in range(m):
            if x == k:
                continue
            pxk = p[x][k]
            for y in range(m):
                if y == x or y == k:
                    continue
                s = pxk if pxk < p[k][y] else p[k][y]
                if s > p[x][y]:
                    p[x][y] = s
    return p


def schulze_winner(committee: Committee, profile: Profile) -> int:
    p = schulze_strengths(pairwise_tally(committee, profile))
    m = committee.m
    for x in range(m):
        if all(p[x][y] >= p[y][x] for y in range(m) if y != x):
            return x
    raise AssertionError("Schulze winner set is provably nonempty")


_WINNER_FUNCS = {
    PLURALITY: plurality_winner,
    PLURALITY_RUNOFF: plurality_runoff_winner,
    BORDA: borda_winner,
    COPELAND: copeland_winner,
    SCHULZE: schulze_winner,
}


def winner(committee: Committee, profile: Profile) -> int:
    """Winning alternative index under the committee's rule."""
    return _WINNER_FUNCS[committee.rule](committee, profile)


def winner_label(committee: Committee, profile: Profile) -> str:
    return committee.label(winner(committee, profile))


def committees_equivalent(c1: Committee, c2: Committee, *,
                          cap: int = DEFAULT_ENUM_CAP) -> bool:
    """True iff both committees pick the same winner on every profile."""
    if c1.m != c2.m or c1.n != c2.n:
        raise ValidationError("equivalence needs matching m and n")
    total = factorial(c1.m) ** c1.n
    if total > cap:
        raise EnumerationCapError(
            f"enumeration too large: {total} profiles exceed the cap {cap}"
        )
    from . import backend

    kern = backend.get_kernels()
    w1 = np.asarray(c1.weights, dtype=np.int64)
    w2 = np.asarray(c2.weights, dtype=np.int64)
    t1 = kern.eval_winners(c1.m, c1.n, w1, c1.rule_id, 0, total)
    t2 = kern.eval_winners(c2.m, c2.n, w2, c2.rule_id, 0, total)
    return bool(np.array_equal(t1, t2))
