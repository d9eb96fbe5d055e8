"""Influence scans over the three-player weight simplex.

All integer weight triples (w1, w2, w3) with w1+w2+w3 = D are evaluated
exactly for every rule; classifications (which rule gives a chosen player
more influence, which rules maximize it) are decided by exact rational
comparison, never by float epsilon, because equality regions are genuine
equality sets.

Scaling a weight vector never changes winners, so results are cached and
persisted under the gcd-reduced triple.
"""

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from pathlib import Path

from .core import RULES, Committee
from .errors import ValidationError
from .exact import influence_exact

WeightTriple = tuple[int, int, int]


class Comparison(Enum):
    A_GREATER = "A_GREATER"
    EQUAL = "EQUAL"
    B_GREATER = "B_GREATER"


def reduce_triple(point) -> WeightTriple:
    w1, w2, w3 = (int(x) for x in point)
    g = gcd(gcd(w1, w2), w3)
    if g == 0:
        raise ValidationError("weight triple must not be all zero")
    return (w1 // g, w2 // g, w3 // g)


def simplex_points(resolution: int) -> tuple[WeightTriple, ...]:
    """All (D+1)(D+2)/2 nonnegative integer triples summing to D."""
    if resolution < 1:
        raise ValidationError("resolution must be a positive integer")
    points = []
    for w1 in range(resolution + 1):
        for w2 in range(resolution + 1 - w1):
            points.append((w1, w2, resolution - w1 - w2))
    return tuple(points)


@dataclass(frozen=True, eq=False)
class SimplexGrid:
    """Exact per-rule influence vectors for every grid point."""

    resolution: int
    m: int
    rules: tuple[str, ...]
    points: tuple[WeightTriple, ...]
    values: dict  # reduced triple -> {rule: (Fraction, Fraction, Fraction)}

    def influence(self, point, rule: str) -> tuple[Fraction, ...]:
        return self.values[reduce_triple(point)][rule]


@dataclass(frozen=True, eq=False)
class PairwiseClassification:
    """Sign of I_player(ruleA) - I_player(ruleB) at every grid point."""

    resolution: int
    rule_a: str
    rule_b: str
    player: int
    points: tuple[WeightTriple, ...]
    classes: tuple[Comparison, ...]
    diffs: tuple[Fraction, ...]


@dataclass(frozen=True, eq=False)
class BestRuleMap:
    """Rules attaining the player's maximal influence at every grid point."""

    resolution: int
    player: int
    points: tuple[WeightTriple, ...]
    best: tuple[tuple[str, ...], ...]

    def distinct_sets(self) -> tuple[tuple[str, ...], ...]:
        seen = sorted(set(self.best), key=lambda s: (len(s), tuple(RULES.index(r) for r in s)))
        return tuple(seen)


def _compute_point(key: WeightTriple, m: int, rules, workers: int) -> dict:
    out = {}
    for rule in rules:
        report = influence_exact(Committee(m, key, rule), workers=workers)
        out[rule] = report.normalized
    return out


def load_grid_cache(path) -> dict:
    """Cache file: JSON mapping "w1,w2,w3" -> {rule: [[num, den], ...]}."""
    raw = json.loads(Path(path).read_text(encoding="utf-8"))
    values = {}
    for key, per_rule in raw.items():
        triple = tuple(int(x) for x in key.split(","))
        values[triple] = {
            rule: tuple(Fraction(num, den) for num, den in vec)
            for rule, vec in per_rule.items()
        }
    return values


def save_grid_cache(path, values: dict) -> None:
    raw = {}
    for triple in sorted(values):
        key = ",".join(str(x) for x in triple)
        raw[key] = {
            rule: [[v.numerator, v.denominator] for v in vec]
            for rule, vec in sorted(values[triple].items())
        }
    Path(path).write_text(json.dumps(raw, indent=0, sort_keys=True) + "\n",
                          encoding="utf-8")


def scan_simplex(resolution: int, *, m: int = 3, rules=RULES,
                 cache_path=None, workers: int = 1) -> SimplexGrid:
    """Exact influence for every triple on the resolution-D simplex.

    Points sharing a gcd-reduced triple share one computation; with
    `cache_path` the reduced-triple results persist across runs, so
    re-rendering does not recompute.
    """
    rules = tuple(rules)
    points = simplex_points(resolution)
    values: dict = {}
    if cache_path is not None and Path(cache_path).exists():
        values = load_grid_cache(cache_path)
    dirty = False
    for point in points:
        key = reduce_triple(point)
        have = values.get(key)
        if have is not None and all(rule in have for rule in rules):
            continue
        computed = _compute_point(key, m, rules, workers)
        if have is not None:
            computed = {**have, **computed}
        values[key] = computed
        dirty = True
    if cache_path is not None and dirty:
        save_grid_cache(cache_path, values)
    return SimplexGrid(resolution=resolution, m=m, rules=rules,
                       points=points, values=values)


def classify_pairwise(grid: SimplexGrid, rule_a: str, rule_b: str,
                      player: int) -> PairwiseClassification:
    """Exact sign classification of rule_a vs rule_b for one player."""
    classes = []
    diffs = []
    for point in grid.points:
        diff = grid.influence(point, rule_a)[player] - grid.influence(point, rule_b)[player]
        if diff > 0:
            classes.append(Comparison.A_GREATER)
        elif diff < 0:
            classes.append(Comparison.B_GREATER)
        else:
            classes.append(Comparison.EQUAL)
        diffs.append(diff)
    return PairwiseClassification(
        resolution=grid.resolution, rule_a=rule_a, rule_b=rule_b,
        player=player, points=grid.points,
        classes=tuple(classes), diffs=tuple(diffs),
    )


def best_rule_map(grid: SimplexGrid, player: int) -> BestRuleMap:
    """Per point, the set of rules attaining the exact maximum influence."""
    best = []
    for point in grid.points:
        vals = {rule: grid.influence(point, rule)[player] for rule in grid.rules}
        top = max(vals.values())
        best.append(tuple(rule for rule in grid.rules if vals[rule] == top))
    return BestRuleMap(resolution=grid.resolution, player=player,
                       points=grid.points, best=tuple(best))
