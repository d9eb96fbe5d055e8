"""Independent brute-force oracles used to pin expected values.

These deliberately avoid the kernel code paths: they walk profiles one at a
time through the single-profile rule implementations, so kernel results can
be checked against them.
"""

from itertools import combinations
from math import factorial

from committee_power.core import Committee, Profile, Ranking, winner


def naive_swing_counts(committee: Committee) -> tuple[int, ...]:
    """Double loop over every profile and every replacement ranking."""
    m, n = committee.m, committee.n
    f = factorial(m)
    counts = [0] * n
    for code in range(f ** n):
        profile = Profile.from_code(code, m, n)
        base = winner(committee, profile)
        for i in range(n):
            current = profile.rankings[i].code
            for alt in range(f):
                if alt == current:
                    continue
                moved = winner(committee, profile.replace(i, Ranking.from_code(alt, m)))
                if moved != base:
                    counts[i] += 1
    return tuple(counts)


def subset_critical_counts(weights) -> tuple[int, ...]:
    """Critical-coalition counts by explicit subset listing."""
    n = len(weights)
    total = sum(weights)
    counts = [0] * n
    for i in range(n):
        others = [j for j in range(n) if j != i]
        for size in range(n):
            for combo in combinations(others, size):
                s = sum(weights[j] for j in combo)
                if 2 * s < total <= 2 * (s + weights[i]):
                    counts[i] += 1
    return tuple(counts)
