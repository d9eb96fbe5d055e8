"""Seeded Monte Carlo estimation of influence for large committees.

Each iteration draws a full profile uniformly (independent uniform rankings
per player), evaluates the base winner once, then for every player draws one
uniform replacement ranking distinct from the current one and records
whether the winner changes.  The per-player hit rate is an unbiased
estimate of the unnormalized influence.

Sampling is split into fixed-size chunks; chunk k draws from a Philox
stream spawned from (seed, k), and chunk counters merge by integer
addition.  Reports are therefore identical for any worker count.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from statistics import NormalDist
from typing import NamedTuple

import numpy as np

from . import backend
from .core import Committee
from .errors import ValidationError
from .exact import normalization_factor

#: Pinned generator and chunking; results depend on these, not on workers.
GENERATOR = "philox"
CHUNK_SAMPLES = 1 << 15


def z_value(confidence: float) -> float:
    """Two-sided normal critical value, e.g. 1.959964 at 95%."""
    return NormalDist().inv_cdf((1.0 + confidence) / 2.0)


@dataclass(frozen=True)
class McConfig:
    samples: int
    seed: int = 0
    confidence: float = 0.95
    workers: int = 1

    def __post_init__(self):
        if self.samples < 1:
            raise ValidationError("samples must be a positive integer")
        if not 0 <= self.seed < 2 ** 64:
            raise ValidationError("seed must fit in 64 bits")
        if not 0.0 < self.confidence < 1.0:
            raise ValidationError("confidence must lie strictly between 0 and 1")
        if self.workers < 1:
            raise ValidationError("workers must be a positive integer")


@dataclass(frozen=True)
class McPowerReport:
    """Per-player hit counts with normal-approximation confidence intervals.

    Normalized estimates are reported unclamped: a value above 1 signals
    insufficient samples and raises the player's ``overshoot_flags`` entry.
    """

    committee: Committee
    samples: int
    seed: int
    confidence: float
    generator: str
    hit_counts: tuple[int, ...]

    @property
    def unnormalized_estimates(self) -> tuple[float, ...]:
        return tuple(h / self.samples for h in self.hit_counts)

    @property
    def normalized_estimates(self) -> tuple[float, ...]:
        factor = 1 / normalization_factor(self.committee.m)
        return tuple(float(Fraction(h, self.samples) * factor)
                     for h in self.hit_counts)

    @property
    def ci_half_widths(self) -> tuple[float, ...]:
        z = z_value(self.confidence)
        factor = float(1 / normalization_factor(self.committee.m))
        out = []
        for h in self.hit_counts:
            p = h / self.samples
            out.append(z * math.sqrt(p * (1.0 - p) / self.samples) * factor)
        return tuple(out)

    @property
    def overshoot_flags(self) -> tuple[bool, ...]:
        return tuple(est > 1.0 for est in self.normalized_estimates)


def _chunk_hits(kern, committee: Committee, weights: np.ndarray,
                seed: int, chunk_index: int, count: int) -> np.ndarray:
    f = math.factorial(committee.m)
    seq = np.random.SeedSequence(entropy=seed, spawn_key=(chunk_index,))
    rng = np.random.Generator(np.random.Philox(seq))
    codes = rng.integers(0, f, size=(count, committee.n), dtype=np.int64)
    perts = rng.integers(0, f - 1, size=(count, committee.n), dtype=np.int64)
    return kern.mc_chunk_hits(committee.m, weights, committee.rule_id,
                              codes, perts)


def influence_mc(committee: Committee, config: McConfig) -> McPowerReport:
    """Estimate per-player influence from `config.samples` random profiles."""
    kern = backend.get_kernels()
    weights = np.asarray(committee.weights, dtype=np.int64)
    n_chunks = (config.samples + CHUNK_SAMPLES - 1) // CHUNK_SAMPLES

    def run(chunk_index: int) -> np.ndarray:
        count = min(CHUNK_SAMPLES,
                    config.samples - chunk_index * CHUNK_SAMPLES)
        return _chunk_hits(kern, committee, weights, config.seed,
                           chunk_index, count)

    hits = np.zeros(committee.n, dtype=np.int64)
    if config.workers <= 1 or n_chunks == 1:
        for k in range(n_chunks):
            hits += run(k)
    else:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            for chunk in pool.map(run, range(n_chunks)):
                hits += chunk
    return McPowerReport(
        committee=committee,
        samples=config.samples,
        seed=config.seed,
        confidence=config.confidence,
        generator=GENERATOR,
        hit_counts=tuple(int(h) for h in hits),
    )


class SignificanceTest(NamedTuple):
    significant: bool
    z_score: float


def difference_significant(report_a: McPowerReport, report_b: McPowerReport,
                           player: int,
                           confidence: float | None = None) -> SignificanceTest:
    """Two-proportion z-test on a player's hit rates from two independent runs."""
    if report_a.committee.m != report_b.committee.m:
        raise ValidationError(
            "reports compare committees with different numbers of alternatives"
        )
    if not (0 <= player < report_a.committee.n
            and player < report_b.committee.n):
        raise ValidationError(f"player index {player} out of range")
    if confidence is None:
        confidence = report_a.confidence
    h1, s1 = report_a.hit_counts[player], report_a.samples
    h2, s2 = report_b.hit_counts[player], report_b.samples
    p1, p2 = h1 / s1, h2 / s2
    pooled = (h1 + h2) / (s1 + s2)
    variance = pooled * (1.0 - pooled) * (1.0 / s1 + 1.0 / s2)
    if p1 == p2 or variance == 0.0:
        return SignificanceTest(False, 0.0)
    z = (p1 - p2) / math.sqrt(variance)
    return SignificanceTest(abs(z) >= z_value(confidence), z)
