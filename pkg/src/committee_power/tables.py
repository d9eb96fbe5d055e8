"""Per-code lookup tables for rankings over small alternative sets.

Every strict ranking of m alternatives is identified by its factorial-base
rank (Lehmer code), so code 0 is the identity order and code m!-1 the
reversal.  Rule evaluation is table-driven: dense per-code arrays give the
top choice, positional points, and pairwise comparisons.  Tables are tiny
(m <= 5 means at most 120 rankings) and cached per m.
"""

from functools import lru_cache
from math import factorial
from typing import Sequence

import numpy as np

MAX_ALTERNATIVES = 5


def encode_ranking(order: Sequence[int]) -> int:
    """Factorial-base rank of a permutation; 0 for the identity order."""
    m = len(order)
    code = 0
    for k in range(m):
        smaller = 0
        for j in range(k + 1, m):
            if order[j] < order[k]:
                smaller += 1
        code = code * (m - k) + smaller
    return code


def decode_ranking(code: int, m: int) -> tuple[int, ...]:
    """Inverse of :func:`encode_ranking`; ``code`` must lie in [0, m!)."""
    if not 0 <= code < factorial(m):
        raise ValueError(f"ranking code {code} out of range for m={m}")
    remaining = list(range(m))
    out = []
    for k in range(m - 1, -1, -1):
        digit, code = divmod(code, factorial(k))
        out.append(remaining.pop(digit))
    return tuple(out)


class RankingTables:
    """Dense per-code tables for one alternative-set size.

    Attributes (``count`` = m! rows, one per ranking code):

    * ``perms``        -- (count, m) permutation orders, most preferred first
    * ``positions``    -- (count, m) position of each alternative (0 = top)
    * ``top``          -- (count,) most preferred alternative
    * ``top_points``   -- (count, m) one-hot row of ``top``
    * ``borda_points`` -- (count, m) points m-1-position
    * ``above``        -- (count, m, m) 0/1, [c, x, y] = 1 iff x ranked above y
    """

    __slots__ = ("m", "count", "perms", "positions", "top", "top_points",
                 "borda_points", "above")

    def __init__(self, m: int):
        self.m = m
        self.count = factorial(m)
        perms = np.empty((self.count, m), dtype=np.int64)
        for code in range(self.count):
            perms[code] = decode_ranking(code, m)
        positions = np.empty_like(perms)
        positions[np.arange(self.count)[:, None], perms] = np.arange(m)[None, :]
        self.perms = perms
        self.positions = positions
        self.top = perms[:, 0].copy()
        top_points = np.zeros((self.count, m), dtype=np.int64)
        top_points[np.arange(self.count), self.top] = 1
        self.top_points = top_points
        self.borda_points = (m - 1 - positions).astype(np.int64)
        self.above = (positions[:, :, None] < positions[:, None, :]).astype(np.int64)


@lru_cache(maxsize=None)
def tables_for(m: int) -> RankingTables:
    if not 2 <= m <= MAX_ALTERNATIVES:
        raise ValueError(f"tables support 2..{MAX_ALTERNATIVES} alternatives, got {m}")
    return RankingTables(m)
