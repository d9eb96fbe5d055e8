"""Numba-jitted kernels: the default backend for the hot loops.

Same contract as ``_kernels_numpy``; the jitted loops release the GIL so
chunked drivers can thread them.  Compiled artifacts are disk-cached.
"""

from math import factorial

import numpy as np
from numba import njit

from .core import RULE_IDS, BORDA, COPELAND, PLURALITY, PLURALITY_RUNOFF, SCHULZE
from .tables import tables_for

NAME = "numba"

_R_PLURALITY = RULE_IDS[PLURALITY]
_R_RUNOFF = RULE_IDS[PLURALITY_RUNOFF]
_R_BORDA = RULE_IDS[BORDA]
_R_COPELAND = RULE_IDS[COPELAND]
_R_SCHULZE = RULE_IDS[SCHULZE]


@njit(cache=True, nogil=True)
def _fill_structs(m, weights, rule_id, digits, top, borda_pts, above,
                  scores, pairwise):
    n = digits.shape[0]
    if rule_id == _R_PLURALITY or rule_id == _R_RUNOFF:
        for a in range(m):
            scores[a] = 0
        for i in range(n):
            scores[top[digits[i]]] += weights[i]
    elif rule_id == _R_BORDA:
        for a in range(m):
            scores[a] = 0
        for i in range(n):
            d = digits[i]
            w = weights[i]
            for a in range(m):
                scores[a] += w * borda_pts[d, a]
    if rule_id == _R_RUNOFF or rule_id == _R_COPELAND or rule_id == _R_SCHULZE:
        for x in range(m):
            for y in range(m):
                pairwise[x, y] = 0
        for i in range(n):
            d = digits[i]
            w = weights[i]
            if w == 0:
                continue
            for x in range(m):
                for y in range(m):
                    pairwise[x, y] += w * above[d, x, y]


@njit(cache=True, nogil=True)
def _winner_from_structs(m, total_weight, rule_id, scores, pairwise, paths):
    if rule_id == _R_PLURALITY or rule_id == _R_BORDA:
        best = 0
        for a in range(1, m):
            if scores[a] > scores[best]:
                best = a
        return best
    if rule_id == _R_RUNOFF:
        first = 0
        for a in range(1, m):
            if scores[a] > scores[first]:
                first = a
        if 2 * scores[first] > total_weight:
            return first
        second = -1
        for a in range(m):
            if a != first and (second == -1 or scores[a] > scores[second]):
                second = a
        v_first = pairwise[first, second]
        v_second = pairwise[second, first]
        if v_first > v_second:
            return first
        if v_second > v_first:
            return second
        return first if first < second else second
    if rule_id == _R_COPELAND:
        best = 0
        best_score = -1
        for x in range(m):
            sc = 0
            for y in range(m):
                if x != y and pairwise[x, y] > pairwise[y, x]:
                    sc += 1
            if sc > best_score:
                best = x
                best_score = sc
        return best
    # Schulze: widest paths over positive margins, then the winner set.
    for x in range(m):
        for y in range(m):
            margin = pairwise[x, y] - pairwise[y, x]
            paths[x, y] = margin if margin > 0 else 0
        paths[x, x] = 0
    for k in range(m):
        for x in range(m):
            if x == k:
                continue
            pxk = paths[x, k]
            for y in range(m):
                if y == x or y == k:
                    continue
                s = pxk if pxk < paths[k, y] else paths[k, y]
                if s > paths[x, y]:
                    paths[x, y] = s
    for x in range(m):
        ok = True
        for y in range(m):
            if y != x and paths[x, y] < paths[y, x]:
                ok = False
                break
        if ok:
            return x
    return 0


@njit(cache=True, nogil=True)
def _eval_range(m, n, f, total_weight, weights, rule_id, start, stop,
                top, borda_pts, above, out):
    digits = np.empty(n, dtype=np.int64)
    scores = np.empty(m, dtype=np.int64)
    pairwise = np.empty((m, m), dtype=np.int64)
    paths = np.empty((m, m), dtype=np.int64)
    for idx in range(stop - start):
        code = start + idx
        for i in range(n):
            digits[i] = code % f
            code //= f
        _fill_structs(m, weights, rule_id, digits, top, borda_pts, above,
                      scores, pairwise)
        out[idx] = _winner_from_structs(m, total_weight, rule_id, scores,
                                        pairwise, paths)


@njit(cache=True, nogil=True)
def _count_swings(winners, m, n, f, out):
    counts = np.empty(m, dtype=np.int64)
    for i in range(n):
        stride = f ** i
        high = f ** (n - 1 - i)
        total = np.int64(0)
        for hi in range(high):
            base_hi = hi * f * stride
            for lo in range(stride):
                base = base_hi + lo
                for a in range(m):
                    counts[a] = 0
                for t in range(f):
                    counts[winners[base + t * stride]] += 1
                sq = np.int64(0)
                for a in range(m):
                    sq += counts[a] * counts[a]
                total += f * f - sq
        out[i] = total


@njit(cache=True, nogil=True)
def _mc_chunk(m, f, total_weight, weights, rule_id, codes, perts,
              top, borda_pts, above, hits):
    samples, n = codes.shape
    digits = np.empty(n, dtype=np.int64)
    scores = np.empty(m, dtype=np.int64)
    pairwise = np.empty((m, m), dtype=np.int64)
    paths = np.empty((m, m), dtype=np.int64)
    use_scores = rule_id == _R_PLURALITY or rule_id == _R_RUNOFF or rule_id == _R_BORDA
    use_pairwise = rule_id == _R_RUNOFF or rule_id == _R_COPELAND or rule_id == _R_SCHULZE
    for s in range(samples):
        for i in range(n):
            digits[i] = codes[s, i]
        _fill_structs(m, weights, rule_id, digits, top, borda_pts, above,
                      scores, pairwise)
        base = _winner_from_structs(m, total_weight, rule_id, scores,
                                    pairwise, paths)
        for i in range(n):
            old = digits[i]
            draw = perts[s, i]
            new = draw + 1 if draw >= old else draw
            w = weights[i]
            if use_scores:
                if rule_id == _R_BORDA:
                    for a in range(m):
                        scores[a] += w * (borda_pts[new, a] - borda_pts[old, a])
                else:
                    scores[top[old]] -= w
                    scores[top[new]] += w
            if use_pairwise:
                for x in range(m):
                    for y in range(m):
                        pairwise[x, y] += w * (above[new, x, y] - above[old, x, y])
            moved = _winner_from_structs(m, total_weight, rule_id, scores,
                                         pairwise, paths)
            if moved != base:
                hits[i] += 1
            # revert to the base profile before the next player
            if use_scores:
                if rule_id == _R_BORDA:
                    for a in range(m):
                        scores[a] -= w * (borda_pts[new, a] - borda_pts[old, a])
                else:
                    scores[top[new]] -= w
                    scores[top[old]] += w
            if use_pairwise:
                for x in range(m):
                    for y in range(m):
                        pairwise[x, y] -= w * (above[new, x, y] - above[old, x, y])


def eval_winners(m, n, weights, rule_id, start, stop):
    """Winners for the profile codes [start, stop), as int8."""
    t = tables_for(m)
    out = np.empty(stop - start, dtype=np.int8)
    _eval_range(m, n, factorial(m), int(weights.sum()), weights, rule_id,
                start, stop, t.top, t.borda_points, t.above, out)
    return out


def count_swings(winners, m, n):
    """Ordered-pair swing counts per player from a full outcome table."""
    out = np.empty(n, dtype=np.int64)
    _count_swings(winners, m, n, factorial(m), out)
    return out


def mc_chunk_hits(m, weights, rule_id, codes, perts):
    """Swing hits per player for one chunk of sampled profiles."""
    t = tables_for(m)
    hits = np.zeros(codes.shape[1], dtype=np.int64)
    _mc_chunk(m, factorial(m), int(weights.sum()), weights, rule_id,
              codes, perts, t.top, t.borda_points, t.above, hits)
    return hits
