"""Pure-numpy kernels: the fallback backend.

Vectorized over profiles in bounded chunks.  Every function must return
values identical to the numba backend; all arithmetic is exact int64.
"""

from math import factorial

import numpy as np

from .core import RULE_IDS, BORDA, COPELAND, PLURALITY, PLURALITY_RUNOFF, SCHULZE
from .tables import tables_for

NAME = "numpy"

_R_PLURALITY = RULE_IDS[PLURALITY]
_R_RUNOFF = RULE_IDS[PLURALITY_RUNOFF]
_R_BORDA = RULE_IDS[BORDA]
_R_COPELAND = RULE_IDS[COPELAND]
_R_SCHULZE = RULE_IDS[SCHULZE]

_EVAL_CHUNK = 1 << 15
_SLICE_BLOCK = 1 << 21


def _needs_scores(rule_id: int) -> bool:
    return rule_id in (_R_PLURALITY, _R_RUNOFF, _R_BORDA)


def _needs_pairwise(rule_id: int) -> bool:
    return rule_id in (_R_RUNOFF, _R_COPELAND, _R_SCHULZE)


def _base_structs(m, weights, rule_id, digit_cols):
    """Per-profile score rows and/or pairwise matrices for a batch."""
    t = tables_for(m)
    count = digit_cols[0].shape[0]
    scores = None
    pairwise = None
    if _needs_scores(rule_id):
        tbl = t.borda_points if rule_id == _R_BORDA else t.top_points
        scores = np.zeros((count, m), dtype=np.int64)
        for i, col in enumerate(digit_cols):
            if weights[i]:
                scores += weights[i] * tbl[col]
    if _needs_pairwise(rule_id):
        pairwise = np.zeros((count, m, m), dtype=np.int64)
        for i, col in enumerate(digit_cols):
            if weights[i]:
                pairwise += weights[i] * t.above[col]
    return scores, pairwise


def _winners_from_structs(m, total_weight, rule_id, scores, pairwise):
    if rule_id in (_R_PLURALITY, _R_BORDA):
        return np.argmax(scores, axis=1).astype(np.int8)
    if rule_id == _R_RUNOFF:
        rows = np.arange(scores.shape[0])
        first = np.argmax(scores, axis=1)
        majority = 2 * scores[rows, first] > total_weight
        masked = scores.copy()
        masked[rows, first] = -1
        second = np.argmax(masked, axis=1)
        v_first = pairwise[rows, first, second]
        v_second = pairwise[rows, second, first]
        pair = np.where(
            v_first > v_second, first,
            np.where(v_second > v_first, second, np.minimum(first, second)),
        )
        return np.where(majority, first, pair).astype(np.int8)
    if rule_id == _R_COPELAND:
        beats = (pairwise > pairwise.transpose(0, 2, 1)).sum(axis=2)
        return np.argmax(beats, axis=1).astype(np.int8)
    # Schulze: widest paths over positive margins, then the winner set.
    p = pairwise - pairwise.transpose(0, 2, 1)
    np.maximum(p, 0, out=p)
    for k in range(m):
        via = np.minimum(p[:, :, k][:, :, None], p[:, k, :][:, None, :])
        np.maximum(p, via, out=p)
    ge_all = (p >= p.transpose(0, 2, 1)).all(axis=2)
    return np.argmax(ge_all, axis=1).astype(np.int8)


def eval_winners(m, n, weights, rule_id, start, stop):
    """Winners for the profile codes [start, stop), as int8."""
    f = factorial(m)
    total_weight = int(weights.sum())
    out = np.empty(stop - start, dtype=np.int8)
    for lo in range(start, stop, _EVAL_CHUNK):
        hi = min(stop, lo + _EVAL_CHUNK)
        codes = np.arange(lo, hi, dtype=np.int64)
        digit_cols = [(codes // f ** i) % f for i in range(n)]
        scores, pairwise = _base_structs(m, weights, rule_id, digit_cols)
        out[lo - start:hi - start] = _winners_from_structs(
            m, total_weight, rule_id, scores, pairwise)
    return out


def count_swings(winners, m, n):
    """Ordered-pair swing counts per player from a full outcome table.

    For player i and each fixed choice of the other digits, the winners
    along i's axis form a length-m! slice; with c_a occurrences of winner a
    the slice contributes (m!)^2 - sum_a c_a^2 ordered pairs (old, new)
    whose winners differ, which is exactly the double sum over old rankings
    and perturbed rankings.
    """
    f = factorial(m)
    out = np.empty(n, dtype=np.int64)
    for i in range(n):
        high = f ** (n - 1 - i)
        low = f ** i
        view = winners.reshape(high, f, low)
        sq = 0
        hi_block = max(1, _SLICE_BLOCK // (f * low))
        for h0 in range(0, high, hi_block):
            sub = view[h0:h0 + hi_block]
            lo_block = max(1, _SLICE_BLOCK // (f * sub.shape[0]))
            for l0 in range(0, low, lo_block):
                piece = sub[:, :, l0:l0 + lo_block]
                for a in range(m):
                    c = (piece == a).sum(axis=1, dtype=np.int64)
                    sq += int((c * c).sum())
        out[i] = high * low * f * f - sq
    return out


def mc_chunk_hits(m, weights, rule_id, codes, perts):
    """Swing hits per player for one chunk of sampled profiles.

    ``codes`` is (samples, n) base ranking codes; ``perts`` is (samples, n)
    draws in [0, m!-1) encoding a uniform replacement ranking distinct from
    the current one.  The base winner is computed once per sample; each
    player's perturbation reuses it via an incremental tally update.
    """
    t = tables_for(m)
    n = codes.shape[1]
    total_weight = int(weights.sum())
    digit_cols = [codes[:, i] for i in range(n)]
    scores, pairwise = _base_structs(m, weights, rule_id, digit_cols)
    base = _winners_from_structs(m, total_weight, rule_id, scores, pairwise)
    score_tbl = t.borda_points if rule_id == _R_BORDA else t.top_points
    hits = np.empty(n, dtype=np.int64)
    for i in range(n):
        old = codes[:, i]
        draw = perts[:, i]
        new = draw + (draw >= old)
        w = weights[i]
        new_scores = scores
        new_pairwise = pairwise
        if scores is not None:
            new_scores = scores + w * (score_tbl[new] - score_tbl[old])
        if pairwise is not None:
            new_pairwise = pairwise + w * (t.above[new] - t.above[old])
        moved = _winners_from_structs(m, total_weight, rule_id,
                                      new_scores, new_pairwise)
        hits[i] = int((moved != base).sum())
    return hits
