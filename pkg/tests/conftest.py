import time

import numpy as np
import pytest

import committee_power as cp
from committee_power import backend, imf


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Trigger kernel compilation once so timed tests measure compute only."""
    kern = backend.get_kernels()
    w = np.array([2, 1], dtype=np.int64)
    for rule in cp.RULES:
        rule_id = cp.RULES.index(rule)
        table = kern.eval_winners(2, 2, w, rule_id, 0, 4)
        kern.count_swings(table, 2, 2)
        codes = np.zeros((4, 2), dtype=np.int64)
        perts = np.zeros((4, 2), dtype=np.int64)
        kern.mc_chunk_hits(2, w, rule_id, codes, perts)


@pytest.fixture(scope="session")
def grid60():
    """Full five-rule scan of the D=60 simplex, with its wall time."""
    t0 = time.perf_counter()
    grid = cp.scan_simplex(60)
    return grid, time.perf_counter() - t0


@pytest.fixture(scope="session")
def imf_reports():
    """One million samples per (rule, era) at seed 0, with per-run times."""
    reports = {}
    times = {}
    for rule in ("plurality", "plurality-runoff", "copeland"):
        for era in ("pre", "post"):
            committee = imf.board_committee(rule, era)
            t0 = time.perf_counter()
            reports[(rule, era)] = cp.influence_mc(
                committee, cp.McConfig(samples=10 ** 6, seed=0))
            times[(rule, era)] = time.perf_counter() - t0
    return reports, times
