"""Paired significance testing and summary statistics.

The Wilcoxon signed-rank test here reproduces the reference evaluation's
printed p-values: zero differences are dropped; when none were present the
two-sided p comes from exact enumeration of all 2^n sign assignments over
the midranked |differences| (feasible for the n <= 25 used here), and when
zeros were dropped it falls back to the tie-corrected normal approximation
without continuity correction. Both routes are also available explicitly.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

EXACT_LIMIT = 25


@dataclass(frozen=True)
class WilcoxonResult:
    statistic: float        # W+, the sum of ranks of positive differences
    p_value: float
    method: str             # "exact", "approx", or "degenerate"
    n_effective: int        # pairs left after dropping zero differences
    zero_count: int
    degenerate: bool = False


def _midranks(values: np.ndarray) -> np.ndarray:
    order = np.argsort(values, kind="stable")
    ranks = np.empty(len(values))
    sorted_vals = values[order]
    i = 0
    while i < len(values):
        j = i
        while j + 1 < len(values) and sorted_vals[j + 1] == sorted_vals[i]:
            j += 1
        ranks[order[i:j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    return ranks


def _exact_p(ranks: np.ndarray, w_plus: float) -> float:
    # Subset-sum distribution of W+ under random signs. Midranks are
    # half-integers, so doubling makes every sum an exact integer index.
    doubled = np.rint(2.0 * ranks).astype(np.int64)
    counts = np.zeros(int(doubled.sum()) + 1)
    counts[0] = 1.0
    for r in doubled:
        counts[r:] = counts[r:] + counts[:-r]
    total = 2.0 ** len(ranks)
    w2 = int(round(2.0 * w_plus))
    cdf = counts[:w2 + 1].sum() / total
    sf = counts[w2:].sum() / total
    return min(1.0, 2.0 * min(cdf, sf))


def _approx_p(ranks: np.ndarray, w_plus: float) -> float:
    n = len(ranks)
    mean = n * (n + 1) / 4.0
    variance = n * (n + 1) * (2 * n + 1) / 24.0
    _, tie_sizes = np.unique(ranks, return_counts=True)
    variance -= (tie_sizes.astype(float) ** 3 - tie_sizes).sum() / 48.0
    if variance <= 0.0:
        return 1.0
    z = (w_plus - mean) / math.sqrt(variance)
    return math.erfc(abs(z) / math.sqrt(2.0))


def wilcoxon_signed_rank(a, b, method: str = "auto") -> WilcoxonResult:
    """Two-sided paired Wilcoxon signed-rank test of a vs b.

    method "exact" enumerates the 2^n sign distribution (n <= 25),
    "approx" uses the tie-corrected normal approximation, and "auto"
    picks exact when no zero differences had to be dropped, approx
    otherwise (matching the published tables this package checks against).
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError("need two equal-length 1-D paired samples")
    diffs = a - b
    nonzero = diffs[diffs != 0.0]
    zero_count = len(diffs) - len(nonzero)
    if len(nonzero) == 0:
        return WilcoxonResult(0.0, 1.0, "degenerate", 0, zero_count, degenerate=True)
    ranks = _midranks(np.abs(nonzero))
    w_plus = float(ranks[nonzero > 0].sum())
    if method == "auto":
        method = "approx" if zero_count > 0 or len(nonzero) > EXACT_LIMIT else "exact"
    if method == "exact":
        if len(nonzero) > EXACT_LIMIT:
            raise ValueError(f"exact enumeration capped at n={EXACT_LIMIT}")
        p = _exact_p(ranks, w_plus)
    elif method == "approx":
        p = _approx_p(ranks, w_plus)
    else:
        raise ValueError(f"unknown method {method!r}")
    return WilcoxonResult(w_plus, p, method, len(nonzero), zero_count)


def sample_std(values) -> float:
    """Standard deviation with the n-1 divisor (what the reference tables use)."""
    return float(np.std(np.asarray(values, dtype=float), ddof=1))
