"""Rank-correlation metrics between two centrality score maps.

All three metrics take score dicts over the same label set.  Scores are
compared after rounding to 12 decimal digits so that float results from
fast mode rank the same way as their exact counterparts.

kendall_tau          -- tie-corrected (tau-b) Kendall correlation.
weighted_kendall_tau -- Kendall-style correlation where a discordant
                        pair of items costs the sum of their hyperbolic
                        rank weights 1/(rank+1); ranks are taken in both
                        rankings and averaged so the metric stays
                        symmetric.  Normalised so equal orders give 1
                        and exact reversals -1.
top_k_intersection   -- size of the intersection of the two top-k sets,
                        ties broken by ascending label.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Mapping


class RankingError(ValueError):
    """Mismatched label sets, degenerate scores, or invalid k."""


def _canonical(scores: Mapping[str, object]) -> dict[str, object]:
    # 12-digit rounding keeps Fraction/float runs rank-identical
    out = {}
    for label, v in scores.items():
        if isinstance(v, Fraction):
            out[label] = round(v, 12)
        else:
            out[label] = round(float(v), 12)
    return out


def _common_labels(a: Mapping[str, object], b: Mapping[str, object]) -> list[str]:
    if set(a) != set(b):
        only_a = sorted(set(a) - set(b))[:3]
        only_b = sorted(set(b) - set(a))[:3]
        raise RankingError(f"label sets differ (a-only {only_a}, b-only {only_b})")
    if len(a) < 2:
        raise RankingError("need at least 2 labels")
    return sorted(a)


def _ranks(scores: Mapping[str, object]) -> dict[str, int]:
    """0-based rank by descending score, ties broken by ascending label."""
    order = sorted(scores, key=lambda lab: (-_as_float(scores[lab]), lab))
    return {lab: r for r, lab in enumerate(order)}


def _as_float(v) -> float:
    return float(v)


def kendall_tau(a: Mapping[str, object], b: Mapping[str, object]) -> float:
    """Tau-b over all label pairs; errors if either ranking is constant."""
    labels = _common_labels(a, b)
    sa, sb = _canonical(a), _canonical(b)
    concord = discord = ties_a = ties_b = 0
    n = len(labels)
    for i in range(n):
        for j in range(i + 1, n):
            da = _cmp(sa[labels[i]], sa[labels[j]])
            db = _cmp(sb[labels[i]], sb[labels[j]])
            if da == 0 and db == 0:
                continue
            if da == 0:
                ties_a += 1
            elif db == 0:
                ties_b += 1
            elif da == db:
                concord += 1
            else:
                discord += 1
    denom = math.sqrt((concord + discord + ties_a) * (concord + discord + ties_b))
    if denom == 0:
        raise RankingError("kendall tau undefined for a constant ranking")
    return (concord - discord) / denom


def _cmp(x, y) -> int:
    if x < y:
        return -1
    if x > y:
        return 1
    return 0


def weighted_kendall_tau(a: Mapping[str, object], b: Mapping[str, object]) -> float:
    """Hyperbolically rank-weighted tau; top-of-ranking swaps cost more."""
    labels = _common_labels(a, b)
    sa, sb = _canonical(a), _canonical(b)
    ra, rb = _ranks(sa), _ranks(sb)
    weight = {
        lab: 0.5 * (1.0 / (ra[lab] + 1) + 1.0 / (rb[lab] + 1)) for lab in labels
    }
    num = norm_a = norm_b = 0.0
    n = len(labels)
    for i in range(n):
        for j in range(i + 1, n):
            w = weight[labels[i]] + weight[labels[j]]
            da = _cmp(sa[labels[i]], sa[labels[j]])
            db = _cmp(sb[labels[i]], sb[labels[j]])
            num += w * da * db
            norm_a += w * da * da
            norm_b += w * db * db
    denom = math.sqrt(norm_a * norm_b)
    if denom == 0:
        raise RankingError("weighted kendall tau undefined for a constant ranking")
    return num / denom


def top_k(scores: Mapping[str, object], k: int) -> list[str]:
    """Top-k labels by descending score, ties broken by ascending label."""
    if k > len(scores):
        raise RankingError(f"k={k} exceeds label count {len(scores)}")
    if k < 0:
        raise RankingError("k must be non-negative")
    sc = _canonical(scores)
    order = sorted(sc, key=lambda lab: (-_as_float(sc[lab]), lab))
    return order[:k]


def top_k_intersection(
    a: Mapping[str, object], b: Mapping[str, object], k: int
) -> int:
    """|top_k(a) & top_k(b)|, both sides tie-broken by label."""
    _common_labels(a, b)
    return len(set(top_k(a, k)) & set(top_k(b, k)))
