"""Brute-force reference implementations.

These follow the definitions literally, with no pruning and no closed
forms, and exist to cross-check the fast paths.  They are exponential and
meant for small instances only; the package ``__init__`` does not import
this module.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import chain, combinations

from .core import Params, StratumLabel
from .errors import EmptyLabel

__all__ = [
    "powerset",
    "all_labels",
    "naive_chi",
    "naive_precedes",
    "naive_pj_stable",
    "naive_witness_search",
    "naive_intersection",
    "naive_maximal",
]


def powerset(items):
    items = list(items)
    return chain.from_iterable(combinations(items, n) for n in range(len(items) + 1))


def all_labels(k_max, m, include_empty=False):
    """Every label ``(k, I)`` with ``k <= k_max`` and ``I`` a subset of ``1..m``."""
    for k in range(k_max + 1):
        for idx in powerset(range(1, m + 1)):
            if k or idx or include_empty:
                yield StratumLabel(k, idx)


def naive_chi(params: Params, k, indices) -> Fraction:
    total = Fraction(k)
    for i in indices:
        total += 1 + params.alphas[i - 1]
    return total


def naive_precedes(l1: StratumLabel, l2: StratumLabel) -> bool:
    """Try every split of ``I1`` into a part inside ``I2`` and a part paid for by new free points."""
    if l2.k < l1.k:
        return False
    inside = set(l2.indices)
    for first in powerset(l1.indices):
        second = set(l1.indices) - set(first)
        if set(first) <= inside and len(second) <= l2.k - l1.k:
            return True
    return False


def naive_pj_stable(params: Params, j: int, k_cap: int) -> bool:
    """Quantify over all ``(k, I)`` with ``k <= k_cap``, the empty configuration included."""
    for k in range(k_cap + 1):
        for idx in powerset(range(1, params.m + 1)):
            if naive_chi(params, k, idx) < params.r:
                if not naive_chi(params, k, set(idx) | {j}) < params.r:
                    return False
    return True


def naive_witness_search(params: Params, k_cap: int) -> list:
    """Every ``(k, I)`` with ``1`` not in ``I`` and ``chi(k, I) < r < chi(k, I + {1})``."""
    out = []
    m = params.m
    for k in range(k_cap + 1):
        for idx in powerset(range(2, m + 1)):
            if k + len(idx) == 0:
                continue
            low = naive_chi(params, k, idx)
            high = naive_chi(params, k, set(idx) | {1}) if m else low + 1
            if low < params.r < high:
                out.append(StratumLabel(k, idx))
    return sorted(out)


def _down_set(lab, m):
    return {c for c in all_labels(lab.k, m) if naive_precedes(c, lab)}


def naive_intersection(l1: StratumLabel, l2: StratumLabel, m: int) -> set:
    """Full common down-set of two labels (not just its maximal elements)."""
    if l1.is_empty or l2.is_empty:
        raise EmptyLabel()
    return _down_set(l1, m) & _down_set(l2, m)


def naive_maximal(labels) -> list:
    labels = set(labels)
    return sorted(a for a in labels if not any(a != b and naive_precedes(a, b) for b in labels))
