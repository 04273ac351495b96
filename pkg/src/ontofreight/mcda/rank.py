"""Ranking and filtering over the route lookup table.

All criteria are costs: smaller is better everywhere. Ties break by
canonical key so results are reproducible.
"""

from __future__ import annotations

from typing import Dict, List, Sequence

import numpy as np

from .._kernels import pareto_mask
from ..freightnet.metrics import LookupTable
from ..freightnet.model import CRITERIA


class EmptyTableError(ValueError):
    pass


def normalize(table: LookupTable) -> Dict[str, Dict[str, float]]:
    """Min-max normalize each criterion into [0, 1] per row key.

    A constant column normalizes to 0 for every row.
    """
    if not table.rows:
        raise EmptyTableError("cannot normalize an empty table")
    normalized: Dict[str, Dict[str, float]] = {row.key: {} for row in table.rows}
    for criterion in CRITERIA:
        values = table.values(criterion)
        low, high = min(values), max(values)
        span = high - low
        for row, value in zip(table.rows, values):
            normalized[row.key][criterion] = (
                0.0 if span == 0 else (value - low) / span
            )
    return normalized


def weighted_rank(
    normalized: Dict[str, Dict[str, float]], weights: Dict[str, float]
) -> List[str]:
    """Keys by ascending weighted score; requires a positive weight."""
    if not any(w > 0 for w in weights.values()):
        raise ValueError("weighted ranking needs at least one positive weight")
    for criterion, weight in weights.items():
        if criterion not in CRITERIA:
            raise ValueError(f"unknown criterion {criterion!r}")
        if weight < 0:
            raise ValueError("criterion weights must be >= 0")
    scores = {
        key: sum(weights.get(c, 0.0) * row[c] for c in CRITERIA)
        for key, row in normalized.items()
    }
    return sorted(scores, key=lambda key: (scores[key], key))


def weighted_scores(
    normalized: Dict[str, Dict[str, float]], weights: Dict[str, float]
) -> Dict[str, float]:
    return {
        key: sum(weights.get(c, 0.0) * row[c] for c in CRITERIA)
        for key, row in normalized.items()
    }


def pareto_front(table: LookupTable) -> List[str]:
    """Keys of non-dominated rows, sorted.

    A row is excluded exactly when another row is no worse on every
    criterion and strictly better on at least one.
    """
    if not table.rows:
        return []
    values = np.array(
        [[row.metrics.as_dict()[c] for c in CRITERIA] for row in table.rows],
        dtype=np.float64,
    )
    mask = pareto_mask(values)
    return sorted(row.key for row, keep in zip(table.rows, mask) if keep)


def lexicographic_best(table: LookupTable, order: Sequence[str]) -> str:
    """Minimize criteria in the given priority order; final ties by key."""
    if not table.rows:
        raise EmptyTableError("cannot rank an empty table")
    if not order:
        raise ValueError("lexicographic order must be non-empty")
    for criterion in order:
        if criterion not in CRITERIA:
            raise ValueError(f"unknown criterion {criterion!r}")
    best = min(
        table.rows,
        key=lambda row: tuple(row.metrics.as_dict()[c] for c in order) + (row.key,),
    )
    return best.key
