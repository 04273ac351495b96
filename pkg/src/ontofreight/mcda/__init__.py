"""Multi-criteria ranking: weighted sum, lexicographic, Pareto filtering."""

from .rank import (
    EmptyTableError,
    lexicographic_best,
    normalize,
    pareto_front,
    weighted_rank,
    weighted_scores,
)
from .scenario import (
    METHODS,
    ScenarioResult,
    ScenarioSpec,
    ScenarioSpecError,
    scenario_from_dict,
    scenario_to_dict,
    solve_scenario,
)

__all__ = [
    "METHODS",
    "EmptyTableError",
    "ScenarioResult",
    "ScenarioSpec",
    "ScenarioSpecError",
    "lexicographic_best",
    "normalize",
    "pareto_front",
    "scenario_from_dict",
    "scenario_to_dict",
    "solve_scenario",
    "weighted_rank",
    "weighted_scores",
]
