"""Scenario specifications and the end-to-end solve."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..freightnet.metrics import LookupTable, build_lookup_table
from ..freightnet.model import (
    CRITERIA,
    MODES,
    Disruption,
    EnumerationConstraints,
    MetricFactors,
    TransportNetwork,
)
from ..freightnet.paths import enumerate_combinations
from .rank import (
    lexicographic_best,
    normalize,
    pareto_front,
    weighted_rank,
    weighted_scores,
)

METHODS = ("weighted", "lexicographic", "pareto")


class ScenarioSpecError(ValueError):
    pass


@dataclass(frozen=True)
class ScenarioSpec:
    origin: str
    destination: str
    method: str = "weighted"
    weights: Dict[str, float] = field(default_factory=lambda: {"ghg": 1.0})
    lex_order: tuple = ()
    constraints: EnumerationConstraints = EnumerationConstraints()

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ScenarioSpecError(f"unknown method {self.method!r}")
        if self.method == "weighted" and not any(
            w > 0 for w in self.weights.values()
        ):
            raise ScenarioSpecError("weighted method needs a positive weight")
        if self.method == "lexicographic" and not self.lex_order:
            raise ScenarioSpecError("lexicographic method needs an order")
        for criterion in list(self.weights) + list(self.lex_order):
            if criterion not in CRITERIA:
                raise ScenarioSpecError(f"unknown criterion {criterion!r}")


def scenario_from_dict(data: dict) -> ScenarioSpec:
    """Parse the scenario JSON wire format."""
    try:
        origin = data["origin"]
        destination = data["destination"]
    except KeyError as exc:
        raise ScenarioSpecError(f"scenario missing field {exc}") from None
    raw = dict(data.get("constraints", {}))
    disruptions = tuple(
        Disruption(
            segment=d["segment"],
            closed=bool(d.get("closed", False)),
            multiplier=float(d.get("multiplier", 1.0)),
        )
        for d in raw.get("disruptions", [])
    )
    try:
        constraints = EnumerationConstraints(
            max_hops=int(raw.get("max_hops", 8)),
            detour_factor=float(raw.get("detour_factor", 2.0)),
            allowed_modes=tuple(raw.get("allowed_modes", MODES)),
            max_transfers=int(raw.get("max_transfers", 3)),
            disruptions=disruptions,
            payload_tonnes=float(raw.get("payload_tonnes", 1.0)),
            fuel_by_mode=tuple(
                (m, f) for m, f in dict(raw.get("fuel_by_mode", {})).items()
            ),
        )
    except ValueError as exc:
        raise ScenarioSpecError(str(exc)) from None
    return ScenarioSpec(
        origin=origin,
        destination=destination,
        method=data.get("method", "weighted"),
        weights={k: float(v) for k, v in data.get("weights", {"ghg": 1.0}).items()},
        lex_order=tuple(data.get("lex_order", [])),
        constraints=constraints,
    )


def scenario_to_dict(spec: ScenarioSpec) -> dict:
    return {
        "origin": spec.origin,
        "destination": spec.destination,
        "method": spec.method,
        "weights": dict(spec.weights),
        "lex_order": list(spec.lex_order),
        "constraints": {
            "max_hops": spec.constraints.max_hops,
            "detour_factor": spec.constraints.detour_factor,
            "allowed_modes": list(spec.constraints.allowed_modes),
            "max_transfers": spec.constraints.max_transfers,
            "disruptions": [
                {"segment": d.segment, "closed": d.closed, "multiplier": d.multiplier}
                for d in spec.constraints.disruptions
            ],
            "payload_tonnes": spec.constraints.payload_tonnes,
            "fuel_by_mode": dict(spec.constraints.fuel_by_mode),
        },
    }


@dataclass
class ScenarioResult:
    """Ranked and filtered outcomes plus the exact configuration used."""

    status: str  # "ok" | "unreachable"
    table: Optional[LookupTable]
    normalized: Dict[str, Dict[str, float]]
    scores: Dict[str, float]
    ranking: List[str]
    front: List[str]
    best: Optional[str]
    provenance: dict

    def to_dict(self) -> dict:
        rows = []
        if self.table is not None:
            for row in self.table.rows:
                rows.append(
                    {
                        "key": row.key,
                        "nodes": list(row.combination.nodes),
                        "edges": list(row.combination.edges),
                        "modes": list(row.combination.modes),
                        "transfers": row.combination.transfers,
                        "metrics": row.metrics.as_dict(),
                        "normalized": self.normalized.get(row.key, {}),
                        "score": self.scores.get(row.key),
                    }
                )
        return {
            "status": self.status,
            "rows": rows,
            "ranking": list(self.ranking),
            "pareto_front": list(self.front),
            "best": self.best,
            "provenance": self.provenance,
        }


def solve_scenario(
    network: TransportNetwork,
    factors: MetricFactors,
    spec: ScenarioSpec,
) -> ScenarioResult:
    """Enumerate, aggregate, normalize, and rank per the chosen method.

    An unreachable origin/destination pair yields an explicit
    "unreachable" result rather than an error; an equal pair is a
    precondition violation and raises.
    """
    combinations = enumerate_combinations(
        network, spec.origin, spec.destination, spec.constraints
    )
    provenance = {"scenario": scenario_to_dict(spec)}
    if not combinations:
        return ScenarioResult(
            status="unreachable",
            table=LookupTable([]),
            normalized={},
            scores={},
            ranking=[],
            front=[],
            best=None,
            provenance=provenance,
        )
    table = build_lookup_table(network, combinations, factors, spec.constraints)
    normalized = normalize(table)
    front = pareto_front(table)

    scores: Dict[str, float] = {}
    if spec.method == "weighted":
        ranking = weighted_rank(normalized, spec.weights)
        scores = weighted_scores(normalized, spec.weights)
        best = ranking[0]
    elif spec.method == "lexicographic":
        best = lexicographic_best(table, spec.lex_order)
        ranking = sorted(
            table.keys(),
            key=lambda key: tuple(
                dict(zip(CRITERIA, _row_values(table, key)))[c]
                for c in spec.lex_order
            ) + (key,),
        )
    else:  # pareto
        ranking = front + sorted(set(table.keys()) - set(front))
        best = front[0] if front else None
    return ScenarioResult(
        status="ok",
        table=table,
        normalized=normalized,
        scores=scores,
        ranking=ranking,
        front=front,
        best=best,
        provenance=provenance,
    )


def _row_values(table: LookupTable, key: str):
    for row in table.rows:
        if row.key == key:
            return [row.metrics.as_dict()[c] for c in CRITERIA]
    raise KeyError(key)
