"""Per-route metric aggregation and the decision lookup table."""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence

from .model import (
    EnumerationConstraints,
    MetricFactors,
    RouteCombination,
    RouteMetrics,
    TransportNetwork,
)


class MissingFactorError(KeyError):
    pass


def aggregate_metrics(
    network: TransportNetwork,
    combination: RouteCombination,
    factors: MetricFactors,
    constraints: EnumerationConstraints = EnumerationConstraints(),
) -> RouteMetrics:
    """Sum per-edge contributions plus per-transfer penalties.

    Emission, cost and fuel scale with distance times payload; time is
    distance over speed scaled by the segment's congestion multiplier and
    any scenario disruption multiplier. Transfer penalties are flat per
    mode change.
    """
    payload = constraints.payload_tonnes
    ghg = cost = time = fuel = distance = 0.0
    for seg_id, mode in zip(combination.edges, combination.modes):
        seg = network.segments[seg_id]
        try:
            row = factors.lookup(mode, constraints.fuel_for(mode))
        except KeyError as exc:
            raise MissingFactorError(str(exc)) from exc
        d = seg.distance_km
        ghg += d * payload * row.emission_kg_per_tkm
        cost += d * payload * row.cost_per_tkm
        fuel += d * payload * row.fuel_l_per_tkm
        time += (d / row.speed_kmh) * seg.congestion_multiplier \
            * constraints.segment_multiplier(seg_id)
        distance += d
    transfers = combination.transfers
    ghg += transfers * factors.transfer.ghg_kg
    cost += transfers * factors.transfer.cost
    time += transfers * factors.transfer.hours
    return RouteMetrics(
        total_ghg=ghg,
        total_cost=cost,
        total_time=time,
        total_fuel=fuel,
        total_distance=distance,
    )


@dataclass(frozen=True)
class LookupRow:
    key: str
    combination: RouteCombination
    metrics: RouteMetrics


@dataclass
class LookupTable:
    """One metrics row per combination, ordered by canonical key."""

    rows: List[LookupRow]

    def __len__(self) -> int:
        return len(self.rows)

    def keys(self) -> List[str]:
        return [row.key for row in self.rows]

    def values(self, criterion: str) -> List[float]:
        return [row.metrics.as_dict()[criterion] for row in self.rows]


def build_lookup_table(
    network: TransportNetwork,
    combinations: Sequence[RouteCombination],
    factors: MetricFactors,
    constraints: EnumerationConstraints = EnumerationConstraints(),
) -> LookupTable:
    """Aggregate every combination; failures identify the offending row."""
    rows = []
    for combination in combinations:
        try:
            metrics = aggregate_metrics(network, combination, factors, constraints)
        except MissingFactorError as exc:
            raise MissingFactorError(
                f"row {combination.canonical_key}: {exc}"
            ) from exc
        rows.append(LookupRow(combination.canonical_key, combination, metrics))
    rows.sort(key=lambda r: r.key)
    return LookupTable(rows)
