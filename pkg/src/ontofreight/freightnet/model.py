"""Intermodal network model: hubs, segments, factors, routes, constraints."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Dict, List, Optional, Sequence, Tuple

MODES = ("road", "rail", "water")


@dataclass(frozen=True)
class Hub:
    id: str
    name: str
    region: str = ""
    intermodal: bool = False
    lon: float = 0.0
    lat: float = 0.0


@dataclass(frozen=True)
class Segment:
    id: str
    from_hub: str
    to_hub: str
    mode: str
    distance_km: float
    slope: Optional[float] = None
    one_way: bool = False
    congestion_multiplier: float = 1.0

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.distance_km <= 0:
            raise ValueError(f"segment {self.id}: distance must be positive")
        if self.congestion_multiplier < 1:
            raise ValueError(f"segment {self.id}: congestion multiplier must be >= 1")


class NetworkValidationError(ValueError):
    """Referential problems found while building a network, all at once."""

    def __init__(self, problems: List[str]) -> None:
        super().__init__("; ".join(problems))
        self.problems = problems


class TransportNetwork:
    """Immutable network with a bidirectional adjacency index.

    Segments are traversable both ways unless flagged one-way.
    """

    def __init__(self, hubs: Sequence[Hub], segments: Sequence[Segment]) -> None:
        problems = []
        self.hubs: Dict[str, Hub] = {}
        for hub in hubs:
            if hub.id in self.hubs:
                problems.append(f"duplicate hub id {hub.id!r}")
            self.hubs[hub.id] = hub
        self.segments: Dict[str, Segment] = {}
        for seg in segments:
            if seg.id in self.segments:
                problems.append(f"duplicate segment id {seg.id!r}")
            self.segments[seg.id] = seg
            for endpoint in (seg.from_hub, seg.to_hub):
                if endpoint not in self.hubs:
                    problems.append(
                        f"segment {seg.id!r} references unknown hub {endpoint!r}"
                    )
        if problems:
            raise NetworkValidationError(problems)

        self.adjacency: Dict[str, List[Tuple[str, str]]] = {h: [] for h in self.hubs}
        for seg in self.segments.values():
            self.adjacency[seg.from_hub].append((seg.id, seg.to_hub))
            if not seg.one_way:
                self.adjacency[seg.to_hub].append((seg.id, seg.from_hub))
        for entries in self.adjacency.values():
            entries.sort()

    def hub_modes(self, hub_id: str) -> List[str]:
        """Modes of segments incident to the hub, sorted."""
        modes = set()
        for seg in self.segments.values():
            if hub_id in (seg.from_hub, seg.to_hub):
                modes.add(seg.mode)
        return sorted(modes)


@dataclass(frozen=True)
class FactorRow:
    mode: str
    fuel: str
    emission_kg_per_tkm: float
    cost_per_tkm: float
    speed_kmh: float
    fuel_l_per_tkm: float

    def __post_init__(self) -> None:
        if self.speed_kmh <= 0:
            raise ValueError(f"{self.mode}/{self.fuel}: speed must be positive")
        for name in ("emission_kg_per_tkm", "cost_per_tkm", "fuel_l_per_tkm"):
            if getattr(self, name) < 0:
                raise ValueError(f"{self.mode}/{self.fuel}: {name} must be >= 0")


@dataclass(frozen=True)
class TransferPenalty:
    hours: float = 0.0
    cost: float = 0.0
    ghg_kg: float = 0.0


class MetricFactors:
    """Per (mode, fuel) cost/emission/speed factors plus transfer penalties."""

    def __init__(self, rows: Sequence[FactorRow],
                 transfer: TransferPenalty = TransferPenalty()) -> None:
        self._rows: Dict[Tuple[str, str], FactorRow] = {}
        for row in rows:
            self._rows[(row.mode, row.fuel)] = row
        self.transfer = transfer

    def lookup(self, mode: str, fuel: Optional[str] = None) -> FactorRow:
        """Factor row for the mode; default fuel is the first alphabetically."""
        if fuel is not None:
            row = self._rows.get((mode, fuel))
            if row is None:
                raise KeyError(f"no factor row for mode={mode!r} fuel={fuel!r}")
            return row
        fuels = sorted(f for m, f in self._rows if m == mode)
        if not fuels:
            raise KeyError(f"no factor rows for mode {mode!r}")
        return self._rows[(mode, fuels[0])]

    def modes(self) -> List[str]:
        return sorted({m for m, _ in self._rows})


@dataclass(frozen=True)
class RouteCombination:
    """A simple path with a per-edge mode assignment."""

    nodes: Tuple[str, ...]
    edges: Tuple[str, ...]
    modes: Tuple[str, ...]

    def __post_init__(self) -> None:
        if len(self.edges) != len(self.nodes) - 1:
            raise ValueError("edge count must be node count - 1")
        if len(self.modes) != len(self.edges):
            raise ValueError("one mode per edge required")
        if len(set(self.nodes)) != len(self.nodes):
            raise ValueError("route must be a simple path")

    @property
    def transfers(self) -> int:
        return sum(
            1 for a, b in zip(self.modes, self.modes[1:]) if a != b
        )

    @property
    def canonical_key(self) -> str:
        return ">".join(self.nodes) + "|" + "+".join(self.modes)


@dataclass(frozen=True)
class RouteMetrics:
    total_ghg: float
    total_cost: float
    total_time: float
    total_fuel: float
    total_distance: float

    def as_dict(self) -> dict:
        return {
            "ghg": self.total_ghg,
            "cost": self.total_cost,
            "time": self.total_time,
            "fuel": self.total_fuel,
            "distance": self.total_distance,
        }


CRITERIA = ("ghg", "cost", "time", "fuel", "distance")


@dataclass(frozen=True)
class Disruption:
    segment: str
    closed: bool = False
    multiplier: float = 1.0

    def __post_init__(self) -> None:
        if self.multiplier < 1:
            raise ValueError("disruption multiplier must be >= 1")


@dataclass(frozen=True)
class EnumerationConstraints:
    max_hops: int = 8
    detour_factor: float = 2.0
    allowed_modes: Tuple[str, ...] = MODES
    max_transfers: int = 3
    disruptions: Tuple[Disruption, ...] = ()
    payload_tonnes: float = 1.0
    fuel_by_mode: Tuple[Tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        if self.max_hops < 1:
            raise ValueError("max_hops must be >= 1")
        if self.detour_factor < 1:
            raise ValueError("detour factor must be >= 1")
        if self.payload_tonnes <= 0:
            raise ValueError("payload must be positive")
        for mode in self.allowed_modes:
            if mode not in MODES:
                raise ValueError(f"unknown mode {mode!r}")

    def closed_segments(self) -> set:
        return {d.segment for d in self.disruptions if d.closed}

    def segment_multiplier(self, segment_id: str) -> float:
        factor = 1.0
        for d in self.disruptions:
            if d.segment == segment_id and not d.closed:
                factor *= d.multiplier
        return factor

    def fuel_for(self, mode: str) -> Optional[str]:
        for m, fuel in self.fuel_by_mode:
            if m == mode:
                return fuel
        return None

    def replace(self, **kwargs) -> "EnumerationConstraints":
        return replace(self, **kwargs)
