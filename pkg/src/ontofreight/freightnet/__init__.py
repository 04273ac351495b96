"""Intermodal transport network: model, loaders, enumeration, metrics."""

from .io import (
    FACTOR_COLUMNS,
    HUB_COLUMNS,
    SEGMENT_COLUMNS,
    load_factors,
    load_factors_dir,
    load_network,
    load_network_dir,
)
from .metrics import (
    LookupRow,
    LookupTable,
    MissingFactorError,
    aggregate_metrics,
    build_lookup_table,
)
from .model import (
    CRITERIA,
    MODES,
    Disruption,
    EnumerationConstraints,
    FactorRow,
    Hub,
    MetricFactors,
    NetworkValidationError,
    RouteCombination,
    RouteMetrics,
    Segment,
    TransferPenalty,
    TransportNetwork,
)
from .paths import UnknownHubError, enumerate_combinations, shortest_distance

__all__ = [
    "CRITERIA",
    "FACTOR_COLUMNS",
    "HUB_COLUMNS",
    "MODES",
    "SEGMENT_COLUMNS",
    "Disruption",
    "EnumerationConstraints",
    "FactorRow",
    "Hub",
    "LookupRow",
    "LookupTable",
    "MetricFactors",
    "MissingFactorError",
    "NetworkValidationError",
    "RouteCombination",
    "RouteMetrics",
    "Segment",
    "TransferPenalty",
    "TransportNetwork",
    "UnknownHubError",
    "aggregate_metrics",
    "build_lookup_table",
    "enumerate_combinations",
    "load_factors",
    "load_factors_dir",
    "load_network",
    "load_network_dir",
    "shortest_distance",
]
